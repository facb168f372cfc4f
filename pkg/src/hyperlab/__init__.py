"""Finite commutative Krasner (m,n)-hyperrings: axiom checking, hyperideal
enumeration, prime-type predicates, and an executable statement suite."""

from .axioms import (
    AXIOM_ORDER,
    AxiomViolation,
    check_canonical_hypergroup,
    check_krasner,
    inverse_candidates,
    inverse_map,
    iterate_f,
    iterate_g,
    replay,
    require_valid,
)
from .constructions import (
    Fixture,
    Homomorphism,
    crt_homomorphism,
    fixture,
    identity_homomorphism,
    inclusion,
    preimage_ideal,
    product,
    product_ideal,
    product_mult_set,
    substructure,
)
from .core import MAX_CARRIER, ElementSet, HyperStructure
from .errors import (
    ArityError,
    CapacityError,
    DisjointnessViolated,
    EmptyArgumentError,
    HyperlabError,
    IdentityRequired,
    LoadError,
    NotAnIdeal,
    NotMultiplicative,
    NotProper,
    StructureInvalid,
    TableError,
    UnknownElementError,
    UnknownFixtureError,
)
from .files import (
    deserialize,
    document_to_structure,
    dump_structure,
    load_packaged,
    load_structure,
    serialize,
    structure_to_document,
)
from .harness import (
    COUNTEREXAMPLE,
    DEFAULT_CORPUS,
    PROPERTY_IDS,
    SKIPPED,
    VERIFIED,
    Instance,
    PropertyReport,
    StructureContext,
    build_context,
    build_corpus,
    generate_instances,
    render_report_lines,
    reports_to_json,
    run_property,
    run_suite,
    search_separating_instances,
    summarize,
)
from .ideals import (
    IdealLattice,
    colon,
    colon_zero,
    enumerate_hyperideals,
    generated_hyperideal,
    is_hyperideal,
    radical,
    radical_membership,
    scaled,
    scaled_set,
    set_product,
)
from .predicates import (
    CLASSIFY_KEYS,
    IMPLICATION_CHAIN,
    chain_violations,
    classify,
    evaluate_predicate,
    is_hyperintegral_domain,
    is_multiplicative,
    is_primary,
    is_prime,
    is_s_prime,
    is_strongly_weakly_s_prime,
    is_strongly_weakly_s_prime_colon,
    is_weakly_prime,
    is_weakly_s_prime,
    multiplicative_subsets,
    strongly_associated,
)
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "AXIOM_ORDER",
    "ArityError",
    "AxiomViolation",
    "CLASSIFY_KEYS",
    "COUNTEREXAMPLE",
    "CapacityError",
    "DEFAULT_CORPUS",
    "DisjointnessViolated",
    "ElementSet",
    "EmptyArgumentError",
    "Fixture",
    "Homomorphism",
    "HyperStructure",
    "HyperlabError",
    "IMPLICATION_CHAIN",
    "IdealLattice",
    "IdentityRequired",
    "Instance",
    "LoadError",
    "MAX_CARRIER",
    "NotAnIdeal",
    "NotMultiplicative",
    "NotProper",
    "PROPERTY_IDS",
    "PropertyReport",
    "SKIPPED",
    "StructureContext",
    "StructureInvalid",
    "TableError",
    "UnknownElementError",
    "UnknownFixtureError",
    "VERIFIED",
    "Verdict",
    "build_context",
    "build_corpus",
    "chain_violations",
    "check_canonical_hypergroup",
    "check_krasner",
    "classify",
    "colon",
    "colon_zero",
    "crt_homomorphism",
    "deserialize",
    "document_to_structure",
    "dump_structure",
    "enumerate_hyperideals",
    "evaluate_predicate",
    "fixture",
    "generate_instances",
    "generated_hyperideal",
    "identity_homomorphism",
    "inclusion",
    "inverse_candidates",
    "inverse_map",
    "is_hyperideal",
    "is_hyperintegral_domain",
    "is_multiplicative",
    "is_primary",
    "is_prime",
    "is_s_prime",
    "is_strongly_weakly_s_prime",
    "is_strongly_weakly_s_prime_colon",
    "is_weakly_prime",
    "is_weakly_s_prime",
    "iterate_f",
    "iterate_g",
    "load_packaged",
    "load_structure",
    "multiplicative_subsets",
    "preimage_ideal",
    "product",
    "product_ideal",
    "product_mult_set",
    "radical",
    "radical_membership",
    "render_report_lines",
    "replay",
    "reports_to_json",
    "require_valid",
    "run_property",
    "run_suite",
    "scaled",
    "scaled_set",
    "search_separating_instances",
    "serialize",
    "set_product",
    "strongly_associated",
    "structure_to_document",
    "substructure",
    "summarize",
]
