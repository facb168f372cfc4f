"""Executable statement suite over a fixture corpus.

Nineteen registered statements (P1..P19) about prime-flavored hyperideals
are replayed as exhaustive instance scans.  Every instance resolves to one
of three statuses:

* VERIFIED       hypotheses hold and the claimed conclusion checks out
* COUNTEREXAMPLE hypotheses hold but the conclusion fails (certificate
                 carries the offending data)
* SKIPPED        hypotheses unsatisfied, an identity element would be
                 required but is absent, or a capacity budget was exceeded

Two pseudo ids accompany them: AXIOMS (one record per corpus structure,
replaying the full validity check) and DISCREPANCY (records the known
defects of non-canonical fixtures; these stay SKIPPED so a clean corpus
report contains no COUNTEREXAMPLE rows).

Instance generation is fully deterministic: no sampling, no clocks, and
JSON reports are byte-identical across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .axioms import check_krasner
from .constructions import (
    Fixture,
    fixture,
    crt_homomorphism,
    identity_homomorphism,
    inclusion,
    preimage_ideal,
    product,
    product_ideal,
    product_mult_set,
    substructure,
)
from .core import ElementSet, HyperStructure, graded_multisets, multiset_splits
from .errors import (
    CapacityError,
    DisjointnessViolated,
    IdentityRequired,
    NotProper,
)
from .ideals import (
    IdealLattice,
    colon,
    colon_zero,
    enumerate_hyperideals,
    radical,
    scaled,
    scaled_set,
    set_product,
)
from .predicates import (
    evaluate_predicate,
    is_hyperintegral_domain,
    is_prime,
    is_s_prime,
    is_strongly_weakly_s_prime,
    is_strongly_weakly_s_prime_colon,
    is_weakly_prime,
    is_weakly_s_prime,
    multiplicative_subsets,
    strongly_associated,
)

DEFAULT_CORPUS = (
    "paper-2-4",
    "ring:Z4",
    "ring:Z6",
    "ring:Z12",
    "ring:Z2xZ3",
    "ring:Z4xZ3",
)

PROPERTY_IDS = tuple(f"P{i}" for i in range(1, 20))

VERIFIED = "VERIFIED"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
SKIPPED = "SKIPPED"

# mult-set search caps: products get a tighter cap to bound the scans
MULT_SIZE_CAP = 3
PRODUCT_MULT_SIZE_CAP = 2


@dataclass(frozen=True)
class PropertyReport:
    property_id: str
    instance: str
    status: str
    reason: str = ""
    certificate: object = None


@dataclass(frozen=True)
class Instance:
    property_id: str
    description: str
    payload: dict = field(compare=False)


@dataclass
class StructureContext:
    """A fixture prepared for the suite: validity scan, lattice, mult sets."""

    fixture: Fixture
    violations: tuple
    lattice: IdealLattice | None
    lattice_error: str
    mult_sets: tuple[ElementSet, ...]

    @property
    def name(self) -> str:
        return self.fixture.name

    @property
    def structure(self) -> HyperStructure:
        return self.fixture.structure

    @property
    def usable(self) -> bool:
        return (self.fixture.canonical and not self.violations
                and self.lattice is not None)


_context_cache: dict[tuple[str, int], StructureContext] = {}


def build_context(name: str, mult_cap: int = MULT_SIZE_CAP) -> StructureContext:
    key = (name, mult_cap)
    if key not in _context_cache:
        fx = fixture(name)
        violations = tuple(check_krasner(fx.structure))
        lattice, err = None, ""
        if not violations:
            try:
                lattice = enumerate_hyperideals(fx.structure)
            except CapacityError as exc:
                err = str(exc)
        else:
            err = "structure fails the validity scan"
        mult_sets = tuple(multiplicative_subsets(fx.structure, mult_cap))
        _context_cache[key] = StructureContext(fx, violations, lattice, err, mult_sets)
    return _context_cache[key]


def build_corpus(names, mult_cap: int = MULT_SIZE_CAP) -> list[StructureContext]:
    return [build_context(name, mult_cap) for name in names]


def _render(a: HyperStructure, subset: ElementSet) -> str:
    return subset.render(a.names)


def _bool_by_convention(fn, *args, **kwargs) -> bool:
    """Predicate value with precondition failures folded to False.

    Product-statement equivalences quantify over ideal/mult-set pairs that
    may collide; a pair violating disjointness or propriety makes the
    predicate false rather than ill-posed there.
    """
    try:
        return bool(fn(*args, **kwargs).holds)
    except (DisjointnessViolated, NotProper):
        return False


def _instance(pid: str, description: str, **payload) -> Instance:
    return Instance(pid, description, payload)


def _qs_pairs(ctx: StructureContext):
    for q in ctx.lattice.proper():
        for s in ctx.mult_sets:
            if not (q & s):
                yield q, s


def _nonzero_ideals(lattice: IdealLattice) -> list[ElementSet]:
    zero_mask = 1 << lattice.structure.zero
    return [q for q in lattice.sets if q.mask != zero_mask]


def _zero_radical(ctx: StructureContext) -> ElementSet:
    a = ctx.structure
    return radical(a, a.zero_set(), ctx.lattice)


# ---------------------------------------------------------------- P1 .. P5

def _gen_p1(corpus):
    for ctx in corpus:
        if not ctx.usable:
            continue
        a = ctx.structure
        for q, s in _qs_pairs(ctx):
            meeting = [i for i, p in enumerate(ctx.lattice.sets) if p & s]
            for js in combinations_with_replacement(meeting, a.n - 1):
                desc = (f"{ctx.name}: Q={_render(a, q)} S={_render(a, s)} "
                        f"ideals={[_render(a, ctx.lattice[j]) for j in js]}")
                yield _instance("P1", desc, ctx=ctx, q=q, s=s, js=js)


def _eval_p1(payload):
    ctx, q, s, js = payload["ctx"], payload["q"], payload["s"], payload["js"]
    a = ctx.structure
    if not is_weakly_s_prime(a, q, s).holds:
        return SKIPPED, "Q is not weakly S-prime", None
    image = a.eval_g_on_sets([ctx.lattice[j] for j in js] + [q])
    ok = _bool_by_convention(is_weakly_s_prime, a, image, s)
    cert = {"image": _render(a, image)}
    if ok:
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "product set lost weak S-primeness", cert


def _gen_p2(corpus):
    for ctx in corpus:
        if not ctx.usable:
            continue
        a = ctx.structure
        for q, s in _qs_pairs(ctx):
            for p in ctx.lattice.sets:
                if p & s:
                    desc = (f"{ctx.name}: Q={_render(a, q)} S={_render(a, s)} "
                            f"P={_render(a, p)}")
                    yield _instance("P2", desc, ctx=ctx, q=q, s=s, p=p)


def _eval_p2(payload):
    ctx, q, s, p = payload["ctx"], payload["q"], payload["s"], payload["p"]
    a = ctx.structure
    if not is_weakly_s_prime(a, q, s).holds:
        return SKIPPED, "Q is not weakly S-prime", None
    meet = q & p
    ok = _bool_by_convention(is_weakly_s_prime, a, meet, s)
    cert = {"intersection": _render(a, meet)}
    if ok:
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "intersection lost weak S-primeness", cert


def _gen_p3(corpus):
    for ctx in corpus:
        if not ctx.usable:
            continue
        a = ctx.structure
        for q, s in _qs_pairs(ctx):
            desc = f"{ctx.name}: Q={_render(a, q)} S={_render(a, s)}"
            yield _instance("P3", desc, ctx=ctx, q=q, s=s)


def _eval_p3(payload):
    ctx, q, s = payload["ctx"], payload["q"], payload["s"]
    a = ctx.structure
    chosen = None
    for cand in s:
        quotient = colon(a, q, cand)
        if quotient.mask == a.full_set().mask:
            continue
        if is_weakly_prime(a, quotient).holds:
            chosen = cand
            break
    if chosen is None:
        return SKIPPED, "no s in S with a weakly prime colon ideal", None
    verdict = is_weakly_s_prime(a, q, s)
    cert = {"s": a.names[chosen],
            "colon": _render(a, colon(a, q, chosen))}
    if verdict.holds:
        return VERIFIED, "", cert
    cert["counterexample"] = verdict.render(a.names)
    return COUNTEREXAMPLE, "weakly prime colon did not force weak S-primeness", cert


def _gen_p4(corpus):
    for ctx in corpus:
        if not ctx.usable:
            continue
        for s in ctx.mult_sets:
            desc = f"{ctx.name}: S={_render(ctx.structure, s)}"
            yield _instance("P4", desc, ctx=ctx, s=s)


def _eval_p4(payload):
    ctx, s = payload["ctx"], payload["s"]
    a = ctx.structure
    disjoint = [q for q in ctx.lattice.proper() if not (q & s)]

    def all_weakly_are_prime() -> bool:
        for q in disjoint:
            if is_weakly_s_prime(a, q, s).holds and not is_prime(a, q).holds:
                return False
        return True

    def all_s_prime_are_prime() -> bool:
        for q in disjoint:
            if is_s_prime(a, q, s).holds and not is_prime(a, q).holds:
                return False
        return True

    lhs = all_weakly_are_prime()
    rhs = is_hyperintegral_domain(a).holds and all_s_prime_are_prime()
    cert = {"collapse": lhs, "domain_and_collapse": rhs}
    if lhs == rhs:
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "equivalence fails for this (A, S)", cert


def _gen_p5(corpus):
    for ctx in corpus:
        if not ctx.usable:
            continue
        a = ctx.structure
        for s in ctx.mult_sets:
            for t in ctx.mult_sets:
                if not (s <= t):
                    continue
                for q in ctx.lattice.proper():
                    if q & t:
                        continue
                    desc = (f"{ctx.name}: S={_render(a, s)} T={_render(a, t)} "
                            f"Q={_render(a, q)}")
                    yield _instance("P5", desc, ctx=ctx, s=s, t=t, q=q)


def _transfer_condition(a: HyperStructure, s: ElementSet, t: ElementSet) -> bool:
    # every t has a partner t' pulling the (n-1)-th power back into S
    for t_elt in t:
        if not any(a.eval_g((t_elt,) * (a.n - 1) + (t2,)) in s for t2 in t):
            return False
    return True


def _eval_p5(payload):
    ctx, s, t, q = payload["ctx"], payload["s"], payload["t"], payload["q"]
    a = ctx.structure
    if not _transfer_condition(a, s, t):
        return SKIPPED, "power-partner condition between S and T fails", None
    if not is_weakly_s_prime(a, q, t).holds:
        return SKIPPED, "Q is not weakly T-prime", None
    verdict = is_weakly_s_prime(a, q, s)
    if verdict.holds:
        return VERIFIED, "", None
    return COUNTEREXAMPLE, "weak T-primeness did not shrink to S", {
        "counterexample": verdict.render(a.names)}


# --------------------------------------------------------------- P6 .. P14

def _gen_p6(corpus):
    for ctx in corpus:
        if not ctx.usable:
            continue
        a = ctx.structure
        for q, s in _qs_pairs(ctx):
            desc = f"{ctx.name}: Q={_render(a, q)} S={_render(a, s)}"
            yield _instance("P6", desc, ctx=ctx, q=q, s=s)


def _eval_p6(payload):
    ctx, q, s = payload["ctx"], payload["q"], payload["s"]
    a = ctx.structure
    zero_mask = 1 << a.zero
    associated = [cand for cand in s
                  if strongly_associated(a, q, cand, ctx.lattice)]
    if not associated:
        return SKIPPED, "no s in S passes the ideal-wise zero test", None
    checked = 0
    for cand in associated:
        for ms in graded_multisets(range(a.size), a.n):
            if a.eval_g(ms) != a.zero:
                continue
            if any(scaled(a, cand, x) in q for x in set(ms)):
                continue
            checked += 1
            for take in range(0, a.n):
                # take elements stay, the rest are replaced by Q
                for kept, _ in multiset_splits(ms, take):
                    sets = [ElementSet.single(x, a.size) for x in kept]
                    sets += [q] * (a.n - take)
                    image = a.eval_g_on_sets(sets)
                    if image.mask != zero_mask:
                        cert = {"s": a.names[cand],
                                "tuple": [a.names[x] for x in ms],
                                "kept": [a.names[x] for x in kept],
                                "image": _render(a, image)}
                        return (COUNTEREXAMPLE,
                                "a Q-padded product escaped zero", cert)
    if checked == 0:
        return SKIPPED, "no zero product avoids Q after scaling by s", None
    return VERIFIED, "", {"tuples_checked": checked}


def _gen_p7(corpus):
    for ctx in corpus:
        if not ctx.usable:
            continue
        a = ctx.structure
        for q, s in _qs_pairs(ctx):
            desc = f"{ctx.name}: Q={_render(a, q)} S={_render(a, s)}"
            yield _instance("P7", desc, ctx=ctx, q=q, s=s)


def _eval_p7(payload):
    ctx, q, s = payload["ctx"], payload["q"], payload["s"]
    a = ctx.structure
    budget = payload.get("budget")
    if not is_strongly_weakly_s_prime(a, q, s, ctx.lattice, budget).holds:
        return SKIPPED, "Q is not strongly weakly S-prime", None
    if is_s_prime(a, q, s).holds:
        return SKIPPED, "Q is S-prime, hypothesis needs the failure", None
    image = set_product(a, [q] * a.n)
    cert = {"power_image": _render(a, image)}
    if image.mask == 1 << a.zero:
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "n-th power of Q is not zero", cert


def _gen_p8(corpus):
    yield from _relabel(_gen_p7(corpus), "P8")


def _relabel(instances, pid):
    for inst in instances:
        yield Instance(pid, inst.description, inst.payload)


def _eval_p8(payload):
    ctx, q, s = payload["ctx"], payload["q"], payload["s"]
    a = ctx.structure
    budget = payload.get("budget")
    if not is_strongly_weakly_s_prime(a, q, s, ctx.lattice, budget).holds:
        return SKIPPED, "Q is not strongly weakly S-prime", None
    rad0 = _zero_radical(ctx)
    if q <= rad0:
        return VERIFIED, "", {"branch": "Q inside rad(0)",
                              "rad0": _render(a, rad0)}
    for cand in s:
        if scaled_set(a, cand, rad0) <= q:
            return VERIFIED, "", {"branch": f"s*rad(0) inside Q at s={a.names[cand]}",
                                  "rad0": _render(a, rad0)}
    return COUNTEREXAMPLE, "neither containment holds", {
        "rad0": _render(a, rad0)}


def _gen_p9(corpus):
    for ctx in corpus:
        if not ctx.usable or ctx.structure.one is None:
            continue
        a = ctx.structure
        for q in ctx.lattice.proper():
            if a.one in q:
                continue
            desc = f"{ctx.name}: Q={_render(a, q)}"
            yield _instance("P9", desc, ctx=ctx, q=q)


def _eval_p9(payload):
    ctx, q = payload["ctx"], payload["q"]
    a = ctx.structure
    unit = ElementSet.single(a.one, a.size)
    if not is_strongly_weakly_s_prime(a, q, unit, ctx.lattice,
                                      payload.get("budget")).holds:
        return SKIPPED, "Q is not strongly weakly prime (S = {1})", None
    if is_prime(a, q).holds:
        return SKIPPED, "Q is prime, hypothesis needs the failure", None
    image = set_product(a, [q] * a.n)
    cert = {"power_image": _render(a, image)}
    if image.mask == 1 << a.zero:
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "n-th power of Q is not zero", cert


def _gen_p10(corpus):
    yield from _relabel(_gen_p7(corpus), "P10")


def _eval_p10(payload):
    ctx, q, s = payload["ctx"], payload["q"], payload["s"]
    a = ctx.structure
    direct = is_strongly_weakly_s_prime(a, q, s, ctx.lattice,
                                        payload.get("budget"))
    via_colon = is_strongly_weakly_s_prime_colon(a, q, s)
    cert = {"direct": bool(direct.holds), "colon": bool(via_colon.holds)}
    if bool(direct.holds) == bool(via_colon.holds):
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "direct and colon routes disagree", cert


def _gen_p11(corpus):
    for ctx in corpus:
        if not ctx.usable or ctx.structure.one is None:
            continue
        a = ctx.structure
        for q in ctx.lattice.proper():
            if a.one in q:
                continue
            desc = f"{ctx.name}: Q={_render(a, q)}"
            yield _instance("P11", desc, ctx=ctx, q=q)


def _eval_p11(payload):
    ctx, q = payload["ctx"], payload["q"]
    a = ctx.structure
    unit = ElementSet.single(a.one, a.size)
    direct = bool(is_strongly_weakly_s_prime(a, q, unit, ctx.lattice,
                                             payload.get("budget")).holds)
    by_equality = True
    by_inclusion = True
    for x in range(a.size):
        if x in q:
            continue
        quotient = colon(a, q, x)
        annihilator = colon_zero(a, x)
        if quotient.mask == annihilator.mask:
            continue
        if quotient.mask != q.mask:
            by_equality = False
        if not (quotient <= q):
            by_inclusion = False
    cert = {"direct": direct, "colon_equality": by_equality,
            "colon_inclusion": by_inclusion}
    if direct == by_equality == by_inclusion:
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "colon characterization disagrees", cert


def _gen_p12(corpus):
    yield from _relabel(_gen_p7(corpus), "P12")


def _eval_p12(payload):
    ctx, q, s = payload["ctx"], payload["q"], payload["s"]
    a = ctx.structure
    budget = payload.get("budget")
    if not is_strongly_weakly_s_prime(a, q, s, ctx.lattice, budget).holds:
        return SKIPPED, "Q is not strongly weakly S-prime", None
    if is_s_prime(a, q, s).holds:
        return SKIPPED, "Q is S-prime, hypothesis needs the failure", None
    rad0 = _zero_radical(ctx)
    zero_mask = 1 << a.zero
    for cand in s:
        image = a.eval_g_on_sets(
            [scaled_set(a, cand, rad0)] + [q] * (a.n - 1))
        if image.mask == zero_mask:
            return VERIFIED, "", {"s": a.names[cand],
                                  "rad0": _render(a, rad0)}
    return COUNTEREXAMPLE, "no s sends s*rad(0)*Q^(n-1) to zero", {
        "rad0": _render(a, rad0)}


def _gen_p13(corpus):
    for ctx in corpus:
        if not ctx.usable:
            continue
        a = ctx.structure
        proper = list(ctx.lattice.proper())
        for i, q1 in enumerate(proper):
            for q2 in proper[i:]:
                for s in ctx.mult_sets:
                    if (q1 & s) or (q2 & s):
                        continue
                    desc = (f"{ctx.name}: Q1={_render(a, q1)} "
                            f"Q2={_render(a, q2)} S={_render(a, s)}")
                    yield _instance("P13", desc, ctx=ctx, q1=q1, q2=q2, s=s)


def _eval_p13(payload):
    ctx, q1, q2, s = payload["ctx"], payload["q1"], payload["q2"], payload["s"]
    a = ctx.structure
    budget = payload.get("budget")
    for q in (q1, q2):
        if not is_strongly_weakly_s_prime(a, q, s, ctx.lattice, budget).holds:
            return SKIPPED, "an ideal is not strongly weakly S-prime", None
        if is_s_prime(a, q, s).holds:
            return SKIPPED, "an ideal is S-prime, hypothesis needs failures", None
    zero_mask = 1 << a.zero
    for cand in s:
        first = a.eval_g_on_sets([scaled_set(a, cand, q1)] + [q2] * (a.n - 1))
        second = a.eval_g_on_sets([scaled_set(a, cand, q2)] + [q1] * (a.n - 1))
        if first.mask == zero_mask and second.mask == zero_mask:
            return VERIFIED, "", {"s": a.names[cand]}
    return COUNTEREXAMPLE, "no shared s kills both mixed products", None


def _gen_p14(corpus):
    yield from _relabel(_gen_p9(corpus), "P14")


def _eval_p14(payload):
    ctx, q = payload["ctx"], payload["q"]
    a = ctx.structure
    unit = ElementSet.single(a.one, a.size)
    if not is_strongly_weakly_s_prime(a, q, unit, ctx.lattice,
                                      payload.get("budget")).holds:
        return SKIPPED, "Q is not strongly weakly prime (S = {1})", None
    if is_prime(a, q).holds:
        return SKIPPED, "Q is prime, hypothesis needs the failure", None
    rad0 = _zero_radical(ctx)
    image = a.eval_g_on_sets([rad0] + [q] * (a.n - 1))
    cert = {"rad0": _render(a, rad0), "image": _render(a, image)}
    if image.mask == 1 << a.zero:
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "rad(0)*Q^(n-1) is not zero", cert


# -------------------------------------------------------------- P15 .. P19

def _corpus_homomorphisms(corpus):
    by_name = {ctx.name: ctx for ctx in corpus}
    homs = []
    for ctx in corpus:
        if ctx.usable:
            homs.append(("identity on " + ctx.name,
                         identity_homomorphism(ctx.structure), ctx, ctx))
    for j, k in ((2, 3), (4, 3)):
        src_name, tgt_name = f"ring:Z{j * k}", f"ring:Z{j}xZ{k}"
        src, tgt = by_name.get(src_name), by_name.get(tgt_name)
        if src is not None and tgt is not None and src.usable and tgt.usable:
            homs.append((f"remainder map {src_name} -> {tgt_name}",
                         crt_homomorphism(j, k), src, tgt))
    return homs


def _gen_p15(corpus):
    for label, hom, src, tgt in _corpus_homomorphisms(corpus):
        a1, a2 = hom.source, hom.target
        for s in src.mult_sets:
            hs = hom.map_set(s)
            for q2 in tgt.lattice.proper():
                if q2 & hs:
                    continue
                desc = (f"{label}: S={_render(a1, s)} "
                        f"Q2={_render(a2, q2)}")
                yield _instance("P15", desc, hom=hom, src=src, tgt=tgt,
                                s=s, q2=q2)


def _eval_p15(payload):
    hom, src, tgt = payload["hom"], payload["src"], payload["tgt"]
    s, q2 = payload["s"], payload["q2"]
    a1, a2 = hom.source, hom.target
    if not hom.is_homomorphism() or not hom.is_injective():
        return SKIPPED, "map is not an embedding", None
    hs = hom.map_set(s)
    if not is_weakly_s_prime(a2, q2, hs).holds:
        return SKIPPED, "target ideal is not weakly h(S)-prime", None
    pre = preimage_ideal(hom, q2)
    ok = _bool_by_convention(is_weakly_s_prime, a1, pre, s)
    cert = {"preimage": _render(a1, pre)}
    if ok:
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "preimage lost weak S-primeness", cert


def _gen_p16(corpus):
    for ctx in corpus:
        if not ctx.usable:
            continue
        a = ctx.structure
        zero_mask = 1 << a.zero
        for c in ctx.lattice.proper():
            if c.mask == zero_mask:
                continue
            sub = substructure(a, c, label=f"{ctx.name}[{_render(a, c)}]")
            incl = inclusion(sub, a)
            for s_sub in multiplicative_subsets(sub, MULT_SIZE_CAP):
                s_par = incl.map_set(s_sub)
                for q2 in ctx.lattice.proper():
                    if q2 & s_par:
                        continue
                    desc = (f"{ctx.name}: C={_render(a, c)} "
                            f"S={s_sub.render(sub.names)} Q={_render(a, q2)}")
                    yield _instance("P16", desc, ctx=ctx, sub=sub, incl=incl,
                                    s_sub=s_sub, s_par=s_par, q2=q2)


def _eval_p16(payload):
    ctx, sub, incl = payload["ctx"], payload["sub"], payload["incl"]
    s_sub, s_par, q2 = payload["s_sub"], payload["s_par"], payload["q2"]
    a = ctx.structure
    if not is_weakly_s_prime(a, q2, s_par).holds:
        return SKIPPED, "ideal is not weakly S-prime in the big structure", None
    meet = preimage_ideal(incl, q2)
    ok = _bool_by_convention(is_weakly_s_prime, sub, meet, s_sub)
    cert = {"restricted": meet.render(sub.names)}
    if ok:
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "restriction lost weak S-primeness", cert


def _product_inputs(ctx):
    f1 = build_context(ctx.fixture.factors[0], PRODUCT_MULT_SIZE_CAP)
    f2 = build_context(ctx.fixture.factors[1], PRODUCT_MULT_SIZE_CAP)
    return f1, f2


def _gen_p17(corpus):
    for ctx in corpus:
        if not ctx.usable or not ctx.fixture.factors:
            continue
        f1, f2 = _product_inputs(ctx)
        if not (f1.usable and f2.usable):
            continue
        a1, a2 = f1.structure, f2.structure
        for q1 in _nonzero_ideals(f1.lattice):
            for q2 in _nonzero_ideals(f2.lattice):
                for s1 in f1.mult_sets:
                    for s2 in f2.mult_sets:
                        desc = (f"{ctx.name}: Q1={_render(a1, q1)} "
                                f"S1={_render(a1, s1)} Q2={_render(a2, q2)} "
                                f"S2={_render(a2, s2)}")
                        yield _instance("P17", desc, ctx=ctx, f1=f1, f2=f2,
                                        q1=q1, q2=q2, s1=s1, s2=s2)


def _eval_p17(payload):
    ctx, f1, f2 = payload["ctx"], payload["f1"], payload["f2"]
    q1, q2, s1, s2 = (payload["q1"], payload["q2"],
                      payload["s1"], payload["s2"])
    a, a1, a2 = ctx.structure, f1.structure, f2.structure
    big_q = product_ideal(a1, a2, q1, q2)
    big_s = product_mult_set(a1, a2, s1, s2)
    weakly = _bool_by_convention(is_weakly_s_prime, a, big_q, big_s)
    plain = _bool_by_convention(is_s_prime, a, big_q, big_s)
    left = (_bool_by_convention(is_s_prime, a1, q1, s1)
            and bool(q2 & s2))
    right = (_bool_by_convention(is_s_prime, a2, q2, s2)
             and bool(q1 & s1))
    split = left or right
    cert = {"weakly": weakly, "split": split, "plain": plain}
    if weakly == split == plain:
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "three product characterizations disagree", cert


_triple_cache: dict[str, tuple] = {}


def _triple_for(ctx):
    if ctx.name not in _triple_cache:
        f1, f2 = _product_inputs(ctx)
        triple = product(ctx.structure, f1.structure,
                         label=f"{ctx.name}x{f1.name}")
        _triple_cache[ctx.name] = (triple, f1, f2)
    return _triple_cache[ctx.name]


def _gen_p18(corpus):
    for ctx in corpus:
        if not ctx.usable or not ctx.fixture.factors:
            continue
        f1, f2 = _product_inputs(ctx)
        if not (f1.usable and f2.usable):
            continue
        a1, a2 = f1.structure, f2.structure
        factors = (f1, f2, f1)
        ideal_choices = [_nonzero_ideals(fc.lattice) for fc in factors]
        for q1 in ideal_choices[0]:
            for q2 in ideal_choices[1]:
                for q3 in ideal_choices[2]:
                    for s1 in f1.mult_sets:
                        for s2 in f2.mult_sets:
                            for s3 in f1.mult_sets:
                                desc = (f"{ctx.name} (3 factors): "
                                        f"Q=({_render(a1, q1)},{_render(a2, q2)},"
                                        f"{_render(a1, q3)}) "
                                        f"S=({_render(a1, s1)},{_render(a2, s2)},"
                                        f"{_render(a1, s3)})")
                                yield _instance(
                                    "P18", desc, ctx=ctx,
                                    qs=(q1, q2, q3), ss=(s1, s2, s3))


def _eval_p18(payload):
    ctx = payload["ctx"]
    triple, f1, f2 = _triple_for(ctx)
    q1, q2, q3 = payload["qs"]
    s1, s2, s3 = payload["ss"]
    a1, a2 = f1.structure, f2.structure
    pair_q = product_ideal(a1, a2, q1, q2)
    pair_s = product_mult_set(a1, a2, s1, s2)
    big_q = product_ideal(ctx.structure, a1, pair_q, q3)
    big_s = product_mult_set(ctx.structure, a1, pair_s, s3)
    lhs = _bool_by_convention(is_weakly_s_prime, triple, big_q, big_s)
    factors = ((a1, q1, s1), (a2, q2, s2), (a1, q3, s3))
    rhs = False
    for i, (ai, qi, si) in enumerate(factors):
        if not _bool_by_convention(is_s_prime, ai, qi, si):
            continue
        if all(bool(qj & sj) for j, (_, qj, sj) in enumerate(factors) if j != i):
            rhs = True
            break
    cert = {"weakly": lhs, "split": rhs}
    if lhs == rhs:
        return VERIFIED, "", cert
    return COUNTEREXAMPLE, "3-factor characterization fails", cert


def _field_like(ctx) -> bool:
    if ctx.structure.one is None or ctx.lattice is None:
        return False
    zero_mask = 1 << ctx.structure.zero
    masks = [q.mask for q in ctx.lattice.sets]
    return masks == [zero_mask, ctx.structure.full_set().mask]


def _gen_p19(corpus):
    for ctx in corpus:
        if not ctx.usable or not ctx.fixture.factors:
            continue
        f1, f2 = _product_inputs(ctx)
        if not (f1.usable and f2.usable):
            continue
        a1, a2 = f1.structure, f2.structure
        for s1 in f1.mult_sets:
            for s2 in f2.mult_sets:
                for p in ctx.lattice.proper():
                    desc = (f"{ctx.name}: S1={_render(a1, s1)} "
                            f"S2={_render(a2, s2)} P={_render(ctx.structure, p)}")
                    yield _instance("P19", desc, ctx=ctx, f1=f1, f2=f2,
                                    s1=s1, s2=s2, p=p)


def _eval_p19(payload):
    ctx, f1, f2 = payload["ctx"], payload["f1"], payload["f2"]
    s1, s2, p = payload["s1"], payload["s2"], payload["p"]
    if not (_field_like(f1) and _field_like(f2)):
        return SKIPPED, "factors are not hyperfield-like", None
    a = ctx.structure
    big_s = product_mult_set(f1.structure, f2.structure, s1, s2)
    if p & big_s:
        return SKIPPED, "ideal meets S1 x S2", None
    verdict = is_weakly_s_prime(a, p, big_s)
    if verdict.holds:
        return VERIFIED, "", None
    return COUNTEREXAMPLE, "proper ideal is not weakly S-prime", {
        "counterexample": verdict.render(a.names)}


GENERATORS = {
    "P1": _gen_p1, "P2": _gen_p2, "P3": _gen_p3, "P4": _gen_p4,
    "P5": _gen_p5, "P6": _gen_p6, "P7": _gen_p7, "P8": _gen_p8,
    "P9": _gen_p9, "P10": _gen_p10, "P11": _gen_p11, "P12": _gen_p12,
    "P13": _gen_p13, "P14": _gen_p14, "P15": _gen_p15, "P16": _gen_p16,
    "P17": _gen_p17, "P18": _gen_p18, "P19": _gen_p19,
}

EVALUATORS = {
    "P1": _eval_p1, "P2": _eval_p2, "P3": _eval_p3, "P4": _eval_p4,
    "P5": _eval_p5, "P6": _eval_p6, "P7": _eval_p7, "P8": _eval_p8,
    "P9": _eval_p9, "P10": _eval_p10, "P11": _eval_p11, "P12": _eval_p12,
    "P13": _eval_p13, "P14": _eval_p14, "P15": _eval_p15, "P16": _eval_p16,
    "P17": _eval_p17, "P18": _eval_p18, "P19": _eval_p19,
}


def generate_instances(property_id: str, corpus) -> list[Instance]:
    try:
        gen = GENERATORS[property_id]
    except KeyError:
        raise ValueError(f"unknown property id {property_id!r}") from None
    return list(gen(corpus))


def run_property(property_id: str, instance: Instance) -> PropertyReport:
    evaluator = EVALUATORS[property_id]
    try:
        status, reason, certificate = evaluator(instance.payload)
    except IdentityRequired as exc:
        status, reason, certificate = SKIPPED, f"identity required: {exc}", None
    except CapacityError as exc:
        status, reason, certificate = SKIPPED, f"budget exceeded: {exc}", None
    return PropertyReport(property_id, instance.description, status,
                          reason, certificate)


def _axiom_report(ctx: StructureContext) -> PropertyReport:
    cert = [{"axiom": v.axiom, "witness": repr(v.witness), "detail": v.detail}
            for v in ctx.violations]
    if not ctx.violations:
        if ctx.lattice is None:
            return PropertyReport(
                "AXIOMS", ctx.name, SKIPPED,
                f"valid, but ideal lattice unavailable: {ctx.lattice_error}",
                None)
        return PropertyReport("AXIOMS", ctx.name, VERIFIED,
                              "validity scan clean", None)
    if ctx.fixture.canonical:
        return PropertyReport("AXIOMS", ctx.name, COUNTEREXAMPLE,
                              f"{len(ctx.violations)} axiom violations", cert)
    return PropertyReport("AXIOMS", ctx.name, SKIPPED,
                          "non-canonical fixture, defects recorded below", cert)


def _discrepancy_reports(ctx: StructureContext) -> list[PropertyReport]:
    return [PropertyReport("DISCREPANCY", ctx.name, SKIPPED, note, None)
            for note in ctx.fixture.notes]


def run_suite(corpus_names=DEFAULT_CORPUS, budget: int | None = None,
              property_ids=PROPERTY_IDS) -> list[PropertyReport]:
    corpus = build_corpus(corpus_names)
    reports: list[PropertyReport] = []
    for ctx in corpus:
        reports.append(_axiom_report(ctx))
        reports.extend(_discrepancy_reports(ctx))
    for pid in property_ids:
        for inst in generate_instances(pid, corpus):
            if budget is not None:
                inst.payload.setdefault("budget", budget)
            reports.append(run_property(pid, inst))
    return reports


def search_separating_instances(corpus_names, holds: str, fails: str,
                                budget: int | None = None) -> list[dict]:
    """All (structure, Q, S) where `holds` is true and `fails` is false."""
    found = []
    for ctx in build_corpus(corpus_names):
        if not ctx.usable:
            continue
        a = ctx.structure
        for q, s in _qs_pairs(ctx):
            try:
                pos = evaluate_predicate(holds, a, q, s, ctx.lattice,
                                         budget=budget)
                neg = evaluate_predicate(fails, a, q, s, ctx.lattice,
                                         budget=budget)
            except (IdentityRequired, CapacityError, NotProper,
                    DisjointnessViolated):
                continue
            if pos.holds is True and neg.holds is False:
                found.append({"structure": ctx.name,
                              "q": _render(a, q),
                              "s": _render(a, s)})
    return found


def report_to_dict(report: PropertyReport) -> dict:
    return {
        "propertyId": report.property_id,
        "instance": report.instance,
        "status": report.status,
        "reason": report.reason,
        "certificate": report.certificate,
    }


def reports_to_json(reports) -> str:
    doc = {
        "reports": [report_to_dict(r) for r in reports],
        "summary": summarize(reports),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def summarize(reports) -> dict:
    counts = {VERIFIED: 0, COUNTEREXAMPLE: 0, SKIPPED: 0}
    for r in reports:
        counts[r.status] += 1
    return {"verified": counts[VERIFIED],
            "counterexamples": counts[COUNTEREXAMPLE],
            "skipped": counts[SKIPPED],
            "total": len(reports)}


def render_report_lines(reports) -> list[str]:
    lines = []
    for r in reports:
        line = f"{r.property_id:<12} {r.status:<15} {r.instance}"
        if r.reason:
            line += f"  [{r.reason}]"
        lines.append(line)
    counts = summarize(reports)
    lines.append(
        f"total={counts['total']} verified={counts['verified']} "
        f"counterexamples={counts['counterexamples']} "
        f"skipped={counts['skipped']}")
    return lines
