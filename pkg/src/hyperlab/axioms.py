"""Axiom checks for canonical m-ary hypergroups and Krasner (m, n)-hyperrings.

Every check is an exhaustive scan over the finite carrier.  Because the
stored tables are commutative by construction, scanning sorted multisets is
equivalent to scanning all argument tuples; counterexamples are therefore
reported as sorted tuples.  Violations come back in a fixed order (axiom
order below, lexicographic witnesses inside each axiom) and every violation
can be re-checked against the structure with :func:`replay`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import ElementSet, HyperStructure, insert_sorted, multiset_splits, multisets
from .errors import ArityError, TableError

AXIOM_ORDER = (
    "F_VALUE_EMPTY",
    "NEUTRAL",
    "INVERSE_UNIQUE",
    "ASSOC_F",
    "REVERSIBILITY",
    "QUASI_SOLVABLE",
    "ASSOC_G",
    "DISTRIB",
    "ZERO_ABSORB",
    "ONE_IDENTITY",
)


@dataclass(frozen=True)
class AxiomViolation:
    """One concrete axiom failure; ``witness`` is enough to recompute it."""

    axiom: str
    witness: tuple
    detail: str


def inverse_candidates(a: HyperStructure, x: int) -> tuple[int, ...]:
    """All y with zero in f(x, y, zero^(m-2))."""
    pad = (a.zero,) * (a.m - 2)
    out = []
    for y in range(a.size):
        if a.zero in a.f_table[tuple(sorted((x, y) + pad))]:
            out.append(y)
    return tuple(out)


def inverse_map(a: HyperStructure) -> dict[int, int]:
    """x -> its unique inverse, for the elements where one exists."""
    cached = a._cache.get("inverse_map")
    if cached is None:
        cached = {}
        for x in range(a.size):
            cands = inverse_candidates(a, x)
            if len(cands) == 1:
                cached[x] = cands[0]
        a._cache["inverse_map"] = cached
    return cached


def _nested_f(a: HyperStructure, inner: tuple[int, ...], outer: tuple[int, ...]) -> int:
    mask = 0
    table = a.f_table
    for t in table[inner]:
        mask |= table[insert_sorted(outer, t)].mask
    return mask


def _nested_g(a: HyperStructure, inner: tuple[int, ...], outer: tuple[int, ...]) -> int:
    table = a.g_table
    return table[insert_sorted(outer, table[inner])]


def _assoc_violations(a: HyperStructure, op: str, first: bool) -> list[AxiomViolation]:
    # Any two length-k windows of a (2k-1)-tuple overlap in at least one slot,
    # so every pair of k-sub-multisets occurs as a window pair of some tuple:
    # requiring all splits of each multiset to agree covers all position pairs.
    k = a.m if op == "ASSOC_F" else a.n
    nested = _nested_f if op == "ASSOC_F" else _nested_g
    out: list[AxiomViolation] = []
    for ms in multisets(a.size, 2 * k - 1):
        base_inner = None
        base_val = None
        for inner, outer in multiset_splits(ms, k):
            val = nested(a, inner, outer)
            if base_inner is None:
                base_inner, base_val = inner, val
            elif val != base_val:
                names = a.render_elements
                out.append(AxiomViolation(
                    op, (ms, base_inner, inner),
                    f"nesting {names(base_inner)} and {names(inner)} inside "
                    f"{names(ms)} give different results",
                ))
                if first:
                    return out
                break
    return out


def _neutral_violations(a: HyperStructure, first: bool) -> list[AxiomViolation]:
    out = []
    pad = (a.zero,) * (a.m - 1)
    for x in range(a.size):
        value = a.f_table[tuple(sorted((x,) + pad))]
        if value.mask != 1 << x:
            out.append(AxiomViolation(
                "NEUTRAL", (x,),
                f"f({a.names[x]}, zero^{a.m - 1}) = {value.render(a.names)}, "
                f"expected {{{a.names[x]}}}",
            ))
            if first:
                return out
    if out:
        return out
    for e in range(a.size):
        if e == a.zero:
            continue
        pad = (e,) * (a.m - 1)
        if all(a.f_table[tuple(sorted((x,) + pad))].mask == 1 << x for x in range(a.size)):
            out.append(AxiomViolation(
                "NEUTRAL", (e,),
                f"{a.names[e]} is a second scalar neutral besides zero",
            ))
            if first:
                return out
    return out


def _inverse_violations(a: HyperStructure, first: bool) -> list[AxiomViolation]:
    out = []
    for x in range(a.size):
        cands = inverse_candidates(a, x)
        if len(cands) != 1:
            shown = "{" + ",".join(a.names[c] for c in cands) + "}"
            out.append(AxiomViolation(
                "INVERSE_UNIQUE", (x,),
                f"{a.names[x]} has {len(cands)} inverse candidates {shown}",
            ))
            if first:
                return out
    return out


def _reversibility_violations(a: HyperStructure, first: bool) -> list[AxiomViolation]:
    inv = inverse_map(a)
    out = []
    for ms in multisets(a.size, a.m):
        value = a.f_table[ms]
        for x in value:
            seen = set()
            for i, kept in enumerate(ms):
                if kept in seen:
                    continue
                seen.add(kept)
                others = ms[:i] + ms[i + 1:]
                if any(o not in inv for o in others):
                    continue  # reported under INVERSE_UNIQUE
                args = tuple(sorted((x,) + tuple(inv[o] for o in others)))
                if kept not in a.f_table[args]:
                    out.append(AxiomViolation(
                        "REVERSIBILITY", (ms, x, i),
                        f"{a.names[x]} lies in f{a.render_elements(ms)} but "
                        f"{a.names[kept]} is not recoverable from position {i}",
                    ))
                    if first:
                        return out
    return out


def _solvability_violations(a: HyperStructure, first: bool) -> list[AxiomViolation]:
    out = []
    full = (1 << a.size) - 1
    for ctx in multisets(a.size, a.m - 1):
        mask = 0
        for x in range(a.size):
            mask |= a.f_table[insert_sorted(ctx, x)].mask
            if mask == full:
                break
        if mask != full:
            b = (~mask & full)
            b = (b & -b).bit_length() - 1
            out.append(AxiomViolation(
                "QUASI_SOLVABLE", (ctx, b),
                f"{a.names[b]} is not reachable from f{a.render_elements(ctx)} "
                f"for any choice of the remaining argument",
            ))
            if first:
                return out
    return out


def _empty_value_violations(a: HyperStructure, first: bool) -> list[AxiomViolation]:
    out = []
    for ms, value in sorted(a.f_table.items()):
        if not value:
            out.append(AxiomViolation("F_VALUE_EMPTY", (ms,), f"f{a.render_elements(ms)} is empty"))
            if first:
                return out
    return out


def _distrib_violations(a: HyperStructure, first: bool) -> list[AxiomViolation]:
    out = []
    for ctx in multisets(a.size, a.n - 1):
        scaled = [a.g_table[insert_sorted(ctx, x)] for x in range(a.size)]
        for ms in multisets(a.size, a.m):
            lhs = 0
            for t in a.f_table[ms]:
                lhs |= 1 << scaled[t]
            rhs = a.f_table[tuple(sorted(scaled[x] for x in ms))].mask
            if lhs != rhs:
                out.append(AxiomViolation(
                    "DISTRIB", (ctx, ms),
                    f"g over f{a.render_elements(ms)} with fixed arguments "
                    f"{a.render_elements(ctx)} is {ElementSet(lhs, a.size).render(a.names)}, "
                    f"expected {ElementSet(rhs, a.size).render(a.names)}",
                ))
                if first:
                    return out
                break
    return out


def _zero_absorb_violations(a: HyperStructure, first: bool) -> list[AxiomViolation]:
    out = []
    for ctx in multisets(a.size, a.n - 1):
        got = a.g_table[insert_sorted(ctx, a.zero)]
        if got != a.zero:
            out.append(AxiomViolation(
                "ZERO_ABSORB", (ctx,),
                f"g(zero, {a.render_elements(ctx)}) = {a.names[got]}, expected zero",
            ))
            if first:
                return out
    return out


def _one_identity_violations(a: HyperStructure, first: bool) -> list[AxiomViolation]:
    if a.one is None:
        return []
    out = []
    pad = (a.one,) * (a.n - 1)
    for x in range(a.size):
        got = a.g_table[tuple(sorted((x,) + pad))]
        if got != x:
            out.append(AxiomViolation(
                "ONE_IDENTITY", (x,),
                f"g({a.names[x]}, one^{a.n - 1}) = {a.names[got]}, expected {a.names[x]}",
            ))
            if first:
                return out
    return out


def check_canonical_hypergroup(a: HyperStructure, first_violation: bool = False) -> list[AxiomViolation]:
    """Check (A, f) against the canonical m-ary hypergroup axioms."""
    out: list[AxiomViolation] = []
    for step in (
        _empty_value_violations,
        _neutral_violations,
        _inverse_violations,
        _assoc_f_step,
        _reversibility_violations,
        _solvability_violations,
    ):
        out.extend(step(a, first_violation))
        if first_violation and out:
            return out[:1]
    return out


def _assoc_f_step(a: HyperStructure, first: bool) -> list[AxiomViolation]:
    return _assoc_violations(a, "ASSOC_F", first)


def check_krasner(a: HyperStructure, first_violation: bool = False) -> list[AxiomViolation]:
    """Full structure check: canonical hypergroup plus the g-side axioms."""
    out = check_canonical_hypergroup(a, first_violation)
    if first_violation and out:
        return out[:1]
    for step in (
        lambda s, f: _assoc_violations(s, "ASSOC_G", f),
        _distrib_violations,
        _zero_absorb_violations,
        _one_identity_violations,
    ):
        out.extend(step(a, first_violation))
        if first_violation and out:
            return out[:1]
    return out


def replay(a: HyperStructure, violation: AxiomViolation) -> bool:
    """Recompute one violation from its witness; True means it still fails."""
    ax, w = violation.axiom, violation.witness
    if ax == "F_VALUE_EMPTY":
        return not a.f_table[w[0]]
    if ax == "NEUTRAL":
        (e,) = w
        value = a.f_table[tuple(sorted((e,) + (a.zero,) * (a.m - 1)))]
        if value.mask != 1 << e:
            return True
        return e != a.zero and _is_scalar_neutral(a, e)
    if ax == "INVERSE_UNIQUE":
        return len(inverse_candidates(a, w[0])) != 1
    if ax in ("ASSOC_F", "ASSOC_G"):
        ms, left, right = w
        nested = _nested_f if ax == "ASSOC_F" else _nested_g
        outer_left = _subtract(ms, left)
        outer_right = _subtract(ms, right)
        return nested(a, left, outer_left) != nested(a, right, outer_right)
    if ax == "REVERSIBILITY":
        ms, x, i = w
        inv = inverse_map(a)
        others = ms[:i] + ms[i + 1:]
        if x not in a.f_table[ms] or any(o not in inv for o in others):
            return False
        args = tuple(sorted((x,) + tuple(inv[o] for o in others)))
        return ms[i] not in a.f_table[args]
    if ax == "QUASI_SOLVABLE":
        ctx, b = w
        return all(b not in a.f_table[insert_sorted(ctx, x)] for x in range(a.size))
    if ax == "DISTRIB":
        ctx, ms = w
        lhs = 0
        for t in a.f_table[ms]:
            lhs |= 1 << a.g_table[insert_sorted(ctx, t)]
        rhs = a.f_table[tuple(sorted(a.g_table[insert_sorted(ctx, x)] for x in ms))].mask
        return lhs != rhs
    if ax == "ZERO_ABSORB":
        (ctx,) = w
        return a.g_table[insert_sorted(ctx, a.zero)] != a.zero
    if ax == "ONE_IDENTITY":
        (x,) = w
        if a.one is None:
            return False
        return a.g_table[tuple(sorted((x,) + (a.one,) * (a.n - 1)))] != x
    raise ValueError(f"unknown axiom tag {ax!r}")


def _is_scalar_neutral(a: HyperStructure, e: int) -> bool:
    pad = (e,) * (a.m - 1)
    return all(a.f_table[tuple(sorted((x,) + pad))].mask == 1 << x for x in range(a.size))


def _subtract(ms: Sequence[int], part: Sequence[int]) -> tuple[int, ...]:
    out = list(ms)
    for v in part:
        out.remove(v)
    return tuple(out)


def iterate_f(a: HyperStructure, level: int, args: Sequence[int]) -> ElementSet:
    """Left-nested iterate of f; needs level*(m-1)+1 arguments."""
    if level < 1:
        raise ArityError("iteration level must be at least 1")
    expected = level * (a.m - 1) + 1
    if len(args) != expected:
        raise ArityError(f"iterate_f at level {level} expects {expected} arguments, got {len(args)}")
    acc = a.eval_f(args[: a.m])
    pos = a.m
    while pos < len(args):
        chunk = args[pos: pos + a.m - 1]
        acc = a.eval_f_on_sets([acc] + [ElementSet.single(x, a.size) for x in chunk])
        pos += a.m - 1
    return acc


def iterate_g(a: HyperStructure, level: int, args: Sequence[int]) -> int:
    """Left-nested iterate of g; needs level*(n-1)+1 arguments."""
    if level < 1:
        raise ArityError("iteration level must be at least 1")
    expected = level * (a.n - 1) + 1
    if len(args) != expected:
        raise ArityError(f"iterate_g at level {level} expects {expected} arguments, got {len(args)}")
    acc = a.eval_g(args[: a.n])
    pos = a.n
    while pos < len(args):
        chunk = args[pos: pos + a.n - 1]
        acc = a.eval_g((acc,) + tuple(chunk))
        pos += a.n - 1
    return acc


def require_valid(a: HyperStructure) -> None:
    """Raise if the structure fails the full check (used by constructions)."""
    violations = check_krasner(a, first_violation=True)
    if violations:
        raise TableError(f"structure fails axiom check: {violations[0].detail}")
