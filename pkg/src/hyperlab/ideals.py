"""Hyperideal recognition, enumeration, and ideal arithmetic.

A hyperideal is a subset that is a subhypergroup under f and absorbs g in
every argument position.  The lattice of all hyperideals is found by an
exhaustive subset scan (the carrier cap keeps this tractable) and carries a
primality flag per ideal so the radical can be computed by intersection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import inverse_map
from .core import ElementSet, HyperStructure, insert_sorted, multisets, sorted_key
from .errors import CapacityError, IdentityRequired
from .verdict import Verdict

ENUMERATION_CAP = 1 << 20


def is_hyperideal(a: HyperStructure, q: ElementSet) -> Verdict:
    """Check the subhypergroup and absorption conditions; witness on failure."""
    if a.zero not in q:
        return Verdict(False, note="does not contain zero")
    members = q.indices()
    for ms in multisets(len(members), a.m):
        args = tuple(members[i] for i in ms)
        value = a.f_table[sorted_key(args)]
        if not value.issubset(q):
            bad = next(x for x in value if x not in q)
            return Verdict(False, counterexample=args,
                           note=f"not closed under f: {a.names[bad]} escapes")
    inv = inverse_map(a)
    for x in members:
        if x not in inv:
            return Verdict(False, counterexample=(x,),
                           note=f"{a.names[x]} has no unique inverse")
        if inv[x] not in q:
            return Verdict(False, counterexample=(x,),
                           note=f"inverse {a.names[inv[x]]} of {a.names[x]} missing")
    for ms in multisets(len(members), a.m - 1):
        ctx = tuple(members[i] for i in ms)
        mask = 0
        for x in members:
            mask |= a.f_table[insert_sorted(ctx, x)].mask
        if q.mask & ~mask:
            missing = (q.mask & ~mask)
            missing = (missing & -missing).bit_length() - 1
            return Verdict(False, counterexample=ctx,
                           note=f"{a.names[missing]} unreachable inside the subset")
    for ctx in multisets(a.size, a.n - 1):
        for x in members:
            got = a.g_table[insert_sorted(ctx, x)]
            if got not in q:
                return Verdict(False, counterexample=ctx + (x,),
                               note=f"absorption fails: product {a.names[got]} escapes")
    return Verdict(True)


def _elementwise_prime(a: HyperStructure, q: ElementSet) -> bool:
    # private flag used for the lattice and radicals; proper Q only
    if q.mask == a.full_set().mask:
        return False
    for ms in multisets(a.size, a.n):
        if a.g_table[ms] in q and not any(x in q for x in ms):
            return False
    return True


@dataclass(frozen=True)
class IdealLattice:
    """All hyperideals of one structure, ascending by (cardinality, mask)."""

    structure: HyperStructure
    sets: tuple[ElementSet, ...]
    prime_flags: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __getitem__(self, i: int) -> ElementSet:
        return self.sets[i]

    def index_of(self, q: ElementSet) -> int:
        for i, s in enumerate(self.sets):
            if s.mask == q.mask:
                return i
        raise ValueError("subset is not an enumerated hyperideal")

    def primes(self) -> tuple[ElementSet, ...]:
        return tuple(s for s, p in zip(self.sets, self.prime_flags) if p)

    def proper(self) -> tuple[ElementSet, ...]:
        full = self.structure.full_set().mask
        return tuple(s for s in self.sets if s.mask != full)


def enumerate_hyperideals(a: HyperStructure) -> IdealLattice:
    """Exhaustive subset scan; raises CapacityError past the candidate cap."""
    if 1 << a.size > ENUMERATION_CAP:
        raise CapacityError(
            f"2^{a.size} candidate subsets exceed the enumeration cap {ENUMERATION_CAP}")
    zero_bit = 1 << a.zero
    found = []
    for mask in range(zero_bit, 1 << a.size):
        if not mask & zero_bit:
            continue
        q = ElementSet(mask, a.size)
        if is_hyperideal(a, q).holds:
            found.append(q)
    found.sort(key=lambda s: (len(s), s.mask))
    flags = tuple(_elementwise_prime(a, q) for q in found)
    return IdealLattice(a, tuple(found), flags)


def _identity_pad(a: HyperStructure, needed: int, what: str) -> tuple[int, ...]:
    if needed == 0:
        return ()
    if a.one is None:
        raise IdentityRequired(f"{what} needs a scalar identity when n > 2")
    return (a.one,) * needed


def generated_hyperideal(a: HyperStructure, x: int) -> ElementSet:
    """Principal hyperideal: all scalar multiples of x."""
    pad = _identity_pad(a, a.n - 2, "generated hyperideal")
    mask = 0
    for r in range(a.size):
        mask |= 1 << a.g_table[sorted_key((r, x) + pad)]
    return ElementSet(mask, a.size)


def colon(a: HyperStructure, q: ElementSet, x: int) -> ElementSet:
    """(Q : x) = elements whose scaled product with x lands in Q."""
    pad = _identity_pad(a, a.n - 2, "colon ideal")
    mask = 0
    for r in range(a.size):
        if a.g_table[sorted_key((r, x) + pad)] in q:
            mask |= 1 << r
    return ElementSet(mask, a.size)


def colon_zero(a: HyperStructure, x: int) -> ElementSet:
    """Annihilator of x: the colon ideal of the zero ideal."""
    return colon(a, a.zero_set(), x)


def scaled(a: HyperStructure, s: int, x: int) -> int:
    """g(s, x, one^(n-2)): the s-multiple of a single element."""
    pad = _identity_pad(a, a.n - 2, "scaled product")
    return a.g_table[sorted_key((s, x) + pad)]


def scaled_set(a: HyperStructure, s: int, q: ElementSet) -> ElementSet:
    """Image of a subset under multiplication by s."""
    pad = _identity_pad(a, a.n - 2, "scaled product")
    mask = 0
    for x in q:
        mask |= 1 << a.g_table[sorted_key((s, x) + pad)]
    return ElementSet(mask, a.size)


def set_product(a: HyperStructure, sets) -> ElementSet:
    """Raw setwise g-image of n subsets (not its ideal closure)."""
    return a.eval_g_on_sets(list(sets))


def radical(a: HyperStructure, q: ElementSet, lattice: IdealLattice) -> ElementSet:
    """Intersection of the prime hyperideals containing Q; full set if none."""
    mask = a.full_set().mask
    for s, flag in zip(lattice.sets, lattice.prime_flags):
        if flag and q.issubset(s):
            mask &= s.mask
    return ElementSet(mask, a.size)


def radical_membership(a: HyperStructure, q: ElementSet, x: int) -> bool:
    """True when some admissible g-power of x lies in Q.

    Powers are x itself, the identity-padded powers g(x^(u), one^(n-u)) for
    u up to n, and the left iterates of the pure power; the finite carrier
    forces the iterates to cycle, which bounds the search.
    """
    if x in q:
        return True
    if a.n > 2 and a.one is None:
        raise IdentityRequired("radical membership needs a scalar identity when n > 2")
    for u in range(2, a.n):
        padded = tuple(sorted((x,) * u + (a.one,) * (a.n - u)))
        if a.g_table[padded] in q:
            return True
    power = a.g_table[(x,) * a.n]
    seen = set()
    while power not in seen:
        if power in q:
            return True
        seen.add(power)
        power = a.g_table[tuple(sorted((power,) + (x,) * (a.n - 1)))]
    return False
