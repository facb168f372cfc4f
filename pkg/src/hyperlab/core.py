"""Carriers, element subsets, and stored (m, n) operation tables.

A structure couples an m-ary hyperoperation table f (values are non-empty
subsets of the carrier) with an n-ary single-valued operation table g.
Both tables are keyed by sorted index multisets, so commutativity holds by
construction; supplying two permutations of one multiset with different
values is rejected at build time.

Carriers are capped at 64 elements and subsets are stored as bitmasks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    ArityError,
    EmptyArgumentError,
    TableError,
    UnknownElementError,
)

MAX_CARRIER = 64


@dataclass(frozen=True)
class ElementSet:
    """Subset of a carrier of ``universe`` elements, stored as a bitmask."""

    mask: int
    universe: int

    def __post_init__(self) -> None:
        if not 0 < self.universe <= MAX_CARRIER:
            raise ValueError(f"universe size {self.universe} out of range 1..{MAX_CARRIER}")
        if not 0 <= self.mask < (1 << self.universe):
            raise ValueError("mask has bits outside the universe")

    @classmethod
    def from_indices(cls, indices: Iterable[int], universe: int) -> "ElementSet":
        mask = 0
        for i in indices:
            if not 0 <= i < universe:
                raise UnknownElementError(f"index {i} outside carrier of size {universe}")
            mask |= 1 << i
        return cls(mask, universe)

    @classmethod
    def single(cls, index: int, universe: int) -> "ElementSet":
        return cls.from_indices((index,), universe)

    @classmethod
    def empty(cls, universe: int) -> "ElementSet":
        return cls(0, universe)

    @classmethod
    def full(cls, universe: int) -> "ElementSet":
        return cls((1 << universe) - 1, universe)

    def _check(self, other: "ElementSet") -> None:
        if self.universe != other.universe:
            raise ValueError("element sets live in different carriers")

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.universe and bool(self.mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.mask | other.mask, self.universe)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.mask & other.mask, self.universe)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.mask & ~other.mask, self.universe)

    def __le__(self, other: "ElementSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def issubset(self, other: "ElementSet") -> bool:
        return self <= other

    def isdisjoint(self, other: "ElementSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def complement(self) -> "ElementSet":
        return ElementSet(~self.mask & (1 << self.universe) - 1, self.universe)

    def indices(self) -> tuple[int, ...]:
        return tuple(self)

    def render(self, names: Sequence[str]) -> str:
        return "{" + ",".join(names[i] for i in self) + "}"


def sorted_key(args: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(args))


def insert_sorted(sorted_args: Sequence[int], value: int) -> tuple[int, ...]:
    """Sorted tuple with one extra value merged in."""
    out = []
    placed = False
    for a in sorted_args:
        if not placed and value <= a:
            out.append(value)
            placed = True
        out.append(a)
    if not placed:
        out.append(value)
    return tuple(out)


def remove_one(sorted_args: Sequence[int], value: int) -> tuple[int, ...]:
    """Sorted tuple with the first occurrence of ``value`` dropped."""
    out = list(sorted_args)
    out.remove(value)
    return tuple(out)


def multisets(universe: int, k: int) -> Iterator[tuple[int, ...]]:
    """All sorted k-multisets over ``range(universe)`` in lexicographic order."""
    return itertools.combinations_with_replacement(range(universe), k)


def graded_multisets(values: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """All k-multisets over ``values``, most distinct entries first, lex inside a grade.

    Witness searches walk this order, so reported counterexamples favour
    tuples with maximal distinct support.
    """
    combos = itertools.combinations_with_replacement(sorted(values), k)
    return sorted(combos, key=lambda t: (k - len(set(t)), t))


def multiset_splits(ms: Sequence[int], k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Distinct ways to carve a k-sub-multiset out of sorted ``ms``.

    Returns (taken, rest) pairs, both sorted; distinct as multisets, so
    repeated values are never enumerated twice.
    """
    groups: list[tuple[int, int]] = []
    for v in ms:
        if groups and groups[-1][0] == v:
            groups[-1] = (v, groups[-1][1] + 1)
        else:
            groups.append((v, 1))
    suffix = [0] * (len(groups) + 1)
    for i in range(len(groups) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + groups[i][1]
    out: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    taken: list[int] = []
    rest: list[int] = []

    def rec(gi: int, need: int) -> None:
        if gi == len(groups):
            if need == 0:
                out.append((tuple(taken), tuple(rest)))
            return
        v, c = groups[gi]
        low = max(0, need - (suffix[gi] - c))
        for take in range(low, min(c, need) + 1):
            taken.extend([v] * take)
            rest.extend([v] * (c - take))
            rec(gi + 1, need - take)
            del taken[len(taken) - take:]
            del rest[len(rest) - (c - take):]

    rec(0, k)
    return out


def _normalize_table(entries: Mapping[Sequence[int], object], arity: int, size: int,
                     what: str) -> dict[tuple[int, ...], object]:
    seen: dict[tuple[int, ...], tuple[tuple[int, ...], object]] = {}
    for raw_key, value in entries.items():
        key = tuple(raw_key)
        if len(key) != arity:
            raise TableError(f"{what} key {key} has arity {len(key)}, expected {arity}")
        for i in key:
            if not 0 <= i < size:
                raise TableError(f"{what} key {key} mentions index {i} outside the carrier")
        canon = tuple(sorted(key))
        if canon in seen:
            prev_key, prev_value = seen[canon]
            if prev_value != value:
                raise TableError(
                    f"{what} entries {prev_key} and {key} are permutations of one "
                    f"multiset but disagree: {prev_value!r} vs {value!r}"
                )
        else:
            seen[canon] = (key, value)
    table = {canon: value for canon, (_, value) in seen.items()}
    expected = sum(1 for _ in multisets(size, arity))
    if len(table) != expected:
        missing = next(ms for ms in multisets(size, arity) if ms not in table)
        raise TableError(f"{what} table is not total: no entry for multiset {missing}")
    return table


@dataclass(frozen=True, eq=True)
class HyperStructure:
    """A finite commutative Krasner (m, n)-hyperring candidate.

    Holding a table does not certify the axioms; run the checks in
    ``hyperlab.axioms`` for that.
    """

    m: int
    n: int
    names: tuple[str, ...]
    f_table: dict[tuple[int, ...], ElementSet]
    g_table: dict[tuple[int, ...], int]
    zero: int
    one: int | None = None
    label: str = field(default="", compare=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_tables(
        cls,
        m: int,
        n: int,
        names: Sequence[str],
        f_entries: Mapping[Sequence[int], Iterable[int]],
        g_entries: Mapping[Sequence[int], int],
        zero: int,
        one: int | None = None,
        label: str = "",
    ) -> "HyperStructure":
        if m < 2 or n < 2:
            raise TableError(f"arities must be at least 2, got m={m}, n={n}")
        names = tuple(names)
        size = len(names)
        if not 0 < size <= MAX_CARRIER:
            raise TableError(f"carrier size {size} out of range 1..{MAX_CARRIER}")
        if len(set(names)) != size:
            raise TableError("carrier names are not pairwise distinct")
        if not 0 <= zero < size:
            raise TableError(f"zero index {zero} outside the carrier")
        if one is not None and not 0 <= one < size:
            raise TableError(f"one index {one} outside the carrier")

        raw_f = _normalize_table(f_entries, m, size, "f")
        f_table: dict[tuple[int, ...], ElementSet] = {}
        for key, value in raw_f.items():
            es = ElementSet.from_indices(value, size)  # type: ignore[arg-type]
            if not es:
                raise TableError(f"f value for {key} is empty")
            f_table[key] = es

        raw_g = _normalize_table(g_entries, n, size, "g")
        g_table: dict[tuple[int, ...], int] = {}
        for key, value in raw_g.items():
            if not isinstance(value, int) or not 0 <= value < size:
                raise TableError(f"g value for {key} is not a carrier index: {value!r}")
            g_table[key] = value

        return cls(m, n, names, f_table, g_table, zero, one, label)

    @property
    def size(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int:
        lookup = self._cache.get("name_index")
        if lookup is None:
            lookup = {nm: i for i, nm in enumerate(self.names)}
            self._cache["name_index"] = lookup
        try:
            return lookup[name]
        except KeyError:
            raise UnknownElementError(f"no carrier element named {name!r}") from None

    def subset(self, indices: Iterable[int]) -> ElementSet:
        return ElementSet.from_indices(indices, self.size)

    def full_set(self) -> ElementSet:
        return ElementSet.full(self.size)

    def zero_set(self) -> ElementSet:
        return ElementSet.single(self.zero, self.size)

    def _check_args(self, args: Sequence[int], arity: int, op: str) -> tuple[int, ...]:
        if len(args) != arity:
            raise ArityError(f"{op} expects {arity} arguments, got {len(args)}")
        for a in args:
            if not 0 <= a < self.size:
                raise UnknownElementError(f"index {a} outside carrier of size {self.size}")
        return tuple(sorted(args))

    def eval_f(self, args: Sequence[int]) -> ElementSet:
        return self.f_table[self._check_args(args, self.m, "f")]

    def eval_g(self, args: Sequence[int]) -> int:
        return self.g_table[self._check_args(args, self.n, "g")]

    def _eval_on_sets(self, sets: Sequence[ElementSet], arity: int, op: str) -> ElementSet:
        if len(sets) != arity:
            raise ArityError(f"{op} expects {arity} argument sets, got {len(sets)}")
        index_lists = []
        for s in sets:
            if s.universe != self.size:
                raise UnknownElementError("argument set belongs to a different carrier")
            if not s:
                raise EmptyArgumentError(f"{op} received an empty argument set")
            index_lists.append(s.indices())
        mask = 0
        if op == "f":
            table = self.f_table
            for combo in itertools.product(*index_lists):
                mask |= table[tuple(sorted(combo))].mask
        else:
            table = self.g_table
            for combo in itertools.product(*index_lists):
                mask |= 1 << table[tuple(sorted(combo))]
        return ElementSet(mask, self.size)

    def eval_f_on_sets(self, sets: Sequence[ElementSet]) -> ElementSet:
        """Set-wise f: union of f over every choice of one element per argument set."""
        return self._eval_on_sets(sets, self.m, "f")

    def eval_g_on_sets(self, sets: Sequence[ElementSet]) -> ElementSet:
        """Set-wise g: the raw image of g over every choice of arguments."""
        return self._eval_on_sets(sets, self.n, "g")

    def element_multisets(self, k: int) -> Iterator[tuple[int, ...]]:
        return multisets(self.size, k)

    def render_elements(self, indices: Iterable[int]) -> str:
        return "(" + ",".join(self.names[i] for i in indices) + ")"
