"""Outcome record shared by the ideal and predicate checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Verdict:
    """Result of a decidable predicate over a structure.

    holds is True or False once the predicate was evaluated; None means the
    check could not run (for example a missing identity) and note says why.
    witness_s carries the certifying element for S-flavoured predicates.
    counterexample is a sorted tuple: carrier indices for element-level
    predicates, lattice indices for ideal-level ones.
    """

    holds: bool | None
    witness_s: int | None = None
    counterexample: tuple[int, ...] | None = None
    note: str | None = None

    def render(self, names: Sequence[str] | None = None) -> str:
        if self.holds is None:
            return f"not evaluated ({self.note})"
        parts = ["true" if self.holds else "false"]
        if self.witness_s is not None:
            parts.append(f"witness={names[self.witness_s] if names else self.witness_s}")
        if self.counterexample is not None:
            if names:
                body = ",".join(names[i] for i in self.counterexample)
            else:
                body = ",".join(str(i) for i in self.counterexample)
            parts.append(f"counterexample=({body})")
        if self.note:
            parts.append(f"({self.note})")
        return " ".join(parts)
