"""Structural classification and the subadditivity characterization of minimal systems."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import (
    CapacityError,
    FunctionTable,
    Reaction,
    ReactionSystem,
    ReactionSystemError,
    popcount,
)

MAX_SUBADDITIVITY = 13
MAX_SEARCH = 2


@dataclass(frozen=True)
class StructureReport:
    nondegenerate: bool
    maximally_inhibited: bool
    minimal: bool
    strictly_minimal: bool
    reaction_count: int
    distinct_core_count: int

    def as_dict(self) -> dict[str, bool | int]:
        return {
            "nondegenerate": self.nondegenerate,
            "maximally_inhibited": self.maximally_inhibited,
            "minimal": self.minimal,
            "strictly_minimal": self.strictly_minimal,
            "reaction_count": self.reaction_count,
            "distinct_core_count": self.distinct_core_count,
        }


@dataclass(frozen=True)
class SubadditivityWitness:
    kind: Literal["union", "intersection"]
    x: int
    y: int
    offending: str

    def holds_in(self, f: FunctionTable) -> bool:
        """Re-check that the offending symbol really breaks the inclusion."""
        bit = 1 << f.codomain.index[self.offending]
        target = self.x | self.y if self.kind == "union" else self.x & self.y
        return bool(f(target) & bit) and not (f(self.x) | f(self.y)) & bit


def classify(system: ReactionSystem) -> StructureReport:
    full = system.inputs.full
    rs = system.reactions
    return StructureReport(
        nondegenerate=all(a.reactants and a.inhibitors for a in rs),
        maximally_inhibited=all(a.inhibitors == full & ~a.reactants for a in rs),
        minimal=all(popcount(a.reactants) <= 1 and popcount(a.inhibitors) <= 1 for a in rs),
        strictly_minimal=all(popcount(a.reactants | a.inhibitors) <= 1 for a in rs),
        reaction_count=len(rs),
        distinct_core_count=len({a.core for a in rs}),
    )


def _require_checkable(f: FunctionTable) -> None:
    if not f.is_ordinary:
        raise ReactionSystemError("subadditivity is defined for ordinary rs functions")
    if len(f.domain) > MAX_SUBADDITIVITY:
        raise CapacityError(
            f"subadditivity checks are capped at {MAX_SUBADDITIVITY} symbols"
        )


def _find_violation(f: FunctionTable, kind: str) -> SubadditivityWitness | None:
    _require_checkable(f)
    size = len(f.entries)
    table = np.array(f.entries, dtype=np.uint64)
    ys = np.arange(size, dtype=np.int64)
    for x in range(size):
        target = (ys | x) if kind == "union" else (ys & x)
        bad = table[target] & ~(table[x] | table)
        hits = np.flatnonzero(bad)
        if hits.size:
            y = int(hits[0])
            low = int(bad[y]) & -int(bad[y])
            name = f.codomain.symbols[low.bit_length() - 1]
            return SubadditivityWitness(kind, x, y, name)
    return None


def union_subadditive(f: FunctionTable) -> tuple[bool, SubadditivityWitness | None]:
    """Check f(X | Y) <= f(X) | f(Y) over all pairs; the witness is the first failing pair."""
    witness = _find_violation(f, "union")
    return witness is None, witness


def intersection_subadditive(f: FunctionTable) -> tuple[bool, SubadditivityWitness | None]:
    witness = _find_violation(f, "intersection")
    return witness is None, witness


def has_minimal_specification(f: FunctionTable) -> bool:
    return union_subadditive(f)[0] and intersection_subadditive(f)[0]


def minimal_cores(width: int) -> list[tuple[int, int]]:
    """All cores with at most one reactant and one inhibitor, in (R, I) mask order."""
    singles = [0] + [1 << i for i in range(width)]
    return [(r, i) for r in singles for i in singles if not r & i]


def search_minimal_system(f: FunctionTable) -> ReactionSystem | None:
    """Exhaustive search for a (possibly degenerate) minimal system specifying ``f``.

    Each minimal core gets a product set, the empty set meaning the core is
    absent.  Assignments are ordered lexicographically in core order and the
    first one whose result table equals ``f`` is returned.  Whether a symbol
    lands in some result depends only on which cores carry it, so the search
    runs per output symbol; the per-symbol lexicographic minima assemble into
    the overall lexicographically first assignment.
    """
    if not f.is_ordinary:
        raise ReactionSystemError("search is defined for ordinary rs functions")
    n = len(f.domain)
    if n > MAX_SEARCH:
        raise CapacityError(f"exhaustive minimal search is capped at {MAX_SEARCH} symbols")
    cores = minimal_cores(n)
    states = range(1 << n)
    enabling = [
        sum(1 << x for x in states if (r & x) == r and not (i & x))
        for r, i in cores
    ]
    m = len(cores)
    products = [0] * m
    for s in range(n):
        bit = 1 << s
        wanted = sum(1 << x for x in states if f.entries[x] & bit)
        for choice in range(1 << m):
            covered = 0
            for j in range(m):
                if choice >> (m - 1 - j) & 1:
                    covered |= enabling[j]
            if covered == wanted:
                break
        else:
            return None
        for j in range(m):
            if choice >> (m - 1 - j) & 1:
                products[j] |= bit
    reactions = [Reaction(r, i, p) for (r, i), p in zip(cores, products) if p]
    return ReactionSystem.over(f.domain, reactions)
