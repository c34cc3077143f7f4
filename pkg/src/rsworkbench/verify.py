"""Definitional checkers for (strong) k-simulation and exhaustive small-alphabet oracles."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .analysis import minimal_cores
from .constructions import extra_symbol, reaction_tag
from .core import (
    Alphabet,
    AlphabetMismatch,
    CapacityError,
    FunctionTable,
    Reaction,
    ReactionSystem,
    ReactionSystemError,
    normalize,
    result,
    tabulate,
)

MAX_CHECK = 13
MAX_NONSIM = 3
MAX_SYSTEM_ENUMERATION = 2


@dataclass(frozen=True)
class SimulationReport:
    holds: bool
    failing_state: int | None = None
    failing_step: int | None = None
    states_checked: int = 0
    max_horizon_used: int = 0


def _stepper(system: ReactionSystem):
    """Memoized res for repeated orbit walks."""
    cache: dict[int, int] = {}

    def step(x: int) -> int:
        y = cache.get(x)
        if y is None:
            y = cache[x] = result(system, x)
        return y

    return step


def _prepare(f: FunctionTable, system: ReactionSystem, k: int):
    if k < 1:
        raise ReactionSystemError("k must be a positive integer")
    if system.is_hybrid:
        raise ReactionSystemError("the simulating system must be an ordinary reaction system")
    if not f.is_ordinary:
        raise ReactionSystemError("the simulated function must be an rs function over S")
    if not f.domain.issubset(system.inputs):
        raise AlphabetMismatch("S is not a subset of the simulating background set")
    if len(f.domain) > MAX_CHECK:
        raise CapacityError(f"simulation checks are capped at {MAX_CHECK} symbols")
    lift = f.domain.translator(system.inputs)
    project = system.inputs.translator(f.domain)
    return lift, project, _stepper(system)


def check_strong_simulation(f: FunctionTable, system: ReactionSystem, k: int) -> SimulationReport:
    """Does res^k(X) equal f(X) exactly for every X in 2^S?"""
    lift, _, step = _prepare(f, system, k)
    for checked, x in enumerate(range(len(f.entries)), start=1):
        state = lift(x)
        for _ in range(k):
            state = step(state)
        if state != lift(f.entries[x]):
            return SimulationReport(False, x, k, checked, k)
    return SimulationReport(True, None, None, len(f.entries), k)


def check_simulation(f: FunctionTable, system: ReactionSystem, k: int) -> SimulationReport:
    """Does f^n(X) equal res^(kn)(X) restricted to S for every X and every n >= 1?

    The pair (f^n(X), res^(kn)(X)) evolves deterministically, so once a pair
    repeats the remaining orbit is already certified.
    """
    lift, project, step = _prepare(f, system, k)
    horizon = 0
    for checked, x in enumerate(range(len(f.entries)), start=1):
        fx, ax = x, lift(x)
        seen = set()
        n = 0
        while True:
            for _ in range(k):
                ax = step(ax)
            fx = f.entries[fx]
            n += 1
            if project(ax) != fx:
                return SimulationReport(False, x, n, checked, max(horizon, n))
            if (fx, ax) in seen:
                break
            seen.add((fx, ax))
        horizon = max(horizon, n)
    return SimulationReport(True, None, None, len(f.entries), horizon)


def check_simulation_horizon(f: FunctionTable, system: ReactionSystem, k: int,
                             horizon: int | None = None) -> SimulationReport:
    """Fixed-horizon variant of :func:`check_simulation`, default 2 * 2^|S'| outer steps."""
    lift, project, step = _prepare(f, system, k)
    if horizon is None:
        horizon = 2 * (1 << len(system.inputs))
    for checked, x in enumerate(range(len(f.entries)), start=1):
        fx, ax = x, lift(x)
        for n in range(1, horizon + 1):
            for _ in range(k):
                ax = step(ax)
            fx = f.entries[fx]
            if project(ax) != fx:
                return SimulationReport(False, x, n, checked, horizon)
    return SimulationReport(True, None, None, len(f.entries), horizon)


@dataclass(frozen=True)
class NonsimulabilityReport:
    background: Alphabet
    witnesses: dict[int, FunctionTable | None] = field(default_factory=dict)

    def simulable(self, k: int) -> bool:
        return self.witnesses[k] is not None

    @property
    def none_simulate(self) -> bool:
        return all(w is None for w in self.witnesses.values())


def extended_background(s: Alphabet, size_sprime: int) -> Alphabet:
    if size_sprime < len(s):
        raise ReactionSystemError("|S'| must be at least |S|")
    return Alphabet(s.symbols + tuple(extra_symbol(j) for j in range(size_sprime - len(s))))


def _orbit_status(entries: list[int], g: list[int], k: int, starts: range) -> tuple[str, int]:
    """Walk every orbit under the partial map ``g`` (-1 = unassigned).

    Returns ("ok", 0), ("fail", 0) or ("need", point) where ``point`` is the
    first unassigned state the walk reached.
    """
    low = len(entries) - 1
    for x in starts:
        fx, gx = x, x
        seen = set()
        while True:
            for _ in range(k):
                nxt = g[gx]
                if nxt < 0:
                    return "need", gx
                gx = nxt
            fx = entries[fx]
            if gx & low != fx:
                return "fail", 0
            if (fx, gx) in seen:
                break
            seen.add((fx, gx))
    return "ok", 0


def find_simulating_function(f: FunctionTable, size_sprime: int, k: int) -> FunctionTable | None:
    """Some transition function over S' that k-simulates ``f``, or None.

    Backtracking over partial functions: only states actually reached from
    2^S are ever assigned, and every extension of a consistent partial map
    is tried, so the search is exhaustive over all (2^|S'|)^(2^|S'|) maps.
    """
    if k < 1:
        raise ReactionSystemError("k must be a positive integer")
    background = extended_background(f.domain, size_sprime)
    size = 1 << size_sprime
    entries = list(f.entries)
    starts = range(len(entries))
    g = [-1] * size

    def search() -> bool:
        status, point = _orbit_status(entries, g, k, starts)
        if status == "ok":
            return True
        if status == "fail":
            return False
        for value in range(size):
            g[point] = value
            if search():
                return True
        g[point] = -1
        return False

    if not search():
        return None
    return FunctionTable.over(background, [max(v, 0) for v in g])


def exhaustive_nonsimulability(f: FunctionTable, size_sprime: int, k_set) -> NonsimulabilityReport:
    """For each k, look for any transition function over S' that k-simulates ``f``.

    Every transition function is an rs function, so searching tables covers
    every reaction system over S'.
    """
    if not f.is_ordinary:
        raise ReactionSystemError("expected an rs function over S")
    if size_sprime > MAX_NONSIM:
        raise CapacityError(f"exhaustive non-simulability is capped at |S'| <= {MAX_NONSIM}")
    background = extended_background(f.domain, size_sprime)
    witnesses = {k: find_simulating_function(f, size_sprime, k) for k in sorted(set(k_set))}
    return NonsimulabilityReport(background, witnesses)


@dataclass(frozen=True)
class EnabledSemanticsReport:
    semantics_hold: bool
    witness_state: int | None = None
    violations: tuple[tuple[int, int], ...] = ()

    @property
    def holds(self) -> bool:
        return self.semantics_hold and not self.violations


def check_enabled_semantics(encoder: ReactionSystem, system: ReactionSystem) -> EnabledSemanticsReport:
    """Check that ``encoder`` outputs exactly the tags of enabled reactions, then the containments.

    Once the semantics hold, every encoder reaction ``c`` producing the tag
    of ``a`` must satisfy R_a <= R_c and I_a <= I_c.  Violations are listed
    as (encoder reaction index, system reaction index) pairs; any such pair
    contradicts a proven property and signals a bug elsewhere.
    """
    if encoder.inputs != system.inputs:
        raise AlphabetMismatch("encoder must read the system's background set")
    if len(system.inputs) > MAX_CHECK:
        raise CapacityError(f"semantics checks are capped at {MAX_CHECK} symbols")
    tag_bits = []
    for i in range(len(system.reactions)):
        name = reaction_tag(i)
        if name not in encoder.outputs:
            raise AlphabetMismatch(f"encoder output lacks tag {name}")
        tag_bits.append(1 << encoder.outputs.index[name])
    got = tabulate(encoder).entries
    for x in range(1 << len(system.inputs)):
        want = 0
        for bit, a in zip(tag_bits, system.reactions):
            if (a.reactants & x) == a.reactants and not (a.inhibitors & x):
                want |= bit
        if got[x] != want:
            return EnabledSemanticsReport(False, x)
    violations = []
    for ci, c in enumerate(encoder.reactions):
        for ai, (bit, a) in enumerate(zip(tag_bits, system.reactions)):
            if c.products & bit and (a.reactants & ~c.reactants or a.inhibitors & ~c.inhibitors):
                violations.append((ci, ai))
    return EnabledSemanticsReport(True, None, tuple(violations))


def strictly_minimal_cores(width: int) -> list[tuple[int, int]]:
    return [(0, 0)] + [(1 << i, 0) for i in range(width)] + [(0, 1 << i) for i in range(width)]


def count_strictly_minimal_cores(size: int, enumerate_: bool = False) -> int:
    if size < 1:
        raise ReactionSystemError("size must be positive")
    formula = 2 * size + 1
    if enumerate_:
        listed = strictly_minimal_cores(size)
        # cross-check against a filter of every minimal core
        filtered = [c for c in minimal_cores(size) if (c[0] | c[1]).bit_count() <= 1]
        if len(set(listed)) != formula or set(listed) != set(filtered):
            raise RuntimeError("strictly minimal core enumeration disagrees with 2m+1")
    return formula


def count_strictly_minimal_systems(size: int, enumerate_: bool = False) -> int:
    if size < 1:
        raise ReactionSystemError("size must be positive")
    formula = (2 ** size) ** (2 * size + 1)
    if enumerate_:
        if size > MAX_SYSTEM_ENUMERATION:
            raise CapacityError(
                f"system enumeration is capped at size {MAX_SYSTEM_ENUMERATION}"
            )
        background = Alphabet(f"s{i}" for i in range(size))
        cores = strictly_minimal_cores(size)
        distinct = set()
        for products in itertools.product(range(1 << size), repeat=len(cores)):
            reactions = [Reaction(r, i, p) for (r, i), p in zip(cores, products) if p]
            system = normalize(ReactionSystem.over(background, reactions))
            distinct.add(frozenset(system.reactions))
        if len(distinct) != formula:
            raise RuntimeError("strictly minimal system enumeration disagrees with the formula")
    return formula
