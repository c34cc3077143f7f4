from __future__ import annotations

import itertools
import random

import pytest

from rsworkbench.core import Alphabet, FunctionTable, Reaction, ReactionSystem


def as_names(alphabet: Alphabet, mask: int) -> frozenset[str]:
    return frozenset(s for i, s in enumerate(alphabet.symbols) if mask >> i & 1)


def subsets(names):
    names = list(names)
    for r in range(len(names) + 1):
        for combo in itertools.combinations(names, r):
            yield frozenset(combo)


def res_by_sets(system: ReactionSystem, state: frozenset[str]) -> frozenset[str]:
    """Set-based evaluation of res, independent of the mask implementation."""
    out = set()
    for a in system.reactions:
        r = as_names(system.inputs, a.reactants)
        i = as_names(system.inputs, a.inhibitors)
        if r <= state and not (i & state):
            out |= as_names(system.outputs, a.products)
    return frozenset(out)


def random_system(rng: random.Random, size: int, max_reactions: int,
                  minimal: bool = False) -> ReactionSystem:
    alphabet = Alphabet(f"s{i}" for i in range(size))
    reactions = []
    for _ in range(rng.randint(0, max_reactions)):
        if minimal:
            r = rng.choice([0] + [1 << i for i in range(size)])
            i = rng.choice([0] + [1 << j for j in range(size) if not r >> j & 1])
        else:
            r = i = 0
            for j in range(size):
                roll = rng.random()
                if roll < 0.3:
                    r |= 1 << j
                elif roll < 0.6:
                    i |= 1 << j
        p = rng.randint(1, alphabet.full)
        reactions.append(Reaction(r, i, p))
    return ReactionSystem.over(alphabet, reactions)


def random_table(rng: random.Random, size: int) -> FunctionTable:
    alphabet = Alphabet(f"s{i}" for i in range(size))
    return FunctionTable.over(alphabet, [rng.randint(0, alphabet.full) for _ in range(1 << size)])


AB = Alphabet(["a", "b"])


def all_tables_ab():
    for entries in itertools.product(range(4), repeat=4):
        yield FunctionTable.over(AB, entries)


@pytest.fixture
def ab():
    return AB


@pytest.fixture
def chain_example():
    # f({a}) = {b}, f({b}) = {}, f({}) = S, f(S) = S
    return FunctionTable.over(AB, [0b11, 0b10, 0b00, 0b11])


@pytest.fixture
def negation():
    return FunctionTable.over(Alphabet(["a"]), [1, 0])


ACCEPTANCE_RESULTS: list[tuple[str, bool, float, float]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, elapsed, limit in ACCEPTANCE_RESULTS:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({elapsed:.2f}s, limit {limit:g}s)")
