"""Simulation constructions: decomposition, encoders/decoders, simulators and chain functions.

Generated symbols use reserved spellings that user alphabets may not contain:

* ``N(a,b)`` names the subset {a, b} (members in alphabet order, ``N()`` for the empty set)
* ``STAR`` and ``DIAMOND`` are the two control symbols of the strong encoder
* ``RX<i>`` tags the i-th reaction of a decomposed system
* ``TX<j>`` is the j-th extra symbol of a strong k-simulator
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    Alphabet,
    CapacityError,
    FunctionTable,
    Reaction,
    ReactionSystem,
    ReactionSystemError,
    canonical_system,
    combine,
    is_reserved,
    iter_bits,
)

MAX_ENCODER = 6
STAR = "STAR"
DIAMOND = "DIAMOND"


def subset_name(alphabet: Alphabet, mask: int) -> str:
    return "N(" + ",".join(alphabet.names(mask)) + ")"


def reaction_tag(i: int) -> str:
    return f"RX{i}"


def extra_symbol(j: int) -> str:
    return f"TX{j}"


def _check_fresh(alphabet: Alphabet) -> None:
    clashes = [s for s in alphabet if is_reserved(s)]
    if clashes:
        raise ReactionSystemError(f"reserved symbol names in input alphabet: {' '.join(clashes)}")


def _check_encodable(alphabet: Alphabet) -> None:
    _check_fresh(alphabet)
    if len(alphabet) > MAX_ENCODER:
        raise CapacityError(f"subset encoders are capped at {MAX_ENCODER} symbols")


def _ordinary_table(f: FunctionTable) -> None:
    if not f.is_ordinary:
        raise ReactionSystemError("expected an rs function over a single background set")


def decompose(system: ReactionSystem) -> tuple[ReactionSystem, ReactionSystem]:
    """Split an ordinary system into strictly minimal hybrids C over (S, T) and D over (T, S).

    ``C`` emits the tag of every reaction that is *not* enabled; ``D`` fires
    the products of every reaction whose tag is absent.  An empty system gets
    one unused tag so that T stays nonempty.
    """
    if system.is_hybrid:
        raise ReactionSystemError("decompose expects an ordinary reaction system")
    s = system.inputs
    _check_fresh(s)
    tags = Alphabet(reaction_tag(i) for i in range(max(1, len(system.reactions))))
    missing = [Reaction(0, x_bit, 1 << i)
               for i, a in enumerate(system.reactions) for x_bit in _bits(a.reactants)]
    blocked = [Reaction(y_bit, 0, 1 << i)
               for i, a in enumerate(system.reactions) for y_bit in _bits(a.inhibitors)]
    c = ReactionSystem(s, tags, tuple(missing + blocked))
    d = ReactionSystem(tags, s, tuple(Reaction(0, 1 << i, a.products)
                                      for i, a in enumerate(system.reactions)))
    return c, d


def enabled_encoder(system: ReactionSystem) -> ReactionSystem:
    """The trivial encoder whose result is the set of tags of enabled reactions."""
    tags = Alphabet(reaction_tag(i) for i in range(max(1, len(system.reactions))))
    return ReactionSystem(system.inputs, tags, tuple(
        Reaction(a.reactants, a.inhibitors, 1 << i) for i, a in enumerate(system.reactions)))


def _bits(mask: int) -> list[int]:
    return [1 << i for i in iter_bits(mask)]


def subset_symbols(s: Alphabet) -> Alphabet:
    return Alphabet(subset_name(s, x) for x in range(1 << len(s)))


def universal_encoder(s: Alphabet) -> ReactionSystem:
    """Strictly minimal hybrid whose result on X is every subset name except N(X)."""
    _check_encodable(s)
    t = subset_symbols(s)
    full = s.full
    reactions = [Reaction(0, b, 1 << x) for x in range(1 << len(s)) for b in _bits(x)]
    reactions += [Reaction(b, 0, 1 << x) for x in range(1 << len(s)) for b in _bits(full & ~x)]
    return ReactionSystem(s, t, tuple(reactions))


def table_decoder(f: FunctionTable) -> ReactionSystem:
    _ordinary_table(f)
    _check_encodable(f.domain)
    t = subset_symbols(f.domain)
    reactions = [Reaction(0, 1 << x, y) for x, y in enumerate(f.entries) if y]
    return ReactionSystem(t, f.domain, tuple(reactions))


def simulator2(f: FunctionTable) -> ReactionSystem:
    """Strictly minimal system over S plus all subset names that 2-simulates ``f``."""
    c = universal_encoder(f.domain)
    d = table_decoder(f)
    background = Alphabet(f.domain.symbols + c.outputs.symbols)
    return combine(c, d, background)


def strong_symbols(s: Alphabet) -> Alphabet:
    names = [subset_name(s, x) for x in range(1, 1 << len(s))]
    return Alphabet(names + [STAR, DIAMOND])


def strong_encoder(s: Alphabet) -> ReactionSystem:
    """Minimal hybrid over (S + DIAMOND, T): X != {} maps to T minus N(X), {} maps to {DIAMOND}."""
    _check_encodable(s)
    inputs = Alphabet(s.symbols + (DIAMOND,))
    t = strong_symbols(s)
    n = len(s)
    name_bit = {x: 1 << (x - 1) for x in range(1, 1 << n)}
    star = 1 << t.index[STAR]
    diamond_out = 1 << t.index[DIAMOND]
    diamond_in = 1 << inputs.index[DIAMOND]
    reactions = [Reaction(b, 0, name_bit[x])
                 for x in range(1, 1 << n) for b in _bits(s.full & ~x)]
    reactions += [Reaction(b, 0, star) for b in _bits(s.full)]
    reactions += [Reaction(b, b2, name_bit[x])
                  for x in range(1, 1 << n) for b in _bits(x) for b2 in _bits(x) if b != b2]
    reactions.append(Reaction(0, diamond_in, diamond_out))
    return ReactionSystem(inputs, t, tuple(reactions))


def strong_decoder(f: FunctionTable) -> ReactionSystem:
    _ordinary_table(f)
    _check_encodable(f.domain)
    t = strong_symbols(f.domain)
    star = 1 << t.index[STAR]
    diamond = 1 << t.index[DIAMOND]
    reactions = [Reaction(star, 1 << (x - 1), y) for x, y in enumerate(f.entries) if x and y]
    if f.entries[0]:
        reactions.append(Reaction(diamond, star, f.entries[0]))
    return ReactionSystem(t, f.domain, tuple(reactions))


def strong_simulator2(f: FunctionTable) -> ReactionSystem:
    """Minimal system that reaches f(X) from X in exactly two steps."""
    c = strong_encoder(f.domain)
    d = strong_decoder(f)
    background = Alphabet(f.domain.symbols + d.inputs.symbols)
    return combine(c, d, background)


@dataclass(frozen=True)
class SubsetChain:
    """Distinct subsets L_1 = {} , ..., L_k = T of an l-symbol set, as masks."""

    l: int
    k: int
    masks: tuple[int, ...]


def subset_chain(l: int, k: int) -> SubsetChain:
    if l < 1:
        raise ReactionSystemError("l must be positive")
    top = (1 << l) - 1
    if not 1 <= k <= top + 1:
        raise ReactionSystemError(f"k must lie in 1..{top + 1} for l={l}")
    if k == 1:
        return SubsetChain(l, k, (0,))
    return SubsetChain(l, k, tuple(i * top // (k - 1) for i in range(k)))


def strong_simulator_k(f: FunctionTable, l: int, k: int) -> ReactionSystem:
    """System over S plus l fresh symbols reaching f(X) from X in exactly k steps.

    The fresh symbols count through the chain L_1..L_k while the original
    state is held in place; once every fresh symbol is present the canonical
    reaction for X fires.
    """
    _ordinary_table(f)
    s = f.domain
    _check_fresh(s)
    chain = subset_chain(l, k)
    n = len(s)
    background = Alphabet(s.symbols + tuple(extra_symbol(j) for j in range(l)))
    if k == 1:
        return ReactionSystem.over(background, canonical_system(f).reactions)
    t_full = ((1 << l) - 1) << n
    lifted = [m << n for m in chain.masks]
    reactions = [Reaction(x | t_full, s.full & ~x, y) for x, y in enumerate(f.entries) if y]
    reactions += [Reaction(lifted[i], t_full & ~lifted[i], lifted[i + 1]) for i in range(k - 1)]
    reactions += [Reaction(sb, tb, sb) for tb in _bits(t_full) for sb in _bits(s.full)]
    return ReactionSystem.over(background, reactions)


def chain_function(domain: Alphabet, order: Sequence[int]) -> FunctionTable:
    """rs function stepping through ``order`` and fixing its last subset."""
    size = 1 << len(domain)
    if sorted(order) != list(range(size)):
        raise ReactionSystemError("order must list every subset exactly once")
    entries = [0] * size
    for here, there in zip(order, order[1:]):
        entries[here] = there
    entries[order[-1]] = order[-1]
    return FunctionTable.over(domain, entries)


def simulation_threshold(size_s: int, size_sprime: int) -> Fraction:
    """Chain functions over S cannot be k-simulated over S' for k above this value."""
    if size_s < 2:
        raise ReactionSystemError("threshold needs |S| >= 2")
    if size_sprime < size_s:
        raise ReactionSystemError("|S'| must be at least |S|")
    return Fraction(2 ** size_sprime - 2, 2 ** size_s - 2)
