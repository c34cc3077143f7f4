"""Alphabets, subset masks, reactions and (hybrid) reaction systems.

Subsets of an alphabet are plain Python ints used as bitmasks: bit ``i`` is
set when the alphabet's ``i``-th symbol is a member.  Every set operation in
the package is a mask operation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_SYMBOLS = 128
MAX_TABULATE = 20

_FORBIDDEN_CHARS = re.compile(r"[\s|;#]")
_RESERVED = re.compile(r"^(N\(.*|STAR|DIAMOND|RX\d+|TX\d+)$")
_USER_FORBIDDEN = re.compile(r"[\s|;#,\-]")


class ReactionSystemError(ValueError):
    """Base class for every error raised by this package."""


class AlphabetMismatch(ReactionSystemError):
    pass


class CapacityError(ReactionSystemError):
    """An alphabet is too large for the requested exhaustive operation."""


def is_reserved(name: str) -> bool:
    return bool(_RESERVED.match(name))


def check_user_symbol(name: str) -> None:
    """Reject names that user-supplied alphabets may not use.

    Generated symbols (``N(a,b)``, ``STAR``, ``DIAMOND``, ``RX0``, ``TX0``)
    are reserved so that constructions can never capture a user symbol.
    """
    if not name or _USER_FORBIDDEN.search(name):
        raise ReactionSystemError(f"invalid symbol name {name!r}")
    if is_reserved(name):
        raise ReactionSystemError(f"symbol {name!r} uses a reserved spelling")


def popcount(mask: int) -> int:
    return mask.bit_count()


def iter_bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Alphabet:
    """Ordered table of distinct symbol names."""

    symbols: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise ReactionSystemError("an alphabet needs at least one symbol")
        if len(symbols) > MAX_SYMBOLS:
            raise CapacityError(
                f"alphabet has {len(symbols)} symbols; at most {MAX_SYMBOLS} supported"
            )
        for name in symbols:
            if not isinstance(name, str) or not name or name == "-" or _FORBIDDEN_CHARS.search(name):
                raise ReactionSystemError(f"invalid symbol name {name!r}")
        index = {name: i for i, name in enumerate(symbols)}
        if len(index) != len(symbols):
            raise ReactionSystemError("alphabet symbols must be distinct")
        object.__setattr__(self, "index", index)

    @classmethod
    def parse(cls, text: str) -> Alphabet:
        return cls(text.split())

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, name: object) -> bool:
        return name in self.index

    @property
    def full(self) -> int:
        return (1 << len(self.symbols)) - 1

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            try:
                m |= 1 << self.index[name]
            except KeyError:
                raise ReactionSystemError(f"undeclared symbol {name!r}") from None
        return m

    def names(self, mask: int) -> list[str]:
        self.check(mask)
        return [self.symbols[i] for i in iter_bits(mask)]

    def check(self, mask: int) -> int:
        if mask < 0 or mask >> len(self.symbols):
            raise AlphabetMismatch(
                f"mask {mask:#x} does not fit an alphabet of {len(self.symbols)} symbols"
            )
        return mask

    def issubset(self, other: Alphabet) -> bool:
        return all(name in other.index for name in self.symbols)

    def same_symbols(self, other: Alphabet) -> bool:
        return len(self) == len(other) and self.issubset(other)

    def union(self, other: Alphabet) -> Alphabet:
        if self.issubset(other) and len(self) == len(other):
            return self
        return Alphabet(self.symbols + tuple(s for s in other.symbols if s not in self.index))

    def embed(self, mask: int, target: Alphabet) -> int:
        """Translate ``mask`` into ``target`` by symbol name.

        Members missing from ``target`` are dropped, so this doubles as
        intersection with the target alphabet.
        """
        out = 0
        for i in iter_bits(mask):
            j = target.index.get(self.symbols[i])
            if j is not None:
                out |= 1 << j
        return out

    def translator(self, target: Alphabet):
        """Precomputed version of :meth:`embed` for repeated use."""
        if self.symbols == target.symbols:
            return lambda m: m
        pairs = [(1 << i, 1 << target.index[s]) for i, s in enumerate(self.symbols)
                 if s in target.index]

        def translate(mask: int) -> int:
            out = 0
            for src, dst in pairs:
                if mask & src:
                    out |= dst
            return out

        return translate


@dataclass(frozen=True)
class Reaction:
    reactants: int
    inhibitors: int
    products: int

    def __post_init__(self):
        if self.reactants & self.inhibitors:
            raise ReactionSystemError("reactants and inhibitors must be disjoint")
        if not self.products:
            raise ReactionSystemError("product set must be nonempty")

    @property
    def core(self) -> tuple[int, int]:
        return self.reactants, self.inhibitors


@dataclass(frozen=True)
class ReactionSystem:
    """A reaction system; hybrid when the output alphabet differs from the input one."""

    inputs: Alphabet
    outputs: Alphabet
    reactions: tuple[Reaction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "reactions", tuple(self.reactions))
        width_in, width_out = len(self.inputs), len(self.outputs)
        for a in self.reactions:
            if (a.reactants | a.inhibitors) >> width_in or a.products >> width_out:
                raise AlphabetMismatch("reaction does not fit the system's alphabets")

    @classmethod
    def over(cls, background: Alphabet, reactions: Iterable[Reaction] = ()) -> ReactionSystem:
        return cls(background, background, tuple(reactions))

    @property
    def is_hybrid(self) -> bool:
        return self.inputs != self.outputs

    def __len__(self) -> int:
        return len(self.reactions)


@dataclass(frozen=True)
class FunctionTable:
    """An explicit rs function: ``entries[m]`` is the image of the subset with mask ``m``."""

    domain: Alphabet
    codomain: Alphabet
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        n = len(self.domain)
        if n > MAX_TABULATE:
            raise CapacityError(f"cannot tabulate over {n} symbols (limit {MAX_TABULATE})")
        if len(self.entries) != 1 << n:
            raise ReactionSystemError(f"table needs exactly {1 << n} entries, got {len(self.entries)}")
        width = len(self.codomain)
        for y in self.entries:
            if y < 0 or y >> width:
                raise AlphabetMismatch("table entry does not fit the codomain")

    @classmethod
    def over(cls, domain: Alphabet, entries: Sequence[int]) -> FunctionTable:
        return cls(domain, domain, tuple(entries))

    @property
    def is_ordinary(self) -> bool:
        return self.domain == self.codomain

    def __call__(self, mask: int) -> int:
        return self.entries[mask]

    def __len__(self) -> int:
        return len(self.entries)


def enabled(a: Reaction, state: int) -> bool:
    return (a.reactants & state) == a.reactants and not (a.inhibitors & state)


def result(system: ReactionSystem, state: int) -> int:
    """Union of the products of all reactions enabled by ``state``."""
    system.inputs.check(state)
    out = 0
    for a in system.reactions:
        if (a.reactants & state) == a.reactants and not (a.inhibitors & state):
            out |= a.products
    return out


def _require_ordinary(system: ReactionSystem, n: int) -> None:
    if n >= 2 and system.is_hybrid:
        raise AlphabetMismatch("a hybrid system cannot be iterated more than once")


def iterate(system: ReactionSystem, state: int, n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    _require_ordinary(system, n)
    system.inputs.check(state)
    for _ in range(n):
        state = result(system, state)
    return state


def trace(system: ReactionSystem, state: int, n: int) -> list[int]:
    if n < 0:
        raise ValueError("n must be non-negative")
    _require_ordinary(system, n)
    states = [system.inputs.check(state)]
    for _ in range(n):
        states.append(result(system, states[-1]))
    return states


def tabulate(system: ReactionSystem) -> FunctionTable:
    n = len(system.inputs)
    if n > MAX_TABULATE:
        raise CapacityError(f"cannot tabulate over {n} symbols (limit {MAX_TABULATE})")
    entries = [0] * (1 << n)
    for a in system.reactions:
        r, i, p = a.reactants, a.inhibitors, a.products
        # enabled states are exactly r | y for y ranging over subsets of the free bits
        free = system.inputs.full & ~(r | i)
        y = free
        while True:
            entries[r | y] |= p
            if not y:
                break
            y = (y - 1) & free
    return FunctionTable(system.inputs, system.outputs, tuple(entries))


def canonical_system(f: FunctionTable) -> ReactionSystem:
    """The unique maximally inhibited system specifying ``f``."""
    full = f.domain.full
    reactions = [Reaction(x, full & ~x, y) for x, y in enumerate(f.entries) if y]
    return ReactionSystem(f.domain, f.codomain, tuple(reactions))


def normalize(system: ReactionSystem) -> ReactionSystem:
    """Merge reactions sharing a core; the first occurrence fixes the position."""
    merged: dict[tuple[int, int], int] = {}
    for a in system.reactions:
        merged[a.core] = merged.get(a.core, 0) | a.products
    reactions = tuple(Reaction(r, i, p) for (r, i), p in merged.items())
    return ReactionSystem(system.inputs, system.outputs, reactions)


def combine(c: ReactionSystem, d: ReactionSystem, background: Alphabet | None = None) -> ReactionSystem:
    """Union of two (hybrid) systems, unifying symbols by name.

    When the merged input and output alphabets hold the same symbols the
    result is an ordinary system; its symbol order is ``background`` if given,
    otherwise the merged input order.
    """
    inputs = c.inputs.union(d.inputs)
    outputs = c.outputs.union(d.outputs)
    if background is not None:
        if not (background.same_symbols(inputs) and background.same_symbols(outputs)):
            raise AlphabetMismatch("background must equal the union of both alphabets")
        inputs = outputs = background
    elif inputs.same_symbols(outputs):
        outputs = inputs
    reactions = []
    for part in (c, d):
        tin = part.inputs.translator(inputs)
        tout = part.outputs.translator(outputs)
        reactions.extend(Reaction(tin(a.reactants), tin(a.inhibitors), tout(a.products))
                         for a in part.reactions)
    return ReactionSystem(inputs, outputs, tuple(reactions))


def restrict_to(system: ReactionSystem, sub: Alphabet) -> ReactionSystem:
    """Restrict a system over S' to a sub-alphabet S, keeping only reactions with R inside S."""
    if not sub.issubset(system.inputs) or not sub.issubset(system.outputs):
        raise AlphabetMismatch("target alphabet is not a subset of the system's background")
    tin = system.inputs.translator(sub)
    tout = system.outputs.translator(sub)
    inside = system.inputs.mask(sub.symbols)
    reactions = []
    for a in system.reactions:
        if a.reactants & ~inside:
            continue
        products = tout(a.products)
        if products:
            reactions.append(Reaction(tin(a.reactants), tin(a.inhibitors), products))
    return ReactionSystem(sub, sub, tuple(reactions))


def compose(g: FunctionTable, f: FunctionTable) -> FunctionTable:
    """The table of ``g`` after ``f``."""
    if f.codomain != g.domain:
        raise AlphabetMismatch("codomain of f must be the domain of g")
    return FunctionTable(f.domain, g.codomain, tuple(g.entries[y] for y in f.entries))
