"""Line-based text formats for reaction systems and function tables.

System document::

    # comment
    background: a b c          (or an ``input:`` line plus an ``output:`` line)
    a | b -> c                 R | I -> P, each a symbol list or '-'

Table document::

    domain: a b                (optional ``codomain:`` line for hybrid tables)
    - -> a b
    a -> b
"""
from __future__ import annotations

from .core import (
    Alphabet,
    FunctionTable,
    Reaction,
    ReactionSystem,
    ReactionSystemError,
    check_user_symbol,
)


class ParseError(ReactionSystemError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _alphabet(value: str, number: int, allow_reserved: bool) -> Alphabet:
    names = value.split()
    try:
        if not allow_reserved:
            for name in names:
                check_user_symbol(name)
        return Alphabet(names)
    except ReactionSystemError as exc:
        raise ParseError(str(exc), number) from None


def parse_set(text: str, alphabet: Alphabet) -> int:
    """Parse a space-separated symbol list, ``-`` meaning the empty set."""
    tokens = text.split()
    if tokens == ["-"]:
        return 0
    if not tokens:
        raise ReactionSystemError("empty set must be written as '-'")
    if len(set(tokens)) != len(tokens):
        raise ReactionSystemError(f"repeated symbol in {text.strip()!r}")
    return alphabet.mask(tokens)


def render_set(mask: int, alphabet: Alphabet) -> str:
    return " ".join(alphabet.names(mask)) or "-"


def _header(line: str) -> tuple[str, str] | None:
    key, sep, value = line.partition(":")
    if sep and key.strip() in {"background", "input", "output", "domain", "codomain"}:
        return key.strip(), value
    return None


def parse_system(text: str, allow_reserved: bool = False) -> ReactionSystem:
    """Parse a system document.

    Generated symbol spellings are rejected unless ``allow_reserved`` is set,
    which is how rendered constructions are read back.
    """
    decl: dict[str, Alphabet] = {}
    body = []
    for number, line in _lines(text):
        head = _header(line)
        if head is None:
            body.append((number, line))
            continue
        key, value = head
        if key not in {"background", "input", "output"}:
            raise ParseError(f"unexpected {key!r} declaration in a system", number)
        if key in decl or (key == "background" and decl) or (key != "background" and "background" in decl):
            raise ParseError("conflicting background declarations", number)
        if body:
            raise ParseError("declarations must precede reactions", number)
        decl[key] = _alphabet(value, number, allow_reserved)
    if "background" in decl:
        inputs = outputs = decl["background"]
    elif "input" in decl and "output" in decl:
        inputs, outputs = decl["input"], decl["output"]
    else:
        raise ParseError("missing 'background:' (or 'input:' and 'output:') declaration")
    reactions = []
    for number, line in body:
        lhs, arrow, rhs = line.partition("->")
        sides = lhs.split("|")
        if not arrow or len(sides) != 2:
            raise ParseError(f"expected 'R | I -> P', got {line!r}", number)
        try:
            r = parse_set(sides[0], inputs)
            i = parse_set(sides[1], inputs)
            p = parse_set(rhs, outputs)
            if r & i:
                raise ReactionSystemError("reactants and inhibitors overlap")
            if not p:
                raise ReactionSystemError("product set must be nonempty")
            reactions.append(Reaction(r, i, p))
        except ReactionSystemError as exc:
            raise ParseError(str(exc), number) from None
    return ReactionSystem(inputs, outputs, tuple(reactions))


def render_system(system: ReactionSystem, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    if system.is_hybrid:
        lines.append("input: " + " ".join(system.inputs))
        lines.append("output: " + " ".join(system.outputs))
    else:
        lines.append("background: " + " ".join(system.inputs))
    for a in system.reactions:
        lines.append(
            f"{render_set(a.reactants, system.inputs)} | "
            f"{render_set(a.inhibitors, system.inputs)} -> "
            f"{render_set(a.products, system.outputs)}"
        )
    return "\n".join(lines) + "\n"


def parse_table(text: str, allow_reserved: bool = False) -> FunctionTable:
    domain = codomain = None
    rows = []
    for number, line in _lines(text):
        head = _header(line)
        if head is not None:
            key, value = head
            if key == "domain" and domain is None and not rows:
                domain = _alphabet(value, number, allow_reserved)
            elif key == "codomain" and codomain is None and domain is not None and not rows:
                codomain = _alphabet(value, number, allow_reserved)
            else:
                raise ParseError(f"unexpected {key!r} declaration", number)
            continue
        rows.append((number, line))
    if domain is None:
        raise ParseError("missing 'domain:' declaration")
    codomain = codomain or domain
    if len(domain) > 20:
        raise ParseError("table domains are limited to 20 symbols")
    entries: list[int | None] = [None] * (1 << len(domain))
    for number, line in rows:
        lhs, arrow, rhs = line.partition("->")
        if not arrow:
            raise ParseError(f"expected 'X -> Y', got {line!r}", number)
        try:
            x = parse_set(lhs, domain)
            y = parse_set(rhs, codomain)
        except ReactionSystemError as exc:
            raise ParseError(str(exc), number) from None
        if entries[x] is not None:
            raise ParseError(f"duplicate line for subset {render_set(x, domain)!r}", number)
        entries[x] = y
    missing = [x for x, y in enumerate(entries) if y is None]
    if missing:
        raise ParseError(f"no line for subset {render_set(missing[0], domain)!r}")
    return FunctionTable(domain, codomain, tuple(entries))


def render_table(f: FunctionTable) -> str:
    lines = ["domain: " + " ".join(f.domain)]
    if not f.is_ordinary:
        lines.append("codomain: " + " ".join(f.codomain))
    for x, y in enumerate(f.entries):
        lines.append(f"{render_set(x, f.domain)} -> {render_set(y, f.codomain)}")
    return "\n".join(lines) + "\n"
