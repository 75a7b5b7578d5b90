"""Line-oriented text documents for automata and flanked automata.

::

    ffa v1                # or: nfa v1
    alphabet a b
    states q0 q1
    initial q0
    trans q0 a q1
    flank q1 a            # only in ffa documents

A line whose first token starts with ``#`` is a comment, and a lone ``#``
token starts a trailing comment.  Symbols such as ``#1`` are therefore fine,
but a symbol spelled exactly ``#`` cannot be written.
"""
from __future__ import annotations

from .core import Ffa, Nfa
from .errors import AutomatonError

VERSION = "v1"


class ParseError(AutomatonError):
    def __init__(self, lineno: int | None, message: str):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


def _tokens(line: str) -> list[str]:
    toks = line.split()
    if toks and toks[0].startswith("#"):
        return []
    if "#" in toks:
        toks = toks[: toks.index("#")]
    return toks


def parse(text: str) -> Nfa | Ffa:
    """Parse a document; ``nfa`` headers give an :class:`Nfa`, ``ffa`` an :class:`Ffa`."""
    lines = [(i, _tokens(raw)) for i, raw in enumerate(text.split("\n"), start=1)]
    lines = [(i, t) for i, t in lines if t]
    if not lines:
        raise ParseError(None, "empty document")
    lineno, header = lines[0]
    if len(header) != 2 or header[0] not in ("nfa", "ffa"):
        raise ParseError(lineno, f"expected header 'nfa {VERSION}' or 'ffa {VERSION}'")
    if header[1] != VERSION:
        raise ParseError(lineno, f"unsupported version {header[1]!r}")
    kind = header[0]

    decl: dict[str, tuple[int, list[str]]] = {}
    trans_lines, flank_lines = [], []
    for lineno, toks in lines[1:]:
        directive, args = toks[0], toks[1:]
        if directive in ("alphabet", "states", "initial"):
            if directive in decl:
                raise ParseError(lineno, f"duplicate '{directive}' declaration")
            decl[directive] = (lineno, args)
        elif directive == "trans":
            if len(args) != 3:
                raise ParseError(lineno, "trans expects: trans <source> <symbol> <target>")
            trans_lines.append((lineno, tuple(args)))
        elif directive == "flank":
            if kind != "ffa":
                raise ParseError(lineno, "flank lines are only allowed in ffa documents")
            if len(args) != 2:
                raise ParseError(lineno, "flank expects: flank <state> <symbol>")
            flank_lines.append((lineno, tuple(args)))
        elif directive in ("nfa", "ffa"):
            raise ParseError(lineno, "header must appear exactly once, on the first line")
        else:
            raise ParseError(lineno, f"unknown directive {directive!r}")

    if "alphabet" in decl:
        lineno, alphabet = decl["alphabet"]
        if not alphabet:
            raise ParseError(lineno, "alphabet must be non-empty")
        if len(set(alphabet)) != len(alphabet):
            raise ParseError(lineno, "duplicate symbol in alphabet")
    index: dict[str, int] = {}
    if "states" in decl:
        lineno, states = decl["states"]
        for name in states:
            if name in index:
                raise ParseError(lineno, f"duplicate state {name!r}")
            index[name] = len(index)
    for required in ("alphabet", "states", "initial"):
        if required not in decl:
            raise ParseError(None, f"missing '{required}' declaration")
    alphabet, states = decl["alphabet"][1], decl["states"][1]
    sigma = set(alphabet)

    def state(lineno, name):
        try:
            return index[name]
        except KeyError:
            raise ParseError(lineno, f"undeclared state {name!r}") from None

    def symbol(lineno, name):
        if name not in sigma:
            raise ParseError(lineno, f"undeclared symbol {name!r}")
        return name

    lineno, init_names = decl["initial"]
    if len(set(init_names)) != len(init_names):
        raise ParseError(lineno, "duplicate initial state")
    initial = frozenset(state(lineno, q) for q in init_names)

    transitions = set()
    for lineno, (p, a, q) in trans_lines:
        t = (state(lineno, p), symbol(lineno, a), state(lineno, q))
        if t in transitions:
            raise ParseError(lineno, "duplicate transition")
        transitions.add(t)

    flank = set()
    for lineno, (q, a) in flank_lines:
        pair = (state(lineno, q), symbol(lineno, a))
        if pair in flank:
            raise ParseError(lineno, "duplicate flank pair")
        flank.add(pair)

    try:
        nfa = Nfa(tuple(alphabet), tuple(states), frozenset(transitions), initial)
    except AutomatonError as exc:
        raise ParseError(None, str(exc)) from None
    if kind == "nfa":
        return nfa
    return Ffa(nfa, frozenset(flank))


def _check_printable(a: Nfa) -> None:
    if "#" in a.alphabet or "#" in a.state_names:
        raise AutomatonError("the token '#' cannot be written in a document")


def dumps(x: Nfa | Ffa) -> str:
    """Canonical document: transitions sorted by (source, symbol, target), flank by (state, symbol)."""
    a = x.automaton if isinstance(x, Ffa) else x
    _check_printable(a)
    names = a.state_names
    out = [
        f"{'ffa' if isinstance(x, Ffa) else 'nfa'} {VERSION}",
        " ".join(["alphabet", *a.alphabet]),
        " ".join(["states", *names]),
        " ".join(["initial", *(names[q] for q in sorted(a.initial))]),
    ]
    for p, s, q in sorted(a.transitions):
        out.append(f"trans {names[p]} {s} {names[q]}")
    if isinstance(x, Ffa):
        for q, s in sorted(x.flank):
            out.append(f"flank {names[q]} {s}")
    return "\n".join(out) + "\n"


def load(path: str) -> Nfa | Ffa:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(x: Nfa | Ffa, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(x))
