"""Product constructions that stay inside the flanked class.

All products are explored from ``I1 × I2`` breadth first (sources in id
order, symbols in alphabet order, targets in id order) and only reachable
states are materialized, so results are canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Mapping, Union

from .core import Ffa, Nfa, require_trimmed, same_alphabet
from .errors import AutomatonError

TOP_NAME = "⊤"


@dataclass(frozen=True)
class Pair:
    left: int
    right: int


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class TopPair:
    """A union state where one side has already been abandoned (is ⊤)."""

    side: Literal["left", "right"]
    survivor: int


ProductStateTag = Union[Pair, Top, Bottom, TopPair]


def _name(tag, n1: tuple[str, ...], n2: tuple[str, ...]) -> str:
    if isinstance(tag, Pair):
        return f"({n1[tag.left]},{n2[tag.right]})"
    if isinstance(tag, Top):
        return TOP_NAME
    if isinstance(tag, TopPair):
        if tag.side == "left":
            return f"({TOP_NAME},{n2[tag.survivor]})"
        return f"({n1[tag.survivor]},{TOP_NAME})"
    raise TypeError(tag)


def _unique_names(names: list[str]) -> tuple[str, ...]:
    # nested or oddly named inputs can make two rendered names collide
    seen: set[str] = set()
    out = []
    for name in names:
        while name in seen:
            name += "'"
        seen.add(name)
        out.append(name)
    return tuple(out)


class _Product:
    """Reachable-state bookkeeping shared by the product constructions."""

    def __init__(self, f1: Nfa, f2: Nfa):
        self.a1, self.a2 = f1, f2
        self.ids: dict[object, int] = {}
        self.tags: list[object] = []
        self.queue: list[object] = []
        self.transitions: set[tuple[int, str, int]] = set()

    def add(self, tag) -> int:
        i = self.ids.get(tag)
        if i is None:
            i = self.ids[tag] = len(self.tags)
            self.tags.append(tag)
            self.queue.append(tag)
        return i

    def run(self, initial, expand):
        for tag in initial:
            self.add(tag)
        i = 0
        while i < len(self.queue):
            tag = self.queue[i]
            i += 1
            src = self.ids[tag]
            for s in self.a1.alphabet:
                for dst in expand(tag, s):
                    self.transitions.add((src, s, self.add(dst)))

    def to_nfa(self, initial_count: int) -> Nfa:
        names = [_name(t, self.a1.state_names, self.a2.state_names) for t in self.tags]
        return Nfa(
            alphabet=self.a1.alphabet,
            state_names=_unique_names(names),
            transitions=frozenset(self.transitions),
            initial=frozenset(range(initial_count)),
        )


def _prepare(f1, f2):
    a1 = f1.automaton if isinstance(f1, Ffa) else f1
    a2 = f2.automaton if isinstance(f2, Ffa) else f2
    same_alphabet(a1.alphabet, a2.alphabet)
    require_trimmed(a1, "left automaton")
    require_trimmed(a2, "right automaton")
    return a1, a2


def _initial_pairs(a1: Nfa, a2: Nfa) -> list[Pair]:
    return [Pair(p, q) for p in sorted(a1.initial) for q in sorted(a2.initial)]


def intersect(f1: Ffa, f2: Ffa) -> Ffa:
    """Synchronous product; a pair flanks ``a`` when either component does."""
    a1, a2 = _prepare(f1, f2)
    prod = _Product(a1, a2)

    def expand(tag: Pair, s):
        for p in a1.successors(tag.left, s):
            for q in a2.successors(tag.right, s):
                yield Pair(p, q)

    init = _initial_pairs(a1, a2)
    prod.run(init, expand)
    nfa = prod.to_nfa(len(init))
    flank = frozenset(
        (i, s)
        for i, tag in enumerate(prod.tags)
        for s in a1.alphabet
        if (tag.left, s) in f1.flank or (tag.right, s) in f2.flank
    )
    return Ffa(nfa, flank)


def quotient(f1: Ffa | Nfa, f2: Ffa) -> Ffa | Nfa:
    """Automaton for the largest prefix-closed ``X`` with ``L2 ∩ X ⊆ L1``.

    States are reachable pairs plus a universal sink ⊤ (always numbered
    last).  A pair moves to ⊤ on every symbol the right side flanks, and has
    no move at all on symbols the left side flanks while the right side can
    still step.  Only ``f2``'s flank shapes the transitions; ``f1``'s flank is
    used for the result's flank.  Passing a plain :class:`Nfa` as ``f1``
    returns a plain :class:`Nfa`, which need not be flankable.
    """
    if not isinstance(f2, Ffa):
        raise AutomatonError("quotient needs a flanked right operand")
    a1, a2 = _prepare(f1, f2)
    prod = _Product(a1, a2)
    right_flank = f2.flank
    top = Top()
    reached_top = False

    def expand(tag: Pair, s):
        nonlocal reached_top
        for p in a1.successors(tag.left, s):
            for q in a2.successors(tag.right, s):
                yield Pair(p, q)
        if (tag.right, s) in right_flank:
            reached_top = True

    init = _initial_pairs(a1, a2)
    prod.run(init, expand)
    # ⊤ is appended after every pair, then the edges into it are added.
    pair_tags = list(prod.tags)
    top_id = None
    if reached_top:
        top_id = prod.add(top)
        for i, tag in enumerate(pair_tags):
            for s in a1.alphabet:
                if (tag.right, s) in right_flank:
                    prod.transitions.add((i, s, top_id))
        for s in a1.alphabet:
            prod.transitions.add((top_id, s, top_id))
    nfa = prod.to_nfa(len(init))
    if not isinstance(f1, Ffa):
        return nfa
    flank = frozenset(
        (i, s)
        for i, tag in enumerate(pair_tags)
        for s in a1.alphabet
        if (tag.left, s) in f1.flank and a2.successors(tag.right, s)
    )
    return Ffa(nfa, flank)


def union(f1: Ffa, f2: Ffa) -> Ffa:
    """Product over ``(Q1 ∪ {⊤}) × (Q2 ∪ {⊤})`` accepting ``L1 ∪ L2``.

    While both sides can read a symbol they move together.  When one side
    flanks it and the other can read it, the flanking side is replaced by ⊤
    and the survivor continues alone.
    """
    a1, a2 = _prepare(f1, f2)
    prod = _Product(a1, a2)
    fl1, fl2 = f1.flank, f2.flank

    def expand(tag, s):
        if isinstance(tag, Pair):
            left_next = a1.successors(tag.left, s)
            right_next = a2.successors(tag.right, s)
            for p in left_next:
                for q in right_next:
                    yield Pair(p, q)
            if (tag.right, s) in fl2:
                for p in left_next:
                    yield TopPair("right", p)
            if (tag.left, s) in fl1:
                for q in right_next:
                    yield TopPair("left", q)
        elif tag.side == "right":
            for p in a1.successors(tag.survivor, s):
                yield TopPair("right", p)
        else:
            for q in a2.successors(tag.survivor, s):
                yield TopPair("left", q)

    init = _initial_pairs(a1, a2)
    prod.run(init, expand)
    nfa = prod.to_nfa(len(init))
    flank = set()
    for i, tag in enumerate(prod.tags):
        for s in a1.alphabet:
            if isinstance(tag, Pair):
                hit = (tag.left, s) in fl1 and (tag.right, s) in fl2
            elif tag.side == "right":
                hit = (tag.survivor, s) in fl1
            else:
                hit = (tag.survivor, s) in fl2
            if hit:
                flank.add((i, s))
    return Ffa(nfa, frozenset(flank))


def relabel(f: Ffa | Nfa, mapping: Mapping[str, str]) -> Nfa:
    """Substitute symbols; the result is a plain automaton over the image alphabet.

    Non-injective substitutions can destroy flankability, so no flank is kept.
    """
    a = f.automaton if isinstance(f, Ffa) else f
    missing = [s for s in a.alphabet if s not in mapping]
    if missing:
        raise AutomatonError(f"relabeling is not defined on {missing}")
    return Nfa(
        alphabet=tuple(sorted({mapping[s] for s in a.alphabet})),
        state_names=a.state_names,
        transitions=frozenset((p, mapping[s], q) for p, s, q in a.transitions),
        initial=a.initial,
    )
