"""Subset construction and everything decided on top of it.

The empty class is never stored: a missing ``delta`` entry *is* the empty
successor, i.e. the unique rejecting sink of an all-final automaton.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from . import kernel
from .core import Ffa, Nfa, Word, mask_to_set, require_initial, require_trimmed
from .errors import AutomatonError

DEFAULT_MAX_CLASSES = 2**20

MISSING_FLANK = "missing-flank"
SPURIOUS_FLANK = "spurious-flank"


@dataclass(frozen=True, eq=False)
class PowersetAutomaton:
    """Reachable classes of an automaton, in breadth-first discovery order.

    ``masks[i]`` is class ``i`` as a state bitmask and ``masks[0]`` is the
    initial set.  ``table`` is a flat ``len(masks) * len(alphabet)`` array of
    successor class ids with ``-1`` for an empty successor.
    """

    source: Nfa
    masks: tuple[int, ...]
    table: tuple[int, ...]
    parent: tuple[int, ...]
    parent_sym: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.masks)

    @cached_property
    def classes(self) -> tuple[frozenset[int], ...]:
        return tuple(mask_to_set(m) for m in self.masks)

    def successor(self, cls: int, symbol: str) -> int | None:
        j = self.table[cls * len(self.source.alphabet) + self.source.symbol_index[symbol]]
        return None if j < 0 else j

    @cached_property
    def delta(self) -> dict[tuple[int, str], int]:
        k = len(self.source.alphabet)
        out = {}
        for i in range(self.num_classes):
            for s, a in enumerate(self.source.alphabet):
                j = self.table[i * k + s]
                if j >= 0:
                    out[(i, a)] = j
        return out

    def word_to(self, cls: int) -> Word:
        """The shortlex-least word whose run set is class ``cls``."""
        symbols = []
        while self.parent[cls] >= 0:
            symbols.append(self.source.alphabet[self.parent_sym[cls]])
            cls = self.parent[cls]
        return tuple(reversed(symbols))


def build(a: Nfa, max_classes: int = DEFAULT_MAX_CLASSES, backend: str | None = None) -> PowersetAutomaton:
    """Rabin-Scott subset construction restricted to reachable, nonempty classes.

    Raises :class:`~flanked.errors.ResourceError` once more than
    ``max_classes`` classes would be created.
    """
    require_trimmed(a)
    require_initial(a)
    classes, table, parent, parent_sym = kernel.explore(
        a.initial_mask, a.succ_masks, len(a.alphabet), max_classes, backend=backend
    )
    return PowersetAutomaton(a, tuple(classes), tuple(table), tuple(parent), tuple(parent_sym))


@dataclass(frozen=True)
class FlankCheck:
    """Outcome of :func:`is_flanked`.

    On failure ``word``/``symbol`` locate the shortest violation and ``kind``
    says which half of the condition broke: ``missing-flank`` means
    ``word + symbol`` is rejected yet no state of the run set flanks
    ``symbol``; ``spurious-flank`` means it is accepted although some state
    flanks it.
    """

    flanked: bool
    word: Word | None = None
    symbol: str | None = None
    kind: str | None = None

    def __bool__(self) -> bool:
        return self.flanked


def inverse_flank(f: Ffa, symbol: str) -> frozenset[int]:
    if symbol not in f.automaton.symbol_index:
        raise AutomatonError(f"symbol {symbol!r} is not in the alphabet")
    return frozenset(q for q, s in f.flank if s == symbol)


def flank_violations(f: Ffa, max_classes: int = DEFAULT_MAX_CLASSES, pa: PowersetAutomaton | None = None) -> Iterator[FlankCheck]:
    """Yield every (class, symbol) violation in BFS/symbol order."""
    a = f.automaton
    if pa is None:
        pa = build(a, max_classes)
    k = len(a.alphabet)
    forbid = f.flank_masks
    for i, mask in enumerate(pa.masks):
        for s in range(k):
            flanked_here = bool(mask & forbid[s])
            dead = pa.table[i * k + s] < 0
            if flanked_here != dead:
                yield FlankCheck(
                    False, pa.word_to(i), a.alphabet[s], MISSING_FLANK if dead else SPURIOUS_FLANK
                )


def is_flanked(f: Ffa, max_classes: int = DEFAULT_MAX_CLASSES) -> FlankCheck:
    """Decide whether ``f.flank`` satisfies the flanking condition for ``f.automaton``."""
    for violation in flank_violations(f, max_classes):
        return violation
    return FlankCheck(True)


def _extendable_masks(pa: PowersetAutomaton) -> list[int]:
    k = len(pa.source.alphabet)
    out = [0] * k
    for i, mask in enumerate(pa.masks):
        for s in range(k):
            if pa.table[i * k + s] >= 0:
                out[s] |= mask
    return out


def extendable_states(a: Nfa, symbol: str, max_classes: int = DEFAULT_MAX_CLASSES) -> frozenset[int]:
    """States reached by some word that can still be extended by ``symbol``.

    Computed as the union of the classes having an outgoing ``symbol`` edge.
    """
    if symbol not in a.symbol_index:
        raise AutomatonError(f"symbol {symbol!r} is not in the alphabet")
    pa = build(a, max_classes)
    return mask_to_set(_extendable_masks(pa)[a.symbol_index[symbol]])


@dataclass(frozen=True)
class Flankability:
    flankable: bool
    flank: frozenset[tuple[int, str]] | None = None
    word: Word | None = None
    symbol: str | None = None

    def __bool__(self) -> bool:
        return self.flankable


def is_flankable(a: Nfa, max_classes: int = DEFAULT_MAX_CLASSES) -> Flankability:
    """Decide flankability and synthesize a flanking relation when one exists.

    A dead extension ``u·s`` can be certified only by a state of ``A(u)`` that
    never occurs in a class with an ``s`` edge.  The relation returned flanks
    ``(q, s)`` for every such state that sits in a class where ``s`` is dead.
    """
    pa = build(a, max_classes)
    k = len(a.alphabet)
    extendable = _extendable_masks(pa)
    flank_masks = [0] * k
    for i, mask in enumerate(pa.masks):
        for s in range(k):
            if pa.table[i * k + s] >= 0:
                continue
            free = mask & ~extendable[s]
            if not free:
                return Flankability(False, word=pa.word_to(i), symbol=a.alphabet[s])
            flank_masks[s] |= free
    flank = frozenset(
        (q, a.alphabet[s]) for s in range(k) for q in mask_to_set(flank_masks[s])
    )
    return Flankability(True, flank=flank)


def _class_name(a: Nfa, cls: frozenset[int]) -> str:
    return "{" + ",".join(a.state_names[q] for q in sorted(cls)) + "}"


def determinize(a: Nfa, max_classes: int = DEFAULT_MAX_CLASSES) -> Nfa:
    """Deterministic automaton over the reachable classes; same language as ``a``.

    States are numbered in discovery order and named ``{q1,q2}``.
    """
    pa = build(a, max_classes)
    names = tuple(_class_name(a, c) for c in pa.classes)
    return Nfa(
        alphabet=a.alphabet,
        state_names=names,
        transitions=frozenset((i, sym, j) for (i, sym), j in pa.delta.items()),
        initial=frozenset({0}),
    )


def deterministic_flank(a: Nfa) -> frozenset[tuple[int, str]]:
    """For a deterministic automaton: flank exactly the missing transitions."""
    if not a.is_deterministic():
        raise AutomatonError("automaton is not deterministic")
    return frozenset(
        (q, s) for q in range(a.num_states) for s in a.alphabet if not a.successors(q, s)
    )


def minimize(a: Nfa) -> Nfa:
    """Minimal DFA for the prefix-closed language of a deterministic automaton.

    Moore-style partition refinement starting from a single block; a missing
    transition acts as an edge to an implicit rejecting sink.  The result is
    renumbered breadth-first from the initial state, so language-equal inputs
    give identical transition structures; each block is named after its
    lowest-id member.
    """
    if not a.is_deterministic():
        raise AutomatonError("minimize requires a deterministic automaton")
    require_trimmed(a)
    n = a.num_states
    if n == 0:
        return a
    k = len(a.alphabet)
    succ = [[-1] * k for _ in range(n)]
    for p, sym, q in a.transitions:
        succ[p][a.symbol_index[sym]] = q

    block = [0] * n
    nblocks = 1
    while True:
        signatures: dict[tuple, int] = {}
        new_block = [0] * n
        for q in range(n):
            sig = (block[q],) + tuple(-1 if t < 0 else block[t] for t in succ[q])
            new_block[q] = signatures.setdefault(sig, len(signatures))
        if len(signatures) == nblocks:
            break
        block, nblocks = new_block, len(signatures)

    (start,) = a.initial
    order = {block[start]: 0}
    queue = [start]
    transitions = set()
    i = 0
    while i < len(queue):
        q = queue[i]
        i += 1
        for s in range(k):
            t = succ[q][s]
            if t < 0:
                continue
            b = block[t]
            if b not in order:
                order[b] = len(order)
                queue.append(t)
            transitions.add((order[block[q]], a.alphabet[s], order[b]))
    members: dict[int, int] = {}
    for q in range(n):
        b = block[q]
        members[b] = min(members.get(b, q), q)
    names = [""] * len(order)
    for b, idx in order.items():
        names[idx] = a.state_names[members[b]]
    return Nfa(a.alphabet, tuple(names), frozenset(transitions), frozenset({0}))
