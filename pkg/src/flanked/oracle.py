"""Brute-force reference semantics, built only on run sets of words.

Nothing here touches the powerset or product code; every answer comes from
reading words letter by letter.  The ``memo`` switches prune a word once its
run set (or pair of run sets) has already been seen at a shorter or
shortlex-smaller word: such words have exactly the same futures, so the
pruned search is still exact up to ``depth``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import Ffa, Nfa, Word, same_alphabet
from .errors import AutomatonError

MISSING_FLANK = "missing-flank"
SPURIOUS_FLANK = "spurious-flank"


def shortlex_key(u: Word):
    return (len(u), u)


@dataclass(frozen=True)
class BoundedLanguage:
    """A prefix-closed set of words, all of length at most ``depth``."""

    alphabet: tuple[str, ...]
    depth: int
    words: frozenset[Word]

    def __post_init__(self):
        for u in self.words:
            if len(u) > self.depth:
                raise ValueError(f"word {u} longer than depth {self.depth}")
            if u and u[:-1] not in self.words:
                raise ValueError(f"word set is not prefix-closed at {u}")

    def sorted_words(self) -> list[Word]:
        return sorted(self.words, key=shortlex_key)

    def __contains__(self, u) -> bool:
        return tuple(u) in self.words

    def __len__(self) -> int:
        return len(self.words)


class _Stepper:
    """Memoized one-letter steps on run sets."""

    def __init__(self, a: Nfa):
        self.a = a
        self.cache: dict[tuple[frozenset[int], str], frozenset[int]] = {}

    def __call__(self, states: frozenset[int], s: str) -> frozenset[int]:
        key = (states, s)
        out = self.cache.get(key)
        if out is None:
            nxt = set()
            for q in states:
                nxt.update(self.a.successors(q, s))
            out = self.cache[key] = frozenset(nxt)
        return out


def enumerate_words(a: Nfa, depth: int) -> BoundedLanguage:
    """All accepted words of length ``<= depth``."""
    if depth < 0:
        raise AutomatonError("depth must be non-negative")
    step = _Stepper(a)
    words: set[Word] = set()
    layer = [((), frozenset(a.initial))] if a.initial else []
    for length in range(depth + 1):
        words.update(u for u, _ in layer)
        if length == depth:
            break
        layer = [
            (u + (s,), nxt)
            for u, states in layer
            for s in a.alphabet
            if (nxt := step(states, s))
        ]
    return BoundedLanguage(a.alphabet, depth, frozenset(words))


def all_words(alphabet, depth: int) -> list[Word]:
    out: list[Word] = []
    for n in range(depth + 1):
        out.extend(product(alphabet, repeat=n))
    return out


def _shortlex_words(a: Nfa, depth: int, memo: bool):
    """Yield ``(u, A(u))`` for accepted words in shortlex order."""
    step = _Stepper(a)
    seen = set()
    layer = [((), frozenset(a.initial))] if a.initial else []
    for length in range(depth + 1):
        next_layer = []
        for u, states in layer:
            if memo:
                if states in seen:
                    continue
                seen.add(states)
            yield u, states
            if length < depth:
                for s in a.alphabet:
                    nxt = step(states, s)
                    if nxt:
                        next_layer.append((u + (s,), nxt))
        layer = next_layer


def check_flanked_bounded(f: Ffa, depth: int, memo: bool = True):
    """Check the flanking condition literally for every ``|u| <= depth``.

    Returns ``(True, None)`` or ``(False, (u, a, kind))`` for the shortlex
    first violating ``u`` (and first symbol ``a``).
    """
    a = f.automaton
    step = _Stepper(a)
    for u, states in _shortlex_words(a, depth, memo):
        for s in a.alphabet:
            rejected = not step(states, s)
            flanked = any((q, s) in f.flank for q in states)
            if rejected != flanked:
                return False, (u, s, MISSING_FLANK if rejected else SPURIOUS_FLANK)
    return True, None


def check_inclusion_bounded(left: Nfa | Sequence[Nfa], right: Nfa, depth: int, memo: bool = True):
    """Is every word of length ``<= depth`` accepted by ``left`` also accepted by ``right``?

    ``left`` may be a sequence of automata, standing for their intersection.
    Returns ``(True, None)`` or ``(False, w)`` with ``w`` the shortlex-least
    counterexample.
    """
    lefts = [left] if isinstance(left, Nfa) else list(left)
    same_alphabet(*(a.alphabet for a in lefts), right.alphabet)
    steppers = [_Stepper(a) for a in lefts]
    s2 = _Stepper(right)
    seen = set()
    start = tuple(frozenset(a.initial) for a in lefts)
    layer = [((), start, frozenset(right.initial))] if all(start) else []
    for length in range(depth + 1):
        next_layer = []
        for u, xs, y in layer:
            if not y:
                return False, u
            if memo:
                if (xs, y) in seen:
                    continue
                seen.add((xs, y))
            if length < depth:
                for s in right.alphabet:
                    nxs = tuple(st(x, s) for st, x in zip(steppers, xs))
                    if all(nxs):
                        next_layer.append((u + (s,), nxs, s2(y, s)))
        layer = next_layer
    return True, None


def is_universal_bounded(a: Nfa, depth: int, memo: bool = True):
    """Are all words of length ``<= depth`` accepted?  Returns ``(ok, first_rejected)``."""
    step = _Stepper(a)
    if not a.initial:
        return False, ()
    for u, states in _shortlex_words(a, depth - 1, memo) if depth > 0 else ():
        for s in a.alphabet:
            if not step(states, s):
                return False, u + (s,)
    return True, None


def quotient_bounded(l1: BoundedLanguage, l2: BoundedLanguage) -> BoundedLanguage:
    """Largest prefix-closed ``X ⊆ Σ^{<=depth}`` with ``X ∩ l2 ⊆ l1``.

    Greatest fixpoint: start from every word and repeatedly delete words in
    ``l2 \\ l1`` and words whose prefix was deleted.
    """
    if l1.depth != l2.depth:
        raise AutomatonError(f"depth mismatch: {l1.depth} vs {l2.depth}")
    alphabet = same_alphabet(l1.alphabet, l2.alphabet)
    candidates = set(all_words(alphabet, l1.depth))
    changed = True
    while changed:
        changed = False
        for u in sorted(candidates, key=shortlex_key):
            bad = (u in l2.words and u not in l1.words) or (u and u[:-1] not in candidates)
            if bad:
                candidates.discard(u)
                changed = True
    return BoundedLanguage(alphabet, l1.depth, frozenset(candidates))
