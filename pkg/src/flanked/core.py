"""Automata where every state is final, flanking relations, and run sets.

States are dense integer ids ``0 .. n-1``; ``state_names`` only matters for
printing.  Symbols are plain strings (non-empty, no whitespace) and the
alphabet is always kept sorted so that every derived output is canonical.
Words are tuples of symbols; the empty tuple is the empty word.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import AutomatonError, PreconditionError

Symbol = str
StateId = int
Word = tuple[str, ...]
Transition = tuple[int, str, int]
FlankingFunction = frozenset[tuple[int, str]]

EPSILON: Word = ()


def check_symbol(name: str) -> str:
    if not isinstance(name, str) or not name or any(c.isspace() for c in name):
        raise AutomatonError(f"invalid symbol {name!r}: must be a non-empty token without whitespace")
    return name


def word(text: str | Iterable[str]) -> Word:
    """Build a word from whitespace-separated tokens (``"a b"``) or an iterable of symbols."""
    if isinstance(text, str):
        return tuple(text.split())
    return tuple(check_symbol(s) for s in text)


def format_word(u: Sequence[str]) -> str:
    return " ".join(u) if u else "ε"


@dataclass(frozen=True)
class Nfa:
    """A finite automaton ``(Q, Σ, E, I)`` in which all states are final.

    Construction validates ids and symbols but does not require every state
    to be reachable; call :meth:`trim` for that.  Instances are immutable.
    """

    alphabet: tuple[str, ...]
    state_names: tuple[str, ...]
    transitions: frozenset[Transition] = frozenset()
    initial: frozenset[int] = frozenset()

    def __post_init__(self):
        raw = [check_symbol(s) for s in self.alphabet]
        if len(set(raw)) != len(raw):
            raise AutomatonError(f"duplicate symbols in alphabet {raw}")
        alphabet = tuple(sorted(raw))
        if not alphabet:
            raise AutomatonError("alphabet must be non-empty")
        names = tuple(self.state_names)
        if len(set(names)) != len(names):
            raise AutomatonError("duplicate state names")
        for name in names:
            if not isinstance(name, str) or not name or any(c.isspace() for c in name):
                raise AutomatonError(f"invalid state name {name!r}")
        n = len(names)
        sigma = set(alphabet)
        transitions = frozenset(self.transitions)
        for t in transitions:
            src, sym, dst = t
            if not (isinstance(src, int) and 0 <= src < n and isinstance(dst, int) and 0 <= dst < n):
                raise AutomatonError(f"transition {t} refers to an unknown state")
            if sym not in sigma:
                raise AutomatonError(f"transition {t} uses symbol {sym!r} outside the alphabet")
        initial = frozenset(self.initial)
        for q in initial:
            if not (isinstance(q, int) and 0 <= q < n):
                raise AutomatonError(f"initial state {q!r} is not a valid state")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "state_names", names)
        object.__setattr__(self, "transitions", transitions)
        object.__setattr__(self, "initial", initial)

    @classmethod
    def from_names(
        cls,
        alphabet: Iterable[str],
        states: Iterable[str],
        initial: Iterable[str],
        transitions: Iterable[tuple[str, str, str]],
    ) -> "Nfa":
        """Build an automaton using state names instead of ids."""
        states = list(states)
        index = {name: i for i, name in enumerate(states)}

        def sid(name):
            try:
                return index[name]
            except KeyError:
                raise AutomatonError(f"unknown state {name!r}") from None

        return cls(
            alphabet=tuple(alphabet),
            state_names=tuple(states),
            transitions=frozenset((sid(p), a, sid(q)) for p, a, q in transitions),
            initial=frozenset(sid(q) for q in initial),
        )

    @property
    def num_states(self) -> int:
        return len(self.state_names)

    @cached_property
    def symbol_index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    @cached_property
    def _succ(self) -> tuple[dict[str, tuple[int, ...]], ...]:
        table: list[dict[str, list[int]]] = [{} for _ in range(self.num_states)]
        for p, a, q in self.transitions:
            table[p].setdefault(a, []).append(q)
        return tuple({a: tuple(sorted(qs)) for a, qs in row.items()} for row in table)

    @cached_property
    def succ_masks(self) -> tuple[tuple[int, ...], ...]:
        """``succ_masks[q][i]`` is the bitmask of successors of ``q`` on ``alphabet[i]``."""
        rows = []
        for q in range(self.num_states):
            row = [0] * len(self.alphabet)
            for a, targets in self._succ[q].items():
                mask = 0
                for t in targets:
                    mask |= 1 << t
                row[self.symbol_index[a]] = mask
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def initial_mask(self) -> int:
        mask = 0
        for q in self.initial:
            mask |= 1 << q
        return mask

    def successors(self, q: int, a: str) -> tuple[int, ...]:
        return self._succ[q].get(a, ())

    def step(self, states: Iterable[int], a: str) -> frozenset[int]:
        if a not in self.symbol_index:
            raise AutomatonError(f"symbol {a!r} is not in the alphabet {list(self.alphabet)}")
        out: set[int] = set()
        for q in states:
            out.update(self._succ[q].get(a, ()))
        return frozenset(out)

    def reachable(self) -> frozenset[int]:
        seen = set(self.initial)
        todo = deque(sorted(self.initial))
        while todo:
            q = todo.popleft()
            for targets in self._succ[q].values():
                for t in targets:
                    if t not in seen:
                        seen.add(t)
                        todo.append(t)
        return frozenset(seen)

    def is_trimmed(self) -> bool:
        return len(self.reachable()) == self.num_states

    def trim(self) -> tuple["Nfa", dict[int, int]]:
        """Drop unreachable states; returns the new automaton and the old-to-new id map.

        Surviving states keep their relative order.
        """
        keep = sorted(self.reachable())
        remap = {old: new for new, old in enumerate(keep)}
        trimmed = Nfa(
            alphabet=self.alphabet,
            state_names=tuple(self.state_names[q] for q in keep),
            transitions=frozenset(
                (remap[p], a, remap[q]) for p, a, q in self.transitions if p in remap and q in remap
            ),
            initial=frozenset(remap[q] for q in self.initial),
        )
        return trimmed, remap

    def is_deterministic(self) -> bool:
        if len(self.initial) > 1:
            return False
        return all(len(ts) <= 1 for row in self._succ for ts in row.values())

    def extend_alphabet(self, symbols: Iterable[str]) -> "Nfa":
        """Return the same automaton over a larger alphabet (new symbols are unused)."""
        return Nfa(
            alphabet=tuple(set(self.alphabet) | set(symbols)),
            state_names=self.state_names,
            transitions=self.transitions,
            initial=self.initial,
        )

    def rename_states(self, names: Sequence[str]) -> "Nfa":
        return Nfa(self.alphabet, tuple(names), self.transitions, self.initial)


@dataclass(frozen=True)
class Ffa:
    """A candidate flanked automaton: an automaton plus a flanking relation.

    Whether the pair actually satisfies the flanking condition is *not*
    checked here; use :func:`flanked.powerset.is_flanked`.
    """

    automaton: Nfa
    flank: FlankingFunction = field(default_factory=frozenset)

    def __post_init__(self):
        flank = frozenset(self.flank)
        n = self.automaton.num_states
        sigma = self.automaton.symbol_index
        for pair in flank:
            q, a = pair
            if not (isinstance(q, int) and 0 <= q < n):
                raise AutomatonError(f"flank pair {pair} refers to an unknown state")
            if a not in sigma:
                raise AutomatonError(f"flank pair {pair} uses symbol {a!r} outside the alphabet")
        object.__setattr__(self, "flank", flank)

    @classmethod
    def from_names(cls, automaton: Nfa, flank: Iterable[tuple[str, str]]) -> "Ffa":
        index = {name: i for i, name in enumerate(automaton.state_names)}
        try:
            pairs = frozenset((index[q], a) for q, a in flank)
        except KeyError as exc:
            raise AutomatonError(f"unknown state {exc.args[0]!r} in flank") from None
        return cls(automaton, pairs)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.automaton.alphabet

    @cached_property
    def flank_masks(self) -> tuple[int, ...]:
        """Bitmask of ``{q | (q, a) in F}`` per alphabet index."""
        masks = [0] * len(self.automaton.alphabet)
        idx = self.automaton.symbol_index
        for q, a in self.flank:
            masks[idx[a]] |= 1 << q
        return tuple(masks)

    def trim(self) -> "Ffa":
        trimmed, remap = self.automaton.trim()
        return Ffa(trimmed, frozenset((remap[q], a) for q, a in self.flank if q in remap))

    def extend_alphabet(self, symbols: Iterable[str]) -> "Ffa":
        """Pad the alphabet; new symbols are flanked wherever they are now impossible."""
        a = self.automaton.extend_alphabet(symbols)
        new = set(a.alphabet) - set(self.automaton.alphabet)
        flank = set(self.flank)
        flank.update((q, s) for q in range(a.num_states) for s in new)
        return Ffa(a, frozenset(flank))


def _check_word(a: Nfa, u: Sequence[str]) -> None:
    for s in u:
        if s not in a.symbol_index:
            raise AutomatonError(f"symbol {s!r} is not in the alphabet {list(a.alphabet)}")


def run_set(a: Nfa, u: Sequence[str]) -> frozenset[int]:
    """The set of states reachable from ``I`` by reading ``u``."""
    _check_word(a, u)
    current = a.initial
    for s in u:
        if not current:
            break
        current = a.step(current, s)
    return frozenset(current)


def accepts(a: Nfa, u: Sequence[str]) -> bool:
    return bool(run_set(a, u))


def forbidden_after(f: Ffa, u: Sequence[str]) -> frozenset[str]:
    """Symbols that the flanking relation forbids after the accepted word ``u``."""
    states = run_set(f.automaton, u)
    if not states:
        raise PreconditionError(f"word {format_word(u)!r} is not accepted")
    return frozenset(a for q, a in f.flank if q in states)


def same_alphabet(*alphabets: Sequence[str]) -> tuple[str, ...]:
    first = tuple(alphabets[0])
    for other in alphabets[1:]:
        if tuple(other) != first:
            raise AutomatonError(f"alphabet mismatch: {list(first)} vs {list(other)}")
    return first


def require_trimmed(a: Nfa, what: str = "automaton") -> None:
    if not a.is_trimmed():
        raise PreconditionError(f"{what} has unreachable states; call trim() first")


def require_initial(a: Nfa, what: str = "automaton") -> None:
    if not a.initial:
        raise AutomatonError(f"{what} has an empty initial set")


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)

