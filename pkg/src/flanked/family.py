"""Flanked automata with 2n+2 states whose minimal DFA needs at least 2^n states.

Over ``Π = {1..n}`` and ``Θ = {#1..#n}`` the language contains every word of
``Π*`` plus the words ``v #i`` where ``v ∈ Π*`` contains ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Ffa, Nfa
from .errors import AutomatonError

MAX_N = 12


@dataclass(frozen=True)
class FamilyInstance:
    n: int
    ffa: Ffa


def digits(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def sharps(n: int) -> list[str]:
    return [f"#{i}" for i in range(1, n + 1)]


def generate(n: int, max_n: int = MAX_N) -> FamilyInstance:
    """Build the instance for ``n``.

    State ``p`` is initial; reading a letter from ``p`` guesses which ``#i``
    will close the word: ``p_i`` waits for a first ``i``, ``q_i`` has seen
    one and may read ``#i`` into the dead end ``r``.
    """
    if not isinstance(n, int) or n < 1:
        raise AutomatonError(f"n must be a positive integer, got {n!r}")
    if n > max_n:
        raise AutomatonError(f"n={n} exceeds the cap {max_n}")
    pi, theta = digits(n), sharps(n)
    names = ["p"] + [f"p{i}" for i in pi] + [f"q{i}" for i in pi] + ["r"]
    p, r = 0, 2 * n + 1

    def p_(i):
        return i

    def q_(i):
        return n + i

    transitions = set()
    flank = set()
    for i in range(1, n + 1):
        sym = str(i)
        transitions |= {(p, sym, q_(i)), (p_(i), sym, q_(i)), (q_(i), sym, q_(i))}
        for j in range(1, n + 1):
            if j != i:
                other = str(j)
                transitions |= {(p, other, p_(i)), (p_(i), other, p_(i)), (q_(i), other, q_(i))}
        transitions.add((q_(i), f"#{i}", r))
        flank |= {(p_(i), f"#{i}"), (p, f"#{i}")}
    flank |= {(r, a) for a in pi + theta}
    nfa = Nfa(tuple(pi + theta), tuple(names), frozenset(transitions), frozenset({p}))
    return FamilyInstance(n, Ffa(nfa, frozenset(flank)))


def membership_reference(n: int, u: Sequence[str]) -> bool:
    """Membership decided straight from the definition of the language."""
    pi, theta = set(digits(n)), set(sharps(n))
    for s in u:
        if s not in pi and s not in theta:
            raise AutomatonError(f"symbol {s!r} is not in the alphabet for n={n}")
    if all(s in pi for s in u):
        return True
    *body, last = u
    if last not in theta or any(s not in pi for s in body):
        return False
    return last[1:] in body
