"""Decision procedures that read the flanking relation instead of determinizing."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Ffa, Nfa, Word, require_initial, require_trimmed, same_alphabet
from .errors import AutomatonError, PreconditionError


@dataclass(frozen=True)
class InclusionResult:
    included: bool
    witness: Word | None = None

    def __post_init__(self):
        if self.included != (self.witness is None):
            raise ValueError("witness must be present exactly when inclusion fails")

    def __bool__(self) -> bool:
        return self.included


def is_universal(f: Ffa, verify: bool = False) -> bool:
    """Universality of a flanked automaton: it accepts every word iff its flank is empty.

    The flanking condition itself is trusted; pass ``verify=True`` to run the
    (exponential) powerset check first, e.g. in tests.
    """
    a = f.automaton
    if a.num_states == 0:
        raise AutomatonError("automaton has no states")
    require_initial(a)
    if verify:
        from .powerset import is_flanked

        require_trimmed(a)
        if not is_flanked(f):
            raise PreconditionError("automaton/flank pair is not flanked")
    return not f.flank


def check_inclusion(left: Nfa, right: Ffa) -> InclusionResult:
    """Decide ``L(left) ⊆ L(right)`` in ``O(|Q1|·|Q2|·|Σ|)`` product steps.

    Explores the synchronized product breadth first.  A pair ``(q1, q2)``
    where ``q1`` can read ``a`` while ``q2`` flanks ``a`` proves that the word
    leading there followed by ``a`` is accepted on the left and rejected on
    the right; the first such word found is the shortlex-least witness.
    ``right`` must be flanked (not checked).
    """
    same_alphabet(left.alphabet, right.automaton.alphabet)
    a1, a2 = left, right.automaton
    require_trimmed(a2, "right automaton")
    if not a1.initial:
        return InclusionResult(True)
    if not a2.initial:
        return InclusionResult(False, ())

    forbidden: dict[int, set[str]] = {}
    for q, s in right.flank:
        forbidden.setdefault(q, set()).add(s)

    # Layered search keyed by word: each layer maps the shortlex-least word
    # reaching a pair to the pairs first reached by it, in shortlex order.
    seen = {(p, q) for p in a1.initial for q in a2.initial}
    layer: list[tuple[Word, list[tuple[int, int]]]] = [((), sorted(seen))]
    while layer:
        next_layer = []
        for u, pairs in layer:
            for s in a1.alphabet:
                fresh = []
                for p, q in pairs:
                    left_next = a1.successors(p, s)
                    if not left_next:
                        continue
                    if s in forbidden.get(q, ()):
                        return InclusionResult(False, u + (s,))
                    for p2 in left_next:
                        for q2 in a2.successors(q, s):
                            if (p2, q2) not in seen:
                                seen.add((p2, q2))
                                fresh.append((p2, q2))
                if fresh:
                    next_layer.append((u + (s,), fresh))
        layer = next_layer
    return InclusionResult(True)
