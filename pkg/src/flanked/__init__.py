"""Flanked finite automata: all-final NFAs carrying a flanking relation."""
from .compose import intersect, quotient, relabel, union
from .core import EPSILON, Ffa, Nfa, accepts, forbidden_after, run_set, word
from .decide import InclusionResult, check_inclusion, is_universal
from .errors import AutomatonError, PreconditionError, ResourceError
from .powerset import build, determinize, extendable_states, is_flankable, is_flanked, minimize
from .textformat import ParseError, dumps, parse

__all__ = [
    "EPSILON", "Ffa", "Nfa", "accepts", "forbidden_after", "run_set", "word",
    "InclusionResult", "check_inclusion", "is_universal",
    "intersect", "quotient", "relabel", "union",
    "AutomatonError", "PreconditionError", "ResourceError",
    "build", "determinize", "extendable_states", "is_flankable", "is_flanked", "minimize",
    "ParseError", "dumps", "parse",
]
