import itertools

import pytest

from automata_gen import DATA
from flanked import family
from flanked.core import accepts, word
from flanked.errors import AutomatonError
from flanked.powerset import determinize, is_flanked, minimize
from flanked.textformat import dumps


def test_generate_3_matches_golden():
    inst = family.generate(3)
    a = inst.ffa.automaton
    assert a.num_states == 8
    assert dumps(inst.ffa) == (DATA / "family3.ffa").read_text(encoding="utf-8")
    n = a.state_names
    edges = {(n[p], s, n[q]) for p, s, q in a.transitions}
    # p guesses i: other letters lead to p_i, the letter i itself to q_i
    assert {("p", "2", "p1"), ("p", "3", "p1"), ("p", "1", "q1"), ("p1", "1", "q1"), ("q2", "#2", "r")} <= edges
    assert len(edges) == 3 * (3 + 3 * 2) + 3


def test_generate_1():
    inst = family.generate(1)
    a = inst.ffa.automaton
    assert a.num_states == 4
    assert accepts(a, word("1 1 1"))
    assert accepts(a, word("1 #1"))
    assert not accepts(a, word("#1"))
    # with a single digit there is no other letter leading into p1
    assert not a.is_trimmed()
    assert minimize(determinize(a.trim()[0])).num_states >= 2


@pytest.mark.parametrize("n", [0, -1, 13])
def test_generate_rejects_bad_n(n):
    with pytest.raises(AutomatonError):
        family.generate(n)


def test_membership_reference_examples():
    assert family.membership_reference(3, word("1 2 #1"))
    assert family.membership_reference(3, ())
    assert not family.membership_reference(3, word("2 #1"))
    assert not accepts(family.generate(3).ffa.automaton, word("2 #1"))
    with pytest.raises(AutomatonError):
        family.membership_reference(3, word("4"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_generator_matches_reference_exhaustively(n):
    a = family.generate(n).ffa.automaton
    for length in range(2 * n + 1):
        for u in itertools.product(a.alphabet, repeat=length):
            assert accepts(a, u) == family.membership_reference(n, u)


@pytest.mark.parametrize("n", range(1, 7))
def test_family_is_flanked(n):
    assert is_flanked(family.generate(n).ffa.trim())


@pytest.mark.parametrize("n", range(1, 6))
def test_minimal_dfa_lower_bound(n):
    a = family.generate(n).ffa.automaton.trim()[0]
    assert minimize(determinize(a)).num_states >= 2**n


def test_nothing_after_a_sharp():
    n = 3
    a = family.generate(n).ffa.automaton
    for u in itertools.product(a.alphabet, repeat=4):
        if sum(s.startswith("#") for s in u) >= 2:
            assert not accepts(a, u)
