import random

import pytest

from automata_gen import DATA, alphabet_of, unflankable, pair, splittable, random_flanked, universal_ffa
from flanked import oracle
from flanked.compose import TOP_NAME, intersect, quotient, relabel, union
from flanked.core import Ffa, Nfa, accepts
from flanked.decide import check_inclusion, is_universal
from flanked.errors import AutomatonError
from flanked.powerset import is_flankable, is_flanked
from flanked.textformat import dumps


def words(a, depth=6):
    a = a.automaton if isinstance(a, Ffa) else a
    return oracle.enumerate_words(a, depth).words


def test_intersect_idempotent():
    a1, _ = pair()
    r = intersect(a1, a1)
    assert is_flanked(r)
    assert words(r) == words(a1)


def test_intersect_pair():
    a1, a2 = pair()
    r = intersect(a1, a2)
    assert is_flanked(r)
    assert words(r) == words(a1) & words(a2) == {(), ("a",), ("a", "b")}


def test_intersect_with_universal_is_identity():
    a1, a2 = pair()
    for f in (a1, a2):
        assert words(intersect(universal_ffa(f.alphabet), f)) == words(f)


def test_quotient_pair_matches_golden():
    a1, a2 = pair()
    r = quotient(a1, a2)
    assert r.automaton.state_names == ("(q0,q0)", "(q1,q1)", "(q0,q1)", TOP_NAME)
    assert len(r.automaton.transitions) == 5 + 1
    assert dumps(r) == (DATA / "pair_quotient.ffa").read_text(encoding="utf-8")
    assert is_flanked(r)


def test_quotient_pair_edges():
    a1, a2 = pair()
    r = quotient(a1, a2).automaton
    n = r.state_names
    edges = {(n[p], s, n[q]) for p, s, q in r.transitions}
    assert edges == {
        ("(q0,q0)", "a", "(q1,q1)"),
        ("(q1,q1)", "b", "(q0,q1)"),
        ("(q1,q1)", "a", TOP_NAME),
        ("(q0,q1)", "a", TOP_NAME),
        (TOP_NAME, "a", TOP_NAME),
        (TOP_NAME, "b", TOP_NAME),
    }


def test_quotient_by_universal_is_identity():
    a1, a2 = pair()
    for f in (a1, a2):
        r = quotient(f, universal_ffa(f.alphabet))
        assert words(r) == words(f)


def test_quotient_of_plain_left_returns_nfa():
    a1, a2 = pair()
    r = quotient(a1.automaton, a2)
    assert isinstance(r, Nfa)
    assert r == quotient(a1, a2).automaton


def test_quotient_pair_matches_bounded_fixpoint():
    a1, a2 = pair()
    r = quotient(a1, a2)
    l1 = oracle.enumerate_words(a1.automaton, 3)
    l2 = oracle.enumerate_words(a2.automaton, 3)
    assert oracle.quotient_bounded(l1, l2).words == words(r, 3)


def test_union_idempotent():
    a1, a2 = pair()
    for f in (a1, a2):
        r = union(f, f)
        assert is_flanked(r)
        assert words(r) == words(f)


def test_union_pair():
    a1, a2 = pair()
    r = union(a1, a2)
    assert is_flanked(r)
    assert words(r) == words(a1) | words(a2)


def test_union_with_universal():
    a1, _ = pair()
    r = union(a1, universal_ffa(a1.alphabet))
    assert is_flanked(r)
    assert is_universal(r)
    assert not r.flank


def test_alphabet_mismatch():
    a1, _ = pair()
    other = universal_ffa(("a", "b", "c"))
    for op in (intersect, quotient, union):
        with pytest.raises(AutomatonError):
            op(a1, other)


def test_relabel_splittable_gives_unflankable():
    r = relabel(splittable(), {"a": "a", "b": "b", "c": "a"})
    assert r == unflankable()
    assert not is_flankable(r)


def test_relabel_identity():
    f = splittable()
    assert relabel(f, {s: s for s in f.alphabet}) == f.automaton


def test_relabel_requires_total_mapping():
    with pytest.raises(AutomatonError):
        relabel(splittable(), {"a": "a"})


@pytest.mark.parametrize("seed", range(30))
def test_injective_relabel_keeps_flankability(seed):
    rng = random.Random(seed)
    f = random_flanked(rng, 5, alphabet_of(3))
    mapping = dict(zip(f.alphabet, ["x", "y", "z"]))
    assert is_flankable(relabel(f, mapping))


@pytest.mark.parametrize("seed", range(60))
def test_closure_bounds_and_languages(seed):
    rng = random.Random(seed)
    sigma = alphabet_of(2)
    f1, f2 = random_flanked(rng, 3, sigma), random_flanked(rng, 3, sigma)
    n1, n2 = f1.automaton.num_states, f2.automaton.num_states
    depth = n1 * n2 + 2
    w1, w2 = words(f1, depth), words(f2, depth)
    i, q, u = intersect(f1, f2), quotient(f1, f2), union(f1, f2)
    assert i.automaton.num_states <= n1 * n2
    assert q.automaton.num_states <= n1 * n2 + 1
    assert u.automaton.num_states <= (n1 + 1) * (n2 + 1)
    for r in (i, q, u):
        assert is_flanked(r)
    assert words(i, depth) == w1 & w2
    assert words(u, depth) == w1 | w2
    l1 = oracle.enumerate_words(f1.automaton, depth)
    l2 = oracle.enumerate_words(f2.automaton, depth)
    assert words(q, depth) == oracle.quotient_bounded(l1, l2).words
    assert accepts(q.automaton, ())
    # intersecting the quotient with the divisor stays inside the dividend
    assert check_inclusion(intersect(f2, q).automaton, f1)
