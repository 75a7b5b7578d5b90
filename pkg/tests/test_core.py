import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from automata_gen import unflankable, pair, nfas
from flanked.core import Ffa, Nfa, accepts, forbidden_after, run_set, word
from flanked.errors import AutomatonError, PreconditionError
from flanked import oracle


def ids(a, *names):
    return frozenset(a.state_names.index(n) for n in names)


def test_run_set_unflankable_after_a():
    a = unflankable()
    assert run_set(a, word("a")) == ids(a, "q1", "q2")


def test_run_set_empty_word_is_initial():
    a = unflankable()
    assert run_set(a, ()) == a.initial


def test_run_set_bb_is_empty():
    a = unflankable()
    assert run_set(a, word("b b")) == frozenset()
    # cross-check with the word enumerator
    assert ("b", "b") not in oracle.enumerate_words(a, 2)


def test_accepts_unflankable():
    a = unflankable()
    assert accepts(a, word("a b"))
    assert not accepts(a, word("b b"))
    assert accepts(a, ())


def test_unknown_symbol_rejected():
    with pytest.raises(AutomatonError):
        run_set(unflankable(), ("z",))


def test_forbidden_after_pair():
    a1, _ = pair()
    assert forbidden_after(a1, ()) == {"b"}
    assert forbidden_after(a1, ("a",)) == {"a"}
    assert forbidden_after(Ffa(a1.automaton), ("a", "b")) == frozenset()


def test_forbidden_after_requires_accepted_word():
    a1, _ = pair()
    with pytest.raises(PreconditionError):
        forbidden_after(a1, ("b",))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(alphabet=("a",), state_names=("x",), transitions={(0, "a", 1)}),
        dict(alphabet=("a",), state_names=("x",), transitions={(0, "b", 0)}),
        dict(alphabet=("a",), state_names=("x",), initial={3}),
        dict(alphabet=(), state_names=("x",)),
        dict(alphabet=("a b",), state_names=("x",)),
        dict(alphabet=("a", "a"), state_names=("x",)),
        dict(alphabet=("a",), state_names=("x", "x")),
    ],
)
def test_construction_rejects_bad_input(kwargs):
    with pytest.raises(AutomatonError):
        Nfa(**kwargs)


def test_flank_validation():
    a = unflankable()
    with pytest.raises(AutomatonError):
        Ffa(a, frozenset({(9, "a")}))
    with pytest.raises(AutomatonError):
        Ffa(a, frozenset({(0, "z")}))


def test_alphabet_sorted_and_trim():
    a = Nfa(("b", "a"), ("x", "dead", "y"), frozenset({(0, "a", 2)}), frozenset({0}))
    assert a.alphabet == ("a", "b")
    assert not a.is_trimmed()
    t, remap = a.trim()
    assert t.state_names == ("x", "y")
    assert remap == {0: 0, 2: 1}
    assert t.is_trimmed()


def test_empty_initial_accepts_nothing():
    a = Nfa(("a",), ("x",), frozenset({(0, "a", 0)}), frozenset())
    assert not accepts(a, ())
    assert a.trim()[0].num_states == 0


def test_extend_alphabet_flanks_new_symbols():
    a1, _ = pair()
    f = a1.extend_alphabet(["c"])
    assert f.alphabet == ("a", "b", "c")
    assert {(0, "c"), (1, "c")} <= f.flank


@settings(max_examples=150, deadline=None)
@given(nfas(), st.data())
def test_prefix_closure_and_monotone_emptiness(a, data):
    u = data.draw(st.lists(st.sampled_from(a.alphabet), max_size=8))
    x = data.draw(st.lists(st.sampled_from(a.alphabet), max_size=4))
    if accepts(a, u + x):
        assert accepts(a, u)
    if not run_set(a, u):
        assert not run_set(a, u + x)
    assert run_set(a, u) == run_set(a, list(u))
