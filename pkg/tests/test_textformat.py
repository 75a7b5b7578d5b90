import random

import pytest
from hypothesis import given, settings

from automata_gen import DATA, nfas, random_flanked, alphabet_of
from flanked.core import Ffa, Nfa
from flanked.errors import AutomatonError
from flanked.textformat import ParseError, dumps, parse

CORPUS = sorted(DATA.glob("*.[nf]fa"))


def shuffled(text: str, rng: random.Random) -> str:
    lines = text.splitlines()
    body = lines[1:]
    rng.shuffle(body)
    return "\n".join([lines[0], *body]) + "\n"


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.name)
def test_corpus_is_canonical(path):
    text = path.read_text(encoding="utf-8")
    assert dumps(parse(text)) == text


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.name)
def test_shuffled_body_reprints_canonically(path):
    text = path.read_text(encoding="utf-8")
    rng = random.Random(path.name)
    for _ in range(5):
        x = parse(shuffled(text, rng))
        assert x == parse(text)
        assert dumps(x) == text


@settings(max_examples=100, deadline=None)
@given(nfas())
def test_round_trip_nfa(a):
    assert parse(dumps(a)) == a


def test_round_trip_random_ffa():
    rng = random.Random(0)
    for _ in range(50):
        f = random_flanked(rng, 5, alphabet_of(3))
        assert parse(dumps(f)) == f


def test_minimal_document():
    a = parse("nfa v1\nalphabet a\nstates s\ninitial\n")
    assert isinstance(a, Nfa)
    assert a.num_states == 1 and not a.initial and not a.transitions


def test_comments_and_sharp_symbols():
    text = """
    # leading comment
    ffa v1   # trailing
    alphabet 1 #1
    states p q
    initial p
    trans p 1 q
    flank q #1 # the dead end
    """
    f = parse(text)
    assert isinstance(f, Ffa)
    assert f.alphabet == ("#1", "1")
    assert f.flank == frozenset({(1, "#1")})


def test_cannot_print_bare_sharp():
    a = Nfa(("#",), ("s",), frozenset(), frozenset({0}))
    with pytest.raises(AutomatonError):
        dumps(a)


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("", None, "empty"),
        ("dfa v1\n", 1, "header"),
        ("nfa v2\n", 1, "version"),
        ("nfa v1\nalphabet a\nalphabet b\n", 3, "duplicate 'alphabet'"),
        ("nfa v1\nalphabet a\nstates s\ninitial s\ntrans s a\n", 5, "trans expects"),
        ("nfa v1\nalphabet a\nstates s\ninitial s\nflank s a\n", 5, "only allowed"),
        ("nfa v1\nalphabet a\nstates s\ninitial t\n", 4, "undeclared state"),
        ("nfa v1\nalphabet a\nstates s\ninitial s\ntrans s b s\n", 5, "undeclared symbol"),
        ("nfa v1\nalphabet a\nstates s\ninitial s\ntrans s a s\ntrans s a s\n", 6, "duplicate transition"),
        ("ffa v1\nalphabet a\nstates s\ninitial s\nflank s a\nflank s a\n", 6, "duplicate flank"),
        ("nfa v1\nalphabet a a\n", 2, "duplicate symbol"),
        ("nfa v1\nalphabet\n", 2, "non-empty"),
        ("nfa v1\nstates s s\n", 2, "duplicate state"),
        ("nfa v1\nalphabet a\nstates s\n", None, "missing 'initial'"),
        ("nfa v1\nbogus x\n", 2, "unknown directive"),
        ("nfa v1\nalphabet a\nnfa v1\n", 3, "header"),
    ],
)
def test_parse_errors(text, lineno, fragment):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.lineno == lineno
    assert fragment in str(info.value)
