import pytest
from hypothesis import given
from hypothesis import strategies as st

from crhecke.words import WordError, format_word, from_runs, parse_word, runs, tex_word

words = st.lists(st.sampled_from("st"), max_size=12).map(tuple)


@given(words)
def test_format_parse_round_trip(w):
    assert parse_word(format_word(w), ("s", "t")) == w


@given(words)
def test_runs_round_trip(w):
    assert from_runs(runs(w)) == w


@pytest.mark.parametrize(
    "text, word",
    [("1", ()), ("", ()), ("t^3st^2", ("t",) * 3 + ("s",) + ("t",) * 2), ("s^{2}t", ("s", "s", "t"))],
)
def test_parse_examples(text, word):
    assert parse_word(text, ("s", "t")) == word


def test_multi_letter_names():
    assert parse_word("s1s2^2t", ("t", "s1", "s2")) == ("s1", "s2", "s2", "t")


def test_parse_error():
    with pytest.raises(WordError):
        parse_word("sx", ("s", "t"))


def test_tex_word():
    assert tex_word(("t", "s", "s")) == "ts^{2}"
    assert tex_word(()) == "1"
