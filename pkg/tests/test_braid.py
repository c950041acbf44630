import pytest
from hypothesis import given
from hypothesis import strategies as st

from crhecke.braid import IDENTITY, braid_class, burau, canonical, lift_key

signed = st.lists(st.tuples(st.integers(0, 1), st.sampled_from([1, -1])), max_size=10)


def test_braid_relation():
    assert burau([(0, 1), (1, 1), (0, 1)]) == burau([(1, 1), (0, 1), (1, 1)])


def test_generators_do_not_commute():
    assert burau([(0, 1), (1, 1)]) != burau([(1, 1), (0, 1)])


@given(signed)
def test_word_times_inverse_is_identity(w):
    inv = [(g, -e) for g, e in reversed(w)]
    assert canonical(burau(w + inv)) == canonical(IDENTITY)


def test_lift_key_identifies_square_blocks_with_inverses():
    # s^2 t s = s^{-1} t s, and t s t^{-1} = s^{-1} t s by the braid relation
    assert lift_key(("s", "s", "t", "s"), ("s", "t")) == lift_key(("t", "s", "t", "t"), ("s", "t"))
    assert lift_key(("s", "t"), ("s", "t")) != lift_key(("t", "s"), ("s", "t"))
    with pytest.raises(ValueError):
        lift_key(("s", "s", "s"), ("s", "t"))


def test_braid_class():
    rel = [(("s", "t", "s"), ("t", "s", "t"))]
    assert braid_class(("s", "t", "s"), rel) == [("s", "t", "s"), ("t", "s", "t")]
    assert braid_class(("s", "s"), rel) == [("s", "s")]
    assert len(braid_class(("s", "t", "s", "t"), rel)) == 3
