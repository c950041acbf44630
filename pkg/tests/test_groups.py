import pytest

from crhecke.golden import load_golden
from crhecke.groups import GroupSpec, build_group, get_group, parse_group_spec


@pytest.fixture(scope="module")
def g4():
    return get_group(GroupSpec.g4())


def ids(gd, words):
    return {gd.eval_word(gd.parse(w)) for w in words}


def test_g4_order_and_generators(g4):
    assert g4.order == 24
    assert g4.gen_orders == {"s": 3, "t": 3}
    assert g4.generator_classes() == [["s", "t"]]


def test_g4_braid_relation(g4):
    assert g4.eval_word(g4.parse("sts")) == g4.eval_word(g4.parse("tst"))


def test_g4_facts_match_printed(g4):
    data = load_golden("g4")
    got = {frozenset(c) for c in g4.j_conjugacy_classes()}
    assert got == {frozenset(ids(g4, cl)) for cl in data["conjugacy_classes"]}
    assert set(g4.centralizer(g4.gen("s"))) == ids(g4, data["centralizer_s"])
    assert set(g4.centralizer(g4.gen("t"))) == ids(g4, data["centralizer_t"])
    assert set(g4.centre()) == ids(g4, data["centre"])


@pytest.mark.parametrize("gens, count", [(("s",), 12), (("t",), 12), (("s", "t"), 7)])
def test_j_class_counts(g4, gens, count):
    assert len(g4.j_conjugacy_classes(gens)) == count


def test_g4_double_cosets(g4):
    cosets = g4.double_cosets("s")
    assert {c.rep for c in cosets} == ids(g4, ["1", "ts^2t", "t", "t^2"])
    assert sum(len(c.members) for c in cosets) == 24
    assert all(c.kind in ("centralizing", "additive") for c in cosets)


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_gr12_orders_and_coset_counts(r):
    gd = get_group(GroupSpec.gr1n(r, 2))
    assert gd.order == 2 * r * r
    assert gd.gen_orders == {"t": r, "s": 2}
    assert len(gd.double_cosets("t")) == r + 1
    # reps t^a and t^a s t^b with a >= b >= 1
    assert len(gd.double_cosets("s")) == r * (r + 1) // 2


def test_gr1n_larger_rank():
    gd = build_group(GroupSpec.gr1n(3, 3))
    assert gd.order == 3 ** 3 * 6
    assert gd.gen_names == ("t", "s1", "s2")


@pytest.mark.parametrize("r", [3, 4])
def test_reduced_words_are_reduced(r):
    gd = get_group(GroupSpec.gr1n(r, 2))
    for x in range(gd.order):
        words = gd.reduced_words(x)
        assert words
        assert all(len(w) == gd.length(x) and gd.eval_word(w) == x for w in words)


@pytest.mark.parametrize(
    "text, spec",
    [("G4", GroupSpec.g4()), ("g(4,1,2)", GroupSpec.gr1n(4, 2)), (" G(3, 1, 2) ", GroupSpec.gr1n(3, 2))],
)
def test_parse_group_spec(text, spec):
    assert parse_group_spec(text) == spec


def test_parse_group_spec_error():
    with pytest.raises(ValueError):
        parse_group_spec("G5")


def test_group_cache_is_shared():
    assert get_group(GroupSpec.g4()) is get_group(GroupSpec.g4())
