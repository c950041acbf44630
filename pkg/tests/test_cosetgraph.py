import pytest

from crhecke.basis import get_basis
from crhecke.cosetgraph import DCosetGraph, build_graph, emit_dot, graph_to_json, is_stable, transitive_reduction
from crhecke.groups import GroupSpec

CASES = [(GroupSpec.g4(), "g4-sts"), (GroupSpec.g4(), "g4-tst")] + [(GroupSpec.gr1n(r, 2), "bm") for r in (2, 3, 4, 5)]


@pytest.mark.parametrize("spec, scheme", CASES)
@pytest.mark.parametrize("gen", ["s", "t"])
def test_terminal_iff_stable(spec, scheme, gen):
    basis = get_basis(spec, scheme)
    graph = build_graph(basis, gen)
    for c, term in zip(graph.cosets, graph.terminal):
        assert is_stable(basis, c) == term


@pytest.mark.parametrize("gen", ["s", "t"])
def test_type_b2_is_all_terminal(gen):
    graph = build_graph(get_basis(GroupSpec.gr1n(2, 2), "bm"), gen)
    assert not graph.edges and all(graph.terminal)


@pytest.mark.parametrize("scheme, gen", [("g4-sts", "t"), ("g4-tst", "s")])
def test_g4_mixed_pairings_have_arrows(scheme, gen):
    # derived: the s-stable basis is not t-stable, and vice versa
    graph = build_graph(get_basis(GroupSpec.g4(), scheme), gen)
    assert graph.edges and graph.is_acyclic()


@pytest.mark.parametrize("r", [3, 4, 5])
def test_t_stable_cosets_are_stable(r):
    basis = get_basis(GroupSpec.gr1n(r, 2), "bm")
    gd = basis.group
    cosets = gd.double_cosets("s")
    where = gd.coset_of(cosets)
    for a in range(2, r):
        assert is_stable(basis, cosets[where[gd.eval_word(("t",) * a + ("s", "t"))]])
        for b in range(2, r):
            assert not is_stable(basis, cosets[where[gd.eval_word(("t",) * a + ("s",) + ("t",) * b)]])


def test_dot_is_deterministic_and_reduced():
    basis = get_basis(GroupSpec.gr1n(4, 2), "bm")
    full = emit_dot(build_graph(basis, "s"))
    assert full == emit_dot(build_graph(basis, "s"))
    assert full.count("->") == 9
    reduced = emit_dot(build_graph(basis, "s"), reduce=True)
    assert reduced.count("->") == 6
    assert '"t^3st^3" -> "t"' not in reduced
    assert reduced.startswith('digraph "G(4,1,2) <s>-<s> double cosets')


def test_g4_s_graph_dot_has_isolated_vertices():
    dot = emit_dot(build_graph(get_basis(GroupSpec.g4(), "g4-sts"), "s"))
    assert dot.count("doublecircle") == 4 and "->" not in dot


def test_empty_graph_dot():
    basis = get_basis(GroupSpec.g4(), "g4-sts")
    lines = emit_dot(DCosetGraph(basis, "s", [], set())).splitlines()
    assert len(lines) == 2 and lines[-1] == "}"


def test_transitive_reduction():
    assert transitive_reduction({(0, 1), (1, 2), (0, 2)}) == {(0, 1), (1, 2)}
    assert transitive_reduction({(0, 1)}) == {(0, 1)}


def test_graph_json():
    data = graph_to_json(build_graph(get_basis(GroupSpec.gr1n(4, 2), "bm"), "s"))
    assert len(data["vertices"]) == 10 and len(data["edges"]) == 9 and data["acyclic"]
