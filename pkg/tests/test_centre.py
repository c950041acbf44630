import pytest

from crhecke.basis import get_basis, straighten
from crhecke.centre import (
    centralizer_basis,
    commutator_system,
    minimal_distinguished,
    nullspace,
    rebase,
    relations_additive,
    repivot,
    solution_rank,
    solve_relations,
)
from crhecke.golden import printed_distinguished
from crhecke.groups import GroupSpec
from crhecke.hecke import commutator
from crhecke.linalg import PivotError

G4 = GroupSpec.g4()


@pytest.mark.parametrize(
    "spec, scheme, gens, rank",
    [
        (G4, "g4-sts", ["s"], 12),
        (G4, "g4-tst", ["t"], 12),
        (G4, "g4-sts", ["t"], 12),
        (G4, "g4-sts", ["s", "t"], 7),
        (GroupSpec.gr1n(4, 2), "bm", ["t"], 20),
        (GroupSpec.gr1n(4, 2), "bm", ["s"], 20),
        (GroupSpec.gr1n(4, 2), "bm", ["s", "t"], 14),
    ],
)
def test_rank_equals_class_count(spec, scheme, gens, rank):
    basis = get_basis(spec, scheme)
    assert solution_rank(basis, gens) == rank == len(basis.group.j_conjugacy_classes(gens))


@pytest.mark.parametrize("r", [2, 3, 5])
@pytest.mark.parametrize("gens", [["s"], ["t"], ["s", "t"]])
def test_default_solver_gives_class_elements(r, gens):
    basis = get_basis(GroupSpec.gr1n(r, 2), "bm")
    res = centralizer_basis(basis, gens)
    classes = basis.group.j_conjugacy_classes(gens)
    for w, x in zip(res.relations.distinguished, res.elements):
        assert not any(commutator(x, g) for g in gens)
        cl = next(c for c in classes if w in c)
        assert x.specialize() == {y: 1 for y in cl}


def test_g4_additive_relations_match_solver():
    basis = get_basis(G4, "g4-sts")
    rel = solve_relations(basis, ["s"], printed_distinguished(basis, ["s"]))
    conj = basis.group.class_of(["s"])
    for c in basis.group.double_cosets("s"):
        if c.kind != "additive":
            continue
        for g, form in relations_additive(basis, c).items():
            assert rel.expression(g) == form
            for w, a in form.items():
                # constant term 1 exactly on the s-conjugate unknown
                assert a.constant_term() == (1 if conj[w] == conj[g] else 0)


def test_additive_cosets_are_symmetric():
    basis = get_basis(G4, "g4-sts")
    gd = basis.group
    res = centralizer_basis(basis, ["s"])
    s = gd.gen("s")
    pw = [gd.power(s, i) for i in range(3)]
    for c in gd.double_cosets("s"):
        if c.kind != "additive":
            continue
        for x in res.elements:
            for i in range(3):
                for j in range(3):
                    a = gd.mul(gd.mul(pw[i], c.rep), pw[j])
                    b = gd.mul(gd.mul(pw[j], c.rep), pw[i])
                    assert x.coeff(a) == x.coeff(b)


def test_relations_additive_rejects_other_cosets():
    basis = get_basis(G4, "g4-sts")
    c = next(c for c in basis.group.double_cosets("s") if c.kind == "centralizing")
    with pytest.raises(ValueError):
        relations_additive(basis, c)


def test_bad_distinguished_set():
    basis = get_basis(G4, "g4-sts")
    two_from_one_class = [basis.id_of("1"), basis.id_of("s"), basis.id_of("t")] + list(range(3, 12))
    with pytest.raises(PivotError):
        solve_relations(basis, ["s", "t"], two_from_one_class[:7])


def test_minimal_distinguished_are_shortest():
    basis = get_basis(G4, "g4-sts")
    for choices, cl in zip(minimal_distinguished(basis, ["s", "t"]), basis.group.j_conjugacy_classes()):
        lmin = min(basis.group.length(x) for x in cl)
        assert choices and all(basis.group.length(x) == lmin for x in choices)


def test_nullspace_agrees_with_centralizer_basis():
    basis = get_basis(G4, "g4-sts")
    dist = printed_distinguished(basis, ["s", "t"])
    els = nullspace(commutator_system(basis, ["s", "t"]), basis, ["s", "t"], dist)
    assert els == centralizer_basis(basis, ["s", "t"], distinguished=dist).elements


def test_rebase_round_trip():
    bs, bt = get_basis(G4, "g4-sts"), get_basis(G4, "g4-tst")
    for w in ["s^2t^2s", "ts^2t^2", "tststs", "st^2s^2t"]:
        x = straighten(bs, w)
        assert rebase(x, bt) == straighten(bt, w)
        assert rebase(rebase(x, bt), bs) == x


def test_repivot_is_identity_on_pivoted_basis():
    basis = get_basis(G4, "g4-sts")
    res = centralizer_basis(basis, ["s"], distinguished=printed_distinguished(basis, ["s"]))
    assert repivot(res.elements, res.relations.distinguished) == res.elements
    shuffled = [res.elements[0] + res.elements[1]] + res.elements[1:]
    assert repivot(shuffled, res.relations.distinguished) == res.elements
