import pytest

from crhecke.basis import get_basis, straighten
from crhecke.golden import (
    ERRATUM,
    FAIL,
    PASS,
    _Report,
    _with_errata,
    errata_by_item,
    format_report,
    golden_element,
    load_golden,
    printed_distinguished,
    summary_counts,
    verify_relations,
    verify_suite,
)
from crhecke.centre import solve_relations
from crhecke.groups import GroupSpec
from crhecke.hecke import commutator

G4 = GroupSpec.g4()


@pytest.fixture(scope="module")
def reports():
    return {s: verify_suite(s) for s in ("g4", "g412")}


@pytest.mark.parametrize(
    "suite, counts, errata",
    [
        ("g4", (96, 4, 0), {"centre_relations/C5", "centre_relations/C6", "centre_relations/C13", "centre_relations/C14"}),
        ("g412", (55, 3, 0), {"centre_elements/C4", "centre_elements/C13", "centre_elements/C14"}),
    ],
)
def test_suite_counts(reports, suite, counts, errata):
    checks = reports[suite]
    assert summary_counts(checks) == counts
    assert {c.item.split("/", 1)[1] for c in checks if c.status == ERRATUM} == errata


def test_report_format(reports):
    text = format_report(reports["g4"])
    assert text.splitlines()[-1] == "100 checks: 96 pass, 4 errata, 0 fail"


def test_stale_erratum_fails():
    rep = _Report("")
    errata = {"x": {"item": "x", "rhs": [], "reason": "r"}}
    _with_errata(rep, "x", errata, True, lambda: True)
    _with_errata(rep, "x", errata, False, lambda: True)
    _with_errata(rep, "x", errata, False, lambda: False)
    _with_errata(rep, "y", errata, True, lambda: False)
    assert [c.status for c in rep.checks] == [FAIL, ERRATUM, FAIL, PASS]


def test_golden_words_need_not_be_basis_words():
    bs = get_basis(G4, "g4-sts")
    x = golden_element(bs, [["1", "tst"], ["xi1", "s^3"]])
    assert x == straighten(bs, "sts") + straighten(bs, "sss").scale(bs.xi("s", 1))


def test_verify_relations_public():
    bs = get_basis(G4, "g4-sts")
    data = load_golden("g4")
    block = data["s_relations"]
    rel = solve_relations(bs, ["s"], printed_distinguished(bs, ["s"]))
    checks = verify_relations(bs, rel, block, section="s")
    assert len(checks) == 11 and all(c.status == PASS for c in checks)


def test_g412_corrections_are_central():
    basis = get_basis(GroupSpec.gr1n(4, 2), "bm")
    data = load_golden("g412")
    errata = errata_by_item(data)
    for e in data["centre_elements"]["elements"]:
        item = f"centre_elements/{e['id']}"
        x = golden_element(basis, e["terms"])
        if item in errata:
            assert commutator(x, "s") or commutator(x, "t")
            x = x + golden_element(basis, errata[item]["correction"])
        assert not commutator(x, "s") and not commutator(x, "t")


def test_printed_distinguished_lookup():
    assert len(printed_distinguished(get_basis(G4, "g4-sts"), ["t", "s"])) == 7
    assert printed_distinguished(get_basis(GroupSpec.gr1n(3, 2), "bm"), ["s"]) is None


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify_suite("g5")
