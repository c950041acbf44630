"""
Centralizers of generators and the centre, as ``Z[xi]``-modules.

An element ``h = sum r_w T_w`` centralizes ``T_g`` exactly when every
coefficient of ``h T_g - T_g h`` vanishes.  These conditions are linear in
the unknowns ``r_w``; they are collected into a :class:`PolyMatrix` and
solved fraction-free.  A distinguished set ``M`` of unknowns, one per
J-conjugacy class, is kept free; every other unknown is then forced to be a
polynomial combination of the distinguished ones, and the class element for
``w in M`` is the solution with ``r_w = 1`` and the other distinguished
coefficients 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence

from .basis import ReducedBasis, _acc, straighten
from .element import HeckeElement
from .groups import DCoset
from .hecke import commutator
from .linalg import LinearForm, PivotError, PolyMatrix, rank, solve_distinguished
from .poly import Poly

__all__ = [
    "RelationSet",
    "CentralizerResult",
    "commutator_system",
    "solution_rank",
    "minimal_distinguished",
    "solve_relations",
    "nullspace",
    "class_element",
    "centralizer_basis",
    "relations_additive",
    "rebase",
    "repivot",
]


@dataclass
class RelationSet:
    """``r_g = sum_{w in M} a_gw r_w`` for every ``g`` outside ``M``."""

    basis: ReducedBasis
    gens: tuple
    distinguished: List[int]
    exprs: Dict[int, LinearForm]

    def expression(self, g: int) -> LinearForm:
        if g in self.distinguished:
            return {g: Poly.const(1, self.basis.params)}
        return self.exprs[g]

    def format(self, g: int) -> str:
        return format_form(self.basis, self.expression(g))


@dataclass
class CentralizerResult:
    basis: ReducedBasis
    gens: tuple
    relations: RelationSet
    elements: List[HeckeElement]  # one per distinguished word, same order
    rank: int


def format_form(basis: ReducedBasis, form: LinearForm) -> str:
    if not form:
        return "0"
    parts = []
    for w, c in sorted(form.items(), key=lambda kc: basis.sort_key(kc[0])):
        r = f"r[{basis.word_str(w)}]"
        if c == 1:
            parts.append(r)
        elif c == -1:
            parts.append("-" + r)
        elif len(c.terms) == 1:
            parts.append(f"{c}*{r}")
        else:
            parts.append(f"({c})*{r}")
    return " + ".join(parts).replace("+ -", "- ")


def commutator_system(basis: ReducedBasis, gens: Sequence[str]) -> PolyMatrix:
    """Rows: coefficient of ``T_y`` in ``h T_g - T_g h``, for each ``g`` and ``y``."""
    tab = basis.table
    order = basis.sorted_ids()
    rows: List[LinearForm] = []
    for g in gens:
        per_y: Dict[int, LinearForm] = {}
        for w in order:
            diff: Dict[int, Poly] = dict(tab.right[w][g])
            _acc(diff, tab.left[w][g], Poly.const(-1, basis.params))
            for y, c in diff.items():
                per_y.setdefault(y, {})[w] = c
        for y in order:
            row = per_y.get(y)
            if row:
                rows.append(row)
    labels = {x: basis.word_str(x) for x in order}
    return PolyMatrix(rows=rows, columns=order, labels=labels)


def solution_rank(basis: ReducedBasis, gens: Sequence[str]) -> int:
    """Dimension of the solution space over the fraction field."""
    m = commutator_system(basis, gens)
    return len(m.columns) - rank(m)


def minimal_distinguished(basis: ReducedBasis, gens: Sequence[str]) -> List[List[int]]:
    """For each J-conjugacy class, its shortest members in (length, word) order."""
    out = []
    for cl in basis.group.j_conjugacy_classes(gens):
        lmin = min(basis.group.length(x) for x in cl)
        out.append(sorted((x for x in cl if basis.group.length(x) == lmin), key=basis.sort_key))
    return out


def solve_relations(basis: ReducedBasis, gens: Sequence[str], distinguished: Sequence[int]) -> RelationSet:
    m = commutator_system(basis, gens)
    exprs = solve_distinguished(m, distinguished)
    return RelationSet(basis, tuple(gens), list(distinguished), exprs)


def nullspace(
    matrix: PolyMatrix, basis: ReducedBasis, gens: Sequence[str], distinguished: Sequence[int]
) -> List[HeckeElement]:
    """
    Integral solution basis of a commutator system, pivoted on ``distinguished``.

    Raises :class:`PivotError` when some coefficient is not a polynomial,
    which means the distinguished set has to change.
    """
    exprs = solve_distinguished(matrix, distinguished)
    relset = RelationSet(basis, tuple(gens), list(distinguished), exprs)
    return [class_element(basis, relset, w) for w in distinguished]


def class_element(basis: ReducedBasis, relset: RelationSet, w: int, verify: bool = True) -> HeckeElement:
    """The solution with ``r_w = 1`` and every other distinguished coefficient 0."""
    if w not in relset.distinguished:
        raise ValueError(f"{basis.word_str(w)} is not distinguished")
    terms = {w: Poly.const(1, basis.params)}
    for g, expr in relset.exprs.items():
        c = expr.get(w)
        if c:
            terms[g] = c
    e = HeckeElement(basis, terms)
    if verify:
        for g in relset.gens:
            if commutator(e, g):
                raise ArithmeticError(f"class element for {basis.word_str(w)} does not commute with T_{g}")
    return e


def centralizer_basis(
    basis: ReducedBasis,
    gens: Sequence[str],
    distinguished: Optional[Sequence[int]] = None,
    fallback: Optional[Sequence[int]] = None,
    max_tries: int = 64,
) -> CentralizerResult:
    """
    Integral basis of the centralizer of ``{T_g : g in gens}``.

    With ``distinguished`` given, that set is used as is.  Otherwise the
    shortest class members are tried (ties in every combination, up to
    ``max_tries``), and ``fallback`` is used if none of them works.
    """
    gens = tuple(gens)
    n_classes = len(basis.group.j_conjugacy_classes(gens))
    r = solution_rank(basis, gens)
    if r != n_classes:
        raise ArithmeticError(f"solution rank {r} differs from the {n_classes} J-conjugacy classes")
    candidates: List[List[int]] = []
    if distinguished is not None:
        candidates.append(list(distinguished))
    else:
        for k, choice in enumerate(product(*minimal_distinguished(basis, gens))):
            if k >= max_tries:
                break
            candidates.append(list(choice))
        if fallback is not None:
            candidates.append(list(fallback))
    errors = []
    for cand in candidates:
        try:
            rel = solve_relations(basis, gens, cand)
        except PivotError as exc:
            errors.append(str(exc))
            continue
        elements = [class_element(basis, rel, w) for w in cand]
        return CentralizerResult(basis, gens, rel, elements, r)
    raise PivotError("no distinguished set worked: " + "; ".join(errors[:3]))


def relations_additive(basis: ReducedBasis, dcoset: DCoset) -> Dict[int, LinearForm]:
    """
    Coefficient relations forced on an additive coset ``<s> d <s>``.

    Every member ``s^i d s^j`` is expressed through the unknowns
    ``r_{d s^k}``: by symmetry when ``j = 0``, and otherwise by the
    closed formula (two branches, ``i + j < m`` or not).
    """
    if dcoset.kind != "additive":
        raise ValueError(f"coset of {basis.word_str(dcoset.rep)} is {dcoset.kind}, not additive")
    gd = basis.group
    s = dcoset.gen
    n = basis.order(s)
    g = gd.gen(s)
    pw = [gd.power(g, i) for i in range(n)]
    d = dcoset.rep
    xi = [basis.xi(s, i) for i in range(n)]
    one = xi[0]

    def el(i, j):
        return gd.mul(gd.mul(pw[i], d), pw[j])

    def r(k):  # r_{d s^k}
        return el(0, k)

    def add(form, x, c):
        v = form[x] + c if x in form else c
        if v:
            form[x] = v
        else:
            form.pop(x, None)

    out: Dict[int, LinearForm] = {}
    for i in range(1, n):
        out[el(i, 0)] = {r(i): one}
        for j in range(1, n):
            form: LinearForm = {}
            if i + j < n:
                add(form, r(i + j), one)
                for k in range(i):
                    add(form, r(j + k), xi[i - k])
                    add(form, r(i - k - 1), -xi[j + k + 1])
            else:
                add(form, r(i + j - n), one)
                add(form, r(n - 1), xi[i + j - n + 1])
                for k in range(n - j - 1):
                    add(form, r(j + k), xi[i - k])
                    add(form, r(i - k - 1), -xi[j + k + 1])
            out[el(i, j)] = form
    return out


def rebase(x: HeckeElement, target: ReducedBasis) -> HeckeElement:
    """Re-express ``x`` in another basis of the same algebra."""
    if x.basis.group is not target.group and x.basis.group.spec != target.group.spec:
        raise ValueError("bases belong to different groups")
    out = HeckeElement.zero(target)
    for w, c in x.terms.items():
        out = out + straighten(target, x.basis.words[w]).scale(c)
    return out


def repivot(elements: Sequence[HeckeElement], distinguished: Sequence[int]) -> List[HeckeElement]:
    """
    Change of basis of a free module so that element ``k`` has coefficient 1
    on ``distinguished[k]`` and 0 on the other distinguished words.

    Needs the coefficient matrix on the distinguished words to be unimodular
    (invertible over ``Z[xi]``); computed by unit-pivot Gauss-Jordan.
    """
    basis = elements[0].basis
    n = len(distinguished)
    if len(elements) != n:
        raise ValueError("need as many elements as distinguished words")
    rows = list(elements)
    for col, w in enumerate(distinguished):
        piv = None
        for k in range(col, n):
            c = rows[k].coeff(w)
            if c.is_unit():
                piv = k
                break
        if piv is None:
            raise PivotError(f"no unit pivot for {basis.word_str(w)}")
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col].coeff(w)
        rows[col] = rows[col].scale(p)  # p = +-1 is its own inverse
        for k in range(n):
            if k != col:
                a = rows[k].coeff(w)
                if a:
                    rows[k] = rows[k] - rows[col].scale(a)
    return rows
