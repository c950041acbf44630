"""
Fraction-free linear algebra over ``Z[xi]``.

Rows are sparse linear forms ``{column: Poly}``.  Elimination multiplies
rows by pivots instead of dividing, then strips the integer content, so no
rational function is ever formed.  Unit pivots (``+1`` or ``-1``) are taken
whenever available, which keeps the entries small for the systems met here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set

from .poly import NotDivisible, Poly

LinearForm = Dict[int, Poly]


class PivotError(ArithmeticError):
    """The chosen free columns do not complement the pivots polynomially."""


@dataclass
class PolyMatrix:
    rows: List[LinearForm]
    columns: List[int]  # all unknowns, in elimination order
    labels: Dict[int, str] = field(default_factory=dict)

    @property
    def shape(self):
        return (len(self.rows), len(self.columns))


def _content_normalize(row: LinearForm) -> LinearForm:
    g = 0
    for c in row.values():
        g = _gcd(g, c.content())
        if g == 1:
            break
    if g > 1:
        row = {k: c.divexact(g) for k, c in row.items()}
    return row


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _combine(p: Poly, row: LinearForm, a: Poly, prow: LinearForm) -> LinearForm:
    """``p*row - a*prow`` with zero entries dropped."""
    out: LinearForm = {}
    if p.is_unit() and p.constant_term() == 1:
        out = dict(row)
    else:
        for k, c in row.items():
            out[k] = c * p
    for k, c in prow.items():
        v = out[k] - a * c if k in out else -(a * c)
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _score(c: Poly):
    return (not c.is_unit(), len(c.terms), c.degree())


@dataclass
class Elimination:
    pivots: Dict[int, LinearForm]  # pivot column -> its row
    leftover: List[LinearForm]  # rows with no entry in an allowed column


def eliminate(rows: Iterable[LinearForm], allowed: Sequence[int], budget: int = 10 ** 6) -> Elimination:
    """
    Gauss-Jordan elimination pivoting only in ``allowed`` columns.

    Columns are scanned in the order given, which fixes the pivot choice
    among candidates of equal quality.
    """
    rank_of = {c: i for i, c in enumerate(allowed)}
    active: List[LinearForm] = [r for r in (dict(x) for x in rows) if r]
    pivots: Dict[int, LinearForm] = {}
    steps = 0
    while True:
        best = None
        for ri, row in enumerate(active):
            for col, c in row.items():
                if col not in rank_of or col in pivots:
                    continue
                key = (_score(c), rank_of[col], ri)
                if best is None or key < best[0]:
                    best = (key, ri, col)
        if best is None:
            break
        _, ri, col = best
        prow = active.pop(ri)
        p = prow[col]
        if p.is_unit() and p.constant_term() == -1:
            prow = {k: -c for k, c in prow.items()}
            p = prow[col]
        new_active = []
        for row in active:
            a = row.get(col)
            if a is not None:
                steps += len(row) + len(prow)
                row = _content_normalize(_combine(p, row, a, prow))
            if row:
                new_active.append(row)
        active = new_active
        for pc, row in list(pivots.items()):
            a = row.get(col)
            if a is not None:
                steps += len(row) + len(prow)
                pivots[pc] = _content_normalize(_combine(p, row, a, prow))
        pivots[col] = prow
        if steps > budget:
            raise ArithmeticError(f"elimination exceeded {budget} steps")
    return Elimination(pivots, active)


def rank(matrix: PolyMatrix) -> int:
    return len(eliminate(matrix.rows, matrix.columns).pivots)


def solve_distinguished(matrix: PolyMatrix, distinguished: Sequence[int]) -> Dict[int, LinearForm]:
    """
    Express every non-distinguished unknown through the distinguished ones.

    Returns ``{g: {w: a_gw}}`` meaning ``r_g = sum_w a_gw r_w`` for all
    solutions, with every ``a_gw`` a polynomial.  Raises :class:`PivotError`
    if the distinguished unknowns are constrained, if some other unknown is
    left free, or if an exact division fails.
    """
    dset: Set[int] = set(distinguished)
    others = [c for c in matrix.columns if c not in dset]
    elim = eliminate(matrix.rows, others)
    for row in elim.leftover:
        if row:
            raise PivotError("relations among distinguished unknowns: " + ", ".join(matrix.labels.get(k, str(k)) for k in row))
    free = [c for c in others if c not in elim.pivots]
    if free:
        raise PivotError("unknowns left free: " + ", ".join(matrix.labels.get(k, str(k)) for k in free))
    out: Dict[int, LinearForm] = {}
    for g, row in elim.pivots.items():
        p = row[g]
        expr: LinearForm = {}
        for w, q in row.items():
            if w == g:
                continue
            if w not in dset:
                raise PivotError(f"pivot row for {matrix.labels.get(g, g)} still references {matrix.labels.get(w, w)}")
            try:
                v = (-q).divexact(p)
            except NotDivisible:
                raise PivotError(
                    f"coefficient of {matrix.labels.get(w, w)} in {matrix.labels.get(g, g)} is not a polynomial"
                ) from None
            if v:
                expr[w] = v
        out[g] = expr
    return out
