"""
Braid-group tools used by the G4 straightening engine.

Two positive words that agree under the homogeneous braid relation give the
same Hecke element.  More generally, if every square block ``x^2`` of a
word is replaced by ``x^{-1}`` and the resulting signed braid words are equal
in the braid group B_3, the corresponding Hecke elements differ only by
terms of smaller length, because ``T_x^2 = T_x^{-1} + xi_2 T_x + xi_1``.
Equality in B_3 is decided with the reduced Burau representation, which is
faithful on three strands.
"""

from __future__ import annotations

from typing import Dict, Iterable, Sequence, Tuple

from .words import Word, runs

Laurent = Dict[int, int]  # exponent of q -> coefficient
Matrix = Tuple[Tuple[Laurent, Laurent], Tuple[Laurent, Laurent]]


def _ladd(p: Laurent, q: Laurent) -> Laurent:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + v
        if not out[k]:
            del out[k]
    return out


def _lmul(p: Laurent, q: Laurent) -> Laurent:
    out: Laurent = {}
    for i, a in p.items():
        for j, b in q.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return {k: v for k, v in out.items() if v}


def mat_mul(a, b):
    return tuple(
        tuple(_ladd(_lmul(a[i][0], b[0][j]), _lmul(a[i][1], b[1][j])) for j in range(2))
        for i in range(2)
    )


IDENTITY = (({0: 1}, {}), ({}, {0: 1}))

# sigma_1 and sigma_2 with their inverses
BURAU = {
    (0, 1): (({1: -1}, {0: 1}), ({}, {0: 1})),
    (0, -1): (({-1: -1}, {-1: 1}), ({}, {0: 1})),
    (1, 1): (({0: 1}, {}), ({1: 1}, {1: -1})),
    (1, -1): (({0: 1}, {}), ({0: 1}, {-1: -1})),
}


def burau(letters: Iterable[Tuple[int, int]]):
    """Burau matrix of a signed word given as ``(strand_gen, +-1)`` pairs."""
    m = IDENTITY
    for letter in letters:
        m = mat_mul(m, BURAU[letter])
    return m


def canonical(m) -> tuple:
    return tuple(tuple(tuple(sorted(e.items())) for e in row) for row in m)


def lift_key(word: Sequence[str], order: Sequence[str]) -> tuple:
    """
    Canonical form of the signed braid obtained by replacing square blocks
    with inverses.  ``order`` names the two generators mapped to sigma_1 and
    sigma_2.  Blocks must have exponent 1 or 2.
    """
    letters = []
    for x, e in runs(word):
        g = order.index(x)
        if e == 1:
            letters.append((g, 1))
        elif e == 2:
            letters.append((g, -1))
        else:
            raise ValueError("lift_key needs exponents 1 or 2")
    return canonical(burau(letters))


def braid_moves(word: Word, relations: Sequence[Tuple[Word, Word]]):
    """Words obtained from ``word`` by one application of a relation ``u = v``."""
    for lhs, rhs in relations:
        for a, b in ((lhs, rhs), (rhs, lhs)):
            k = len(a)
            for i in range(len(word) - k + 1):
                if word[i:i + k] == a:
                    yield word[:i] + b + word[i + k:]


def braid_class(word: Word, relations: Sequence[Tuple[Word, Word]]) -> list:
    """All words reachable by homogeneous braid moves, sorted."""
    seen = {tuple(word)}
    stack = [tuple(word)]
    while stack:
        w = stack.pop()
        for v in braid_moves(w, relations):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return sorted(seen)
