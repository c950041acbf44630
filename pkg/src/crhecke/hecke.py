"""
Multiplication in the Hecke algebra through the straightening table.

``x * y`` is evaluated by feeding the letters of each basis word of ``y``
through the right-multiplication table, starting from ``x``.  Only the
generator tables are stored, so memory stays ``O(|W| |S|)``.
"""

from __future__ import annotations

from typing import Dict

from .basis import ReducedBasis, _acc, power_coefficients
from .element import BasisMismatch, HeckeElement
from .poly import Poly

__all__ = [
    "h_add",
    "h_scale",
    "h_mul",
    "commutator",
    "generator_power",
    "specialize",
    "support_cosets",
    "T",
]


def T(basis: ReducedBasis, word) -> HeckeElement:
    return basis.T(word)


def h_add(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    return x + y


def h_scale(p, x: HeckeElement) -> HeckeElement:
    return x.scale(p)


def h_mul(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    if x.basis.name != y.basis.name:
        raise BasisMismatch(f"{x.basis.name} vs {y.basis.name}")
    basis = x.basis
    tab = basis.table
    out: Dict[int, Poly] = {}
    start = dict(x.terms)
    if not start:
        return HeckeElement.zero(basis)
    for w, c in y.terms.items():
        vec = tab.fold_right(basis.words[w], start)
        _acc(out, vec, c)
    return HeckeElement._raw(basis, out)


def mul_generator(x: HeckeElement, g: str, side: str = "right") -> HeckeElement:
    tab = x.basis.table
    vec = tab.act_right(dict(x.terms), g) if side == "right" else tab.act_left(dict(x.terms), g)
    return HeckeElement._raw(x.basis, vec)


def commutator(x: HeckeElement, g: str) -> HeckeElement:
    """``x T_g - T_g x``."""
    return mul_generator(x, g, "right") - mul_generator(x, g, "left")


def generator_power(basis: ReducedBasis, g: str, e: int) -> HeckeElement:
    """``T_g^e`` in the basis ``{T_{g^i} : 0 <= i < m}``."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    m = basis.order(g)
    coeffs = power_coefficients(m, e, [basis.xi(g, i) for i in range(m)])
    return HeckeElement(basis, {basis.id_of((g,) * i): c for i, c in enumerate(coeffs)})


def specialize(x: HeckeElement) -> Dict[int, int]:
    return x.specialize()


def support_cosets(x: HeckeElement, cosets: list) -> set:
    """Indices of the double cosets meeting the support of ``x``."""
    where: Dict[int, int] = {}
    for c in cosets:
        for y in c.members:
            where[y] = c.index
    return {where[k] for k in x.terms}
