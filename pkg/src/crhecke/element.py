"""Hecke algebra elements as sparse vectors over ``Z[xi]``."""

from __future__ import annotations

from typing import TYPE_CHECKING, Dict, Iterable, Mapping, Optional

from .poly import Poly

if TYPE_CHECKING:
    from .basis import ReducedBasis


class BasisMismatch(ValueError):
    pass


class HeckeElement:
    """
    ``sum r_w T_w`` over a fixed reduced basis.

    Terms are keyed by group element id (each element has exactly one basis
    word); zero coefficients are never stored.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: "ReducedBasis", terms: Optional[Mapping[int, object]] = None):
        self.basis = basis
        d: Dict[int, Poly] = {}
        if terms:
            spec = basis.params
            for k, c in terms.items():
                if not 0 <= k < basis.group.order:
                    raise ValueError(f"invalid basis id {k}")
                c = Poly.coerce(c, spec)
                if c:
                    d[k] = c
        self._terms = d

    @classmethod
    def _raw(cls, basis, d: Dict[int, Poly]) -> "HeckeElement":
        e = cls.__new__(cls)
        e.basis = basis
        e._terms = d
        return e

    @classmethod
    def zero(cls, basis) -> "HeckeElement":
        return cls._raw(basis, {})

    @classmethod
    def basis_element(cls, basis, x: int) -> "HeckeElement":
        return cls._raw(basis, {x: Poly.const(1, basis.params)})

    @property
    def terms(self) -> Mapping[int, Poly]:
        return self._terms

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, x: int) -> Poly:
        return self._terms.get(x, Poly.const(0, self.basis.params))

    def _check(self, other: "HeckeElement"):
        if other.basis is not self.basis:
            if other.basis.name != self.basis.name:
                raise BasisMismatch(f"{self.basis.name} vs {other.basis.name}")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check(other)
        d = dict(self._terms)
        for k, c in other._terms.items():
            v = d[k] + c if k in d else c
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return HeckeElement._raw(self.basis, d)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement._raw(self.basis, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, p) -> "HeckeElement":
        p = Poly.coerce(p, self.basis.params)
        if not p:
            return HeckeElement.zero(self.basis)
        d = {}
        for k, c in self._terms.items():
            v = c * p
            if v:
                d[k] = v
        return HeckeElement._raw(self.basis, d)

    def __rmul__(self, other):
        if isinstance(other, (int, Poly)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Poly)):
            return self.scale(other)
        if isinstance(other, HeckeElement):
            from .hecke import h_mul

            return h_mul(self, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.basis.name == other.basis.name and self._terms == other._terms

    def __hash__(self):
        return hash((self.basis.name, frozenset(self._terms.items())))

    def specialize(self) -> Dict[int, int]:
        """Image in the group algebra under ``xi -> 0``."""
        out = {}
        for k, c in self._terms.items():
            v = c.constant_term()
            if v:
                out[k] = v
        return out

    def support(self) -> set:
        return set(self._terms)

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kc: self.basis.sort_key(kc[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.sorted_items():
            w = self.basis.word_str(k)
            if c == 1:
                parts.append(f"T[{w}]")
            elif c == -1:
                parts.append(f"-T[{w}]")
            elif len(c.terms) == 1:
                parts.append(f"{c}*T[{w}]")
            else:
                parts.append(f"({c})*T[{w}]")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"HeckeElement({self.basis.name}: {self})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis.name,
            "terms": [
                {"word": self.basis.word_str(k), "coeff": c.to_json()} for k, c in self.sorted_items()
            ],
        }

    def to_tex(self) -> str:
        from .words import tex_word

        if not self._terms:
            return "0"
        parts = []
        for k, c in self.sorted_items():
            w = r"{\tilde T}_{" + tex_word(self.basis.word(k)) + "}"
            if c == 1:
                parts.append(w)
            elif c == -1:
                parts.append("-" + w)
            else:
                parts.append(f"({c.to_tex()}){w}")
        return " + ".join(parts).replace("+ -", "- ")

    @classmethod
    def from_json(cls, basis, data: Mapping) -> "HeckeElement":
        if data.get("basis", basis.name) != basis.name:
            raise BasisMismatch(f"element is over {data['basis']}, expected {basis.name}")
        terms: Dict[int, Poly] = {}
        for t in data["terms"]:
            x = basis.id_of(t["word"])
            c = t["coeff"]
            p = Poly.from_json(c, basis.params) if isinstance(c, Mapping) else Poly.parse(str(c), basis.params)
            terms[x] = terms.get(x, Poly.const(0)) + p
        return cls(basis, terms)

    @classmethod
    def from_terms(cls, basis, items: Iterable) -> "HeckeElement":
        """Build from ``(word text, coefficient text)`` pairs, words given in the basis."""
        e = cls.zero(basis)
        for word, coeff in items:
            x = basis.id_of(word)
            p = Poly.parse(coeff, basis.params) if isinstance(coeff, str) else Poly.coerce(coeff, basis.params)
            if p:
                e = e + cls._raw(basis, {x: p})
        return e
