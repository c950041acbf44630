"""
Sparse multivariate polynomials with exact integer coefficients.

Every structure constant of the Hecke algebras handled by this package lives
in a ring ``Z[xi]`` where the ``xi`` are the normalized parameters of the
order relation ``T^m = xi_{m-1} T^{m-1} + ... + xi_1 T + 1``.  The constant
``xi_0`` is the literal integer 1 and is never stored as a parameter.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name, with no
zero exponents.  A :class:`Poly` maps monomials to non-zero Python ints, so
overflow cannot happen.

>>> x1, x2 = Poly.var("xi1"), Poly.var("xi2")
>>> print((1 + x1) * (1 - x1))
-xi1^2 + 1
>>> print(x2 * (x1 + x2**2))
xi2^3 + xi1*xi2
>>> Poly.parse("xi_s*xi_t3*(1+xi_s^2)") == Poly.parse("xi_s^3*xi_t3 + xi_s*xi_t3")
True
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Union

__all__ = [
    "Monomial",
    "ParamSpec",
    "ParamSpecMismatch",
    "Poly",
    "PolyParseError",
    "NotDivisible",
    "poly_add",
    "poly_mul",
    "specialize_rho",
    "index_sum_residue",
]

Monomial = tuple  # tuple[tuple[str, int], ...], sorted by name

ONE_MONO: Monomial = ()


class ParamSpecMismatch(ValueError):
    """Raised when polynomials over different parameter rings are combined."""


class NotDivisible(ArithmeticError):
    """Raised by :meth:`Poly.divexact` when the quotient is not a polynomial."""


class PolyParseError(ValueError):
    pass


@dataclass(frozen=True)
class ParamSpec:
    """
    The parameter set of one Hecke algebra.

    ``params`` holds ``(name, class_id, index)`` triples, one per stored
    parameter ``xi_{class,index}`` with ``1 <= index < order``; ``orders``
    maps each generator-conjugacy-class id to its order ``m``.
    """

    params: tuple
    orders: tuple  # ((class_id, m), ...)
    _by_key: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        names = [p[0] for p in self.params]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate parameter names in {names}")
        orders = dict(self.orders)
        for name, cls, i in self.params:
            if cls not in orders:
                raise ValueError(f"parameter {name} refers to unknown class {cls!r}")
            if not 1 <= i < orders[cls]:
                raise ValueError(f"parameter {name}: index {i} out of range for order {orders[cls]}")
        for name, cls, i in self.params:
            self._by_key[(cls, i)] = name

    @property
    def names(self) -> tuple:
        return tuple(p[0] for p in self.params)

    def order(self, cls) -> int:
        return dict(self.orders)[cls]

    def name(self, cls, i: int) -> str:
        return self._by_key[(cls, i)]

    def xi(self, cls, i: int) -> "Poly":
        """The parameter ``xi_{cls,i}``; ``xi_{cls,0}`` is the constant 1."""
        m = self.order(cls)
        if not 0 <= i < m:
            raise ValueError(f"xi index {i} out of range for order {m}")
        if i == 0:
            return Poly.const(1, self)
        return Poly.var(self.name(cls, i), self)

    def class_of(self, name: str):
        for n, cls, i in self.params:
            if n == name:
                return cls, i
        raise KeyError(name)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        na, ea = a[i]
        nb, eb = b[j]
        if na == nb:
            out.append((na, ea + eb))
            i += 1
            j += 1
        elif na < nb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Monomial):
    """Sort key for graded lexicographic order (ascending)."""
    # Within one degree, xi1^2 > xi1*xi2 > xi2^2: compare exponent of the
    # alphabetically first variable, then the next, and so on.
    return (_mono_degree(m), _LexKey(m))


class _LexKey:
    __slots__ = ("m",)

    def __init__(self, m: Monomial):
        self.m = m

    def _cmp(self, other: "_LexKey") -> int:
        a, b = self.m, other.m
        i = 0
        while i < len(a) and i < len(b):
            (na, ea), (nb, eb) = a[i], b[i]
            if na != nb:
                # the monomial containing the earlier name is larger
                return 1 if na < nb else -1
            if ea != eb:
                return 1 if ea > eb else -1
            i += 1
        if len(a) == len(b):
            return 0
        return 1 if len(a) > len(b) else -1

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __eq__(self, other):
        return self._cmp(other) == 0


def _mono_divides(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """Return ``b / a`` if ``a`` divides ``b``, else None."""
    db = dict(b)
    for n, e in a:
        if db.get(n, 0) < e:
            return None
        db[n] -= e
    return tuple(sorted((n, e) for n, e in db.items() if e))


def _mono_str(m: Monomial) -> str:
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)


def _merge_spec(a: Optional[ParamSpec], b: Optional[ParamSpec]) -> Optional[ParamSpec]:
    if a is None:
        return b
    if b is None or a is b:
        return a
    if a != b:
        raise ParamSpecMismatch(f"{a.names} vs {b.names}")
    return a


class Poly:
    """
    Immutable sparse polynomial in ``Z[xi]``.

    ``spec`` is the :class:`ParamSpec` the polynomial belongs to, or None for
    polynomials built without one (those combine with anything).
    """

    __slots__ = ("_terms", "spec", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable, None] = None, spec: Optional[ParamSpec] = None):
        d: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, c in items:
                mono = tuple(sorted((n, e) for n, e in (mono.items() if isinstance(mono, Mapping) else mono) if e))
                if any(e < 0 for _, e in mono):
                    raise ValueError("negative exponent")
                c = int(c)
                if c:
                    d[mono] = d.get(mono, 0) + c
                    if not d[mono]:
                        del d[mono]
        self._terms = d
        self.spec = spec
        self._hash = None

    @classmethod
    def _raw(cls, d: dict, spec: Optional[ParamSpec]) -> "Poly":
        p = cls.__new__(cls)
        p._terms = d
        p.spec = spec
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int, spec: Optional[ParamSpec] = None) -> "Poly":
        return cls._raw({ONE_MONO: int(c)} if c else {}, spec)

    @classmethod
    def var(cls, name: str, spec: Optional[ParamSpec] = None) -> "Poly":
        if spec is not None and name not in spec.names:
            raise ValueError(f"unknown parameter {name!r}")
        return cls._raw({((name, 1),): 1}, spec)

    @classmethod
    def coerce(cls, x, spec: Optional[ParamSpec] = None) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, int):
            return cls.const(x, spec)
        raise TypeError(f"cannot coerce {type(x).__name__} to Poly")

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> Mapping:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONO in self._terms)

    def is_unit(self) -> bool:
        """True for the constants 1 and -1, the units of ``Z[xi]``."""
        return len(self._terms) == 1 and self._terms.get(ONE_MONO) in (1, -1)

    def constant_term(self) -> int:
        return self._terms.get(ONE_MONO, 0)

    def degree(self) -> int:
        return max((_mono_degree(m) for m in self._terms), default=-1)

    def variables(self) -> set:
        return {n for m in self._terms for n, _ in m}

    def sorted_terms(self) -> list:
        """Terms in canonical order: descending graded lexicographic."""
        return sorted(self._terms.items(), key=lambda mc: _mono_key(mc[0]), reverse=True)

    def leading(self):
        return max(self._terms.items(), key=lambda mc: _mono_key(mc[0]))

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = math.gcd(g, c)
        return g

    # -- arithmetic -----------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()}, self.spec)

    def __add__(self, other) -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        spec = _merge_spec(self.spec, other.spec)
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        d = dict(big)
        for m, c in small.items():
            v = d.get(m, 0) + c
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Poly._raw(d, spec)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            if not other:
                return Poly._raw({}, self.spec)
            return Poly._raw({m: c * other for m, c in self._terms.items()}, self.spec)
        if not isinstance(other, Poly):
            return NotImplemented
        spec = _merge_spec(self.spec, other.spec)
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly._raw({}, spec)
        if len(b) == 1 and ONE_MONO in b:
            c = b[ONE_MONO]
            return Poly._raw({m: v * c for m, v in a.items()}, spec)
        d: dict = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = _mono_mul(ma, mb)
                v = d.get(m, 0) + ca * cb
                if v:
                    d[m] = v
                else:
                    del d[m]
        return Poly._raw(d, spec)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        out = Poly.const(1, self.spec)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divexact(self, other: "Poly") -> "Poly":
        """
        Exact quotient ``self / other``.

        Multivariate division by leading terms; raises :class:`NotDivisible`
        if a non-zero remainder would be left.
        """
        other = Poly.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        spec = _merge_spec(self.spec, other.spec)
        if other.is_constant():
            c = other.constant_term()
            d = {}
            for m, v in self._terms.items():
                q, r = divmod(v, c)
                if r:
                    raise NotDivisible(f"{self} / {c}")
                d[m] = q
            return Poly._raw(d, spec)
        lm, lc = other.leading()
        rem = dict(self._terms)
        quot: dict = {}
        while rem:
            m = max(rem, key=_mono_key)
            c = rem[m]
            qm = _mono_divides(lm, m)
            if qm is None or c % lc:
                raise NotDivisible(f"({self}) / ({other})")
            qc = c // lc
            quot[qm] = quot.get(qm, 0) + qc
            for om, oc in other._terms.items():
                pm = _mono_mul(qm, om)
                v = rem.get(pm, 0) - qc * oc
                if v:
                    rem[pm] = v
                else:
                    rem.pop(pm, None)
        return Poly._raw({m: c for m, c in quot.items() if c}, spec)

    def with_spec(self, spec: Optional[ParamSpec]) -> "Poly":
        if spec is not None:
            unknown = self.variables() - set(spec.names)
            if unknown:
                raise ParamSpecMismatch(f"variables {sorted(unknown)} not in {spec.names}")
        return Poly._raw(self._terms, spec)

    def subs(self, values: Mapping[str, int]) -> "Poly":
        """Substitute integers for some variables."""
        out: dict = {}
        for m, c in self._terms.items():
            rest = []
            for n, e in m:
                if n in values:
                    c *= values[n] ** e
                else:
                    rest.append((n, e))
            if c:
                k = tuple(rest)
                v = out.get(k, 0) + c
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return Poly._raw(out, self.spec)

    def evaluate(self, values: Mapping[str, int], modulus: Optional[int] = None) -> int:
        total = 0
        for m, c in self._terms.items():
            v = c
            for n, e in m:
                v *= pow(values[n], e, modulus) if modulus else values[n] ** e
            total += v
        return total % modulus if modulus else total

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text and JSON -------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m:
                body = str(a)
            elif a == 1:
                body = _mono_str(m)
            else:
                body = f"{a}*{_mono_str(m)}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"mono": {n: e for n, e in m}, "c": str(c)}
                for m, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping, spec: Optional[ParamSpec] = None) -> "Poly":
        p = cls(((t["mono"], int(t["c"])) for t in data["terms"]), spec)
        if spec is not None:
            p.with_spec(spec)
        return p

    def to_tex(self) -> str:
        if not self._terms:
            return "0"
        s = str(self)
        s = re.sub(r"xi_?([A-Za-z]*)(\d*)", lambda mt: _tex_name(mt.group(1), mt.group(2)), s)
        return s.replace("*", "")

    @classmethod
    def parse(cls, text: str, spec: Optional[ParamSpec] = None) -> "Poly":
        p = _Parser(text).parse()
        if spec is not None:
            p = p.with_spec(spec)
        return p


def _tex_name(letters: str, digits: str) -> str:
    sub = ",".join(x for x in (letters, digits) if x)
    return rf"\xi_{{{sub}}}" if sub else r"\xi"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class _Parser:
    """Recursive-descent parser for ``+ - * ^ ( )`` over integers and names."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        for num, name, op in _TOKEN.findall(text):
            if num:
                self.tokens.append(("num", int(num)))
            elif name:
                self.tokens.append(("name", name))
            elif op.strip():
                self.tokens.append(("op", op))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise PolyParseError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> Poly:
        if not self.tokens:
            raise PolyParseError("empty polynomial")
        p = self.expr()
        if self.pos != len(self.tokens):
            raise PolyParseError(f"trailing input in {self.text!r}")
        return p

    def expr(self) -> Poly:
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        p = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Poly:
        p = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.power()
            elif kind == "name" or (kind == "op" and val == "("):
                p = p * self.power()  # juxtaposition
            else:
                return p

    def power(self) -> Poly:
        p = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise PolyParseError(f"bad exponent in {self.text!r}")
            p = p ** e
        return p

    def atom(self) -> Poly:
        kind, val = self.take()
        if kind == "num":
            return Poly.const(val)
        if kind == "name":
            return Poly.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "op" and val == "-":
            return -self.power()
        raise PolyParseError(f"unexpected token {val!r} in {self.text!r}")


# -- functional surface ------------------------------------------------

def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def specialize_rho(p: Poly) -> int:
    """Image under the specialization sending every ``xi`` to 0."""
    return p.constant_term()


def index_sum_residue(p: Poly, m: int, spec: Optional[ParamSpec] = None) -> Optional[int]:
    """
    Common residue mod ``m`` of the index sums of the monomials of ``p``.

    The index sum of ``prod xi_i^{e_i}`` is ``sum i*e_i``.  Variable indices
    are read from ``spec`` when given, otherwise from trailing digits of the
    names (``xi2`` has index 2).  Returns None if the monomials disagree;
    the zero polynomial has no residue.
    """
    residues = set()
    for mono in p.terms:
        total = 0
        for name, e in mono:
            total += _index_of(name, spec) * e
        residues.add(total % m)
    if len(residues) != 1:
        return None
    return residues.pop()


def _index_of(name: str, spec: Optional[ParamSpec]) -> int:
    if spec is not None:
        return spec.class_of(name)[1]
    mt = re.search(r"(\d+)$", name)
    if not mt:
        raise ValueError(f"cannot read an index from parameter name {name!r}")
    return int(mt.group(1))


def iter_monomials(p: Poly) -> Iterator[Monomial]:
    return iter(p.terms)
