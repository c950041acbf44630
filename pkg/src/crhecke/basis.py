"""
Reduced bases and straightening.

A reduced basis fixes one reduced word per group element.  Straightening
rewrites an arbitrary positive word in the generators as a ``Z[xi]``-linear
combination of basis words, using the order relation
``T_x^m = 1 + xi_1 T_x + ... + xi_{m-1} T_x^{m-1}``, the braid relation,
and family-specific correction identities.

Two engines produce the generator-multiplication tables:

* G4 (schemes ``g4-sts`` and ``g4-tst``): a lift engine.  A square block
  ``T_x^2`` equals ``T_x^{-1} + xi_2 T_x + xi_1``, so a factor ``p`` of a word
  may be swapped for any word ``q`` of the same length, the same group
  element and the same signed braid obtained by inverting square blocks
  (decided by the Burau matrix), at the cost of correction terms that are
  strictly shorter.  A breadth-first search over such swaps reaches either
  the basis word or a word containing a cube, after which the order relation
  shortens it.  Recursion is on word length, so it terminates.
* G(r,1,2) (scheme ``bm``): closed-form rules on the normal forms
  ``t^a``, ``t^a s t^b`` and ``t^a s t^b s`` with ``b >= 1``, taken from the
  identity ``s t^a s t^b = t^b s t^a s + xi_s sum_{i=1}^{b} (T_t^{a+b-i} s
  t^i - t^i s T_t^{a+b-i})``.

Every table is validated after construction: the actions satisfy the order
and braid relations, left and right actions commute, folding each basis
word from the identity returns that basis element, and specializing
``xi -> 0`` gives back the group multiplication table.
"""

from __future__ import annotations

import json
import os
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from importlib import resources
from itertools import product
from typing import Dict, List, Optional, Sequence

from .braid import braid_class, lift_key
from .element import HeckeElement
from .groups import GroupData, GroupSpec, get_group
from .poly import ParamSpec, Poly
from .words import Word, format_word, parse_word, runs

__all__ = [
    "SCHEMES",
    "ReducedBasis",
    "StraighteningTable",
    "StraightenError",
    "StepBudgetExceeded",
    "TableValidationError",
    "build_basis",
    "get_basis",
    "build_table",
    "straighten",
    "braid_difference",
    "power_coefficients",
    "param_spec_for",
    "CACHE_ENV",
]

SCHEMES = ("g4-sts", "g4-tst", "bm")
STEP_BUDGET = 10 ** 6
CACHE_ENV = "CRHECKE_CACHE_DIR"

Table = Dict[int, Poly]


class StraightenError(RuntimeError):
    pass


class StepBudgetExceeded(StraightenError):
    pass


class TableValidationError(RuntimeError):
    pass


def load_data(name: str):
    with resources.files("crhecke.data").joinpath(name).open("r", encoding="utf-8") as fh:
        return json.load(fh)


def param_spec_for(gd: GroupData) -> tuple:
    """Parameter ring of the Hecke algebra, and the class of each generator."""
    if gd.spec.kind == "G4":
        spec = ParamSpec(params=(("xi1", "s", 1), ("xi2", "s", 2)), orders=(("s", 3),))
        return spec, {"s": "s", "t": "s"}
    params = []
    orders = []
    gen_class = {}
    for names in gd.generator_classes():
        cls = "t" if "t" in names else "s"
        m = gd.gen_orders[names[0]]
        orders.append((cls, m))
        for name in names:
            gen_class[name] = cls
        if cls == "s":
            params.append(("xi_s", "s", 1))
        else:
            params.extend((f"xi_t{i}", "t", i) for i in range(1, m))
    return ParamSpec(params=tuple(params), orders=tuple(orders)), gen_class


@dataclass(eq=False)
class ReducedBasis:
    group: GroupData
    scheme: str
    name: str
    words: List[Word]  # element id -> chosen reduced word
    listing: List[int]  # element ids in the conventional display order
    params: ParamSpec
    gen_class: Dict[str, str]
    _lookup: Dict[Word, int] = field(repr=False)

    def word(self, x: int) -> Word:
        return self.words[x]

    def word_str(self, x: int) -> str:
        return format_word(self.words[x])

    def id_of(self, word) -> int:
        """Element id of a basis word, given as text or tuple."""
        w = parse_word(word, self.group.gen_names) if isinstance(word, str) else tuple(word)
        try:
            return self._lookup[w]
        except KeyError:
            raise KeyError(f"{format_word(w)} is not a word of basis {self.name}") from None

    def sort_key(self, x: int):
        return (len(self.words[x]), self.word_str(x))

    def sorted_ids(self) -> List[int]:
        return sorted(range(self.group.order), key=self.sort_key)

    def order(self, gen: str) -> int:
        return self.group.gen_orders[gen]

    def xi(self, gen: str, i: int) -> Poly:
        return self.params.xi(self.gen_class[gen], i)

    def T(self, word) -> HeckeElement:
        """The basis element ``T_w`` for a basis word ``w``."""
        return HeckeElement.basis_element(self, self.id_of(word))

    def element(self, items) -> HeckeElement:
        return HeckeElement.from_terms(self, items)

    @cached_property
    def table(self) -> "StraighteningTable":
        return build_table(self)

    def straighten(self, word) -> HeckeElement:
        return straighten(self, word)


def _basis_from_words(gd: GroupData, scheme: str, name: str, words: Sequence[Word]) -> ReducedBasis:
    per_elem: List[Optional[Word]] = [None] * gd.order
    listing = []
    for w in words:
        x = gd.eval_word(w)
        if per_elem[x] is not None:
            raise ValueError(f"{name}: words {format_word(per_elem[x])} and {format_word(w)} give the same element")
        if len(w) != gd.length(x):
            raise ValueError(f"{name}: word {format_word(w)} is not reduced")
        per_elem[x] = tuple(w)
        listing.append(x)
    if any(w is None for w in per_elem):
        raise ValueError(f"{name}: {per_elem.count(None)} elements have no basis word")
    params, gen_class = param_spec_for(gd)
    return ReducedBasis(
        group=gd,
        scheme=scheme,
        name=name,
        words=per_elem,
        listing=listing,
        params=params,
        gen_class=gen_class,
        _lookup={w: x for x, w in enumerate(per_elem)},
    )


def bm_words(r: int) -> List[Word]:
    """Normal forms ``t^a``, ``t^a s t^b``, ``t^a s t^b s`` (``b >= 1``) for G(r,1,2)."""
    t = lambda k: ("t",) * k  # noqa: E731
    out = [t(a) for a in range(r)]
    out += [t(a) + ("s",) + t(b) for b in range(r) for a in range(r)]
    out += [t(a) + ("s",) + t(b) + ("s",) for b in range(1, r) for a in range(r)]
    return out


def build_basis(gd: GroupData, scheme: str) -> ReducedBasis:
    scheme = scheme.lower()
    if scheme in ("g4-sts", "g4-tst"):
        if gd.spec.kind != "G4":
            raise ValueError(f"scheme {scheme} needs the group G4, not {gd.spec}")
        words = [parse_word(w, gd.gen_names) for w in load_data("bases.json")[scheme]]
        return _basis_from_words(gd, scheme, scheme, words)
    if scheme in ("bm", "bm-r12"):
        if gd.spec.kind != "Gr1n" or gd.spec.n != 2 or gd.spec.r < 2:
            raise ValueError(f"scheme bm needs G(r,1,2) with r >= 2, not {gd.spec}")
        return _basis_from_words(gd, "bm", f"g({gd.spec.r},1,2)-bm", bm_words(gd.spec.r))
    raise ValueError(f"unknown basis scheme {scheme!r}; choose from {SCHEMES}")


@lru_cache(maxsize=None)
def get_basis(spec: GroupSpec, scheme: str) -> ReducedBasis:
    """Shared, memoized basis of :func:`get_group`, so tables are built once."""
    return build_basis(get_group(spec), scheme)


def power_coefficients(m: int, e: int, xi: Sequence[Poly]) -> List[Poly]:
    """
    Coefficients ``c_0..c_{m-1}`` with ``T^e = sum c_i T^i`` under
    ``T^m = sum_i xi[i] T^i`` (``xi[0]`` is 1).
    """
    one = xi[0] * 1
    zero = one * 0
    c = [zero] * m
    if e < m:
        c[e] = one
        return c
    c = list(xi)
    for _ in range(e - m):
        top = c[m - 1]
        c = [top * xi[0]] + [c[i - 1] + top * xi[i] for i in range(1, m)]
    return c


def _acc(acc: Table, terms: Table, scale: Poly) -> None:
    for k, v in terms.items():
        nv = acc[k] + v * scale if k in acc else v * scale
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


# -- G4 lift engine ----------------------------------------------------

class LiftStraightener:
    """
    Straightening of arbitrary positive words in a G4 basis.

    ``rng`` shuffles the order in which factor swaps are explored; any order
    gives the same answer, which the confluence tests exploit.
    """

    def __init__(self, basis: ReducedBasis, rng: Optional[random.Random] = None, budget: int = STEP_BUDGET):
        if basis.group.spec.kind != "G4":
            raise ValueError("the lift engine handles G4 only")
        self.basis = basis
        self.gd = basis.group
        self.letters = self.gd.gen_names
        self.rng = rng
        self.budget = budget
        self.steps = 0
        self.memo: Dict[Word, Table] = {}
        self._classes: Dict[int, Dict[Word, tuple]] = {}
        self._members: Dict[tuple, List[Word]] = {}
        self.one = Poly.const(1, basis.params)
        self.xi = [basis.xi("s", i) for i in range(3)]

    def _tick(self, n: int = 1):
        self.steps += n
        if self.steps > self.budget:
            raise StepBudgetExceeded(f"straightening exceeded {self.budget} steps")

    def _factor_key(self, p: Word) -> Optional[tuple]:
        k = len(p)
        if k not in self._classes:
            keys = {}
            for w in product(self.letters, repeat=k):
                if any(e >= 3 for _, e in runs(w)):
                    continue
                key = (k, self.gd.eval_word(w), lift_key(w, self.letters))
                keys[w] = key
                self._members.setdefault(key, []).append(w)
            self._classes[k] = keys
        return self._classes[k].get(p)

    def _short(self, u: Word) -> Table:
        """``P(u) - u`` where ``P`` expands square blocks as ``x^2 - xi_2 x - xi_1``."""
        factors = []
        for x, e in runs(u):
            if e == 1:
                factors.append([((x,), self.one)])
            else:
                factors.append([((x, x), self.one), ((x,), -self.xi[2]), ((), -self.xi[1])])
        out: Dict[Word, Poly] = {}
        for combo in product(*factors):
            w = sum((c[0] for c in combo), ())
            if w == u:
                continue
            c = self.one
            for _, cc in combo:
                c = c * cc
            out[w] = out[w] + c if w in out else c
        return out

    def word(self, u: Word) -> Table:
        u = tuple(u)
        hit = self.memo.get(u)
        if hit is not None:
            return hit
        self._tick()
        if not u:
            res = {0: self.one}
        else:
            res = self._cube(u)
            if res is None:
                res = self._search(u)
        self.memo[u] = res
        return res

    def _cube(self, u: Word) -> Optional[Table]:
        for i in range(len(u) - 2):
            if u[i] == u[i + 1] == u[i + 2]:
                x, pre, post = u[i], u[:i], u[i + 3:]
                res: Table = {}
                for k in range(3):
                    _acc(res, self.word(pre + (x,) * k + post), self.xi[k])
                return res
        return None

    def _search(self, u: Word) -> Table:
        x = self.gd.eval_word(u)
        target = self.basis.words[x]
        # T_u = T_v + corr[v] for every visited v
        corr: Dict[Word, Dict[Word, Poly]] = {u: {}}
        queue = deque([u])
        found = None
        while queue:
            v = queue.popleft()
            self._tick()
            if v == target:
                found = ("basis", v)
                break
            if any(v[i] == v[i + 1] == v[i + 2] for i in range(len(v) - 2)):
                found = ("cube", v)
                break
            moves = []
            for i in range(len(v)):
                for j in range(i + 2, len(v) + 1):
                    p = v[i:j]
                    key = self._factor_key(p)
                    if key is None:
                        continue
                    for q in self._members[key]:
                        if q != p:
                            moves.append((i, j, p, q))
            if self.rng is not None:
                self.rng.shuffle(moves)
            for i, j, p, q in moves:
                nv = v[:i] + q + v[j:]
                if nv in corr:
                    continue
                c = dict(corr[v])
                for w, a in self._short(q).items():
                    key = v[:i] + w + v[j:]
                    c[key] = c[key] + a if key in c else a
                for w, a in self._short(p).items():
                    key = v[:i] + w + v[j:]
                    c[key] = c[key] - a if key in c else -a
                corr[nv] = c
                queue.append(nv)
        if found is None:
            raise StraightenError(f"no rewrite path from {format_word(u)} in basis {self.basis.name}")
        kind, v = found
        res: Table = {x: self.one} if kind == "basis" else dict(self.word(v))
        for w, a in corr[v].items():
            if a:
                _acc(res, self.word(w), a)
        return res


# -- tables ------------------------------------------------------------

@dataclass(eq=False)
class StraighteningTable:
    """``right[x][g]`` expands ``T_x T_g`` and ``left[x][g]`` expands ``T_g T_x``."""

    basis: ReducedBasis
    right: List[Dict[str, Table]]
    left: List[Dict[str, Table]]

    def act_right(self, vec: Table, g: str) -> Table:
        out: Table = {}
        for k, c in vec.items():
            _acc(out, self.right[k][g], c)
        return out

    def act_left(self, vec: Table, g: str) -> Table:
        out: Table = {}
        for k, c in vec.items():
            _acc(out, self.left[k][g], c)
        return out

    def fold_right(self, word: Word, start: Optional[Table] = None) -> Table:
        vec = {0: Poly.const(1, self.basis.params)} if start is None else start
        for g in word:
            vec = self.act_right(vec, g)
        return vec

    def fold_left(self, word: Word, start: Optional[Table] = None) -> Table:
        vec = {0: Poly.const(1, self.basis.params)} if start is None else start
        for g in reversed(word):
            vec = self.act_left(vec, g)
        return vec

    def to_json(self) -> dict:
        b = self.basis

        def enc(t: Table):
            return [{"word": b.word_str(k), "coeff": c.to_json()} for k, c in sorted(t.items(), key=lambda kc: b.sort_key(kc[0]))]

        return {
            "basis": b.name,
            "generators": list(b.group.gen_names),
            "entries": [
                {
                    "word": b.word_str(x),
                    "right": {g: enc(self.right[x][g]) for g in b.group.gen_names},
                    "left": {g: enc(self.left[x][g]) for g in b.group.gen_names},
                }
                for x in b.sorted_ids()
            ],
        }

    @classmethod
    def from_json(cls, basis: ReducedBasis, data: dict) -> "StraighteningTable":
        if data.get("basis") != basis.name:
            raise ValueError(f"cached table is for {data.get('basis')}, expected {basis.name}")
        right: List[dict] = [dict() for _ in range(basis.group.order)]
        left: List[dict] = [dict() for _ in range(basis.group.order)]

        def dec(items):
            return {basis.id_of(t["word"]): Poly.from_json(t["coeff"], basis.params) for t in items}

        for entry in data["entries"]:
            x = basis.id_of(entry["word"])
            right[x] = {g: dec(v) for g, v in entry["right"].items()}
            left[x] = {g: dec(v) for g, v in entry["left"].items()}
        return cls(basis, right, left)


def _g4_tables(basis: ReducedBasis):
    eng = LiftStraightener(basis)
    gens = basis.group.gen_names
    right, left = [], []
    # increasing length keeps every rewrite on already-known shorter words
    for x in basis.sorted_ids():
        w = basis.words[x]
        right.append((x, {g: eng.word(w + (g,)) for g in gens}))
        left.append((x, {g: eng.word((g,) + w) for g in gens}))
    r = [None] * basis.group.order
    l = [None] * basis.group.order
    for x, v in right:
        r[x] = v
    for x, v in left:
        l[x] = v
    return r, l


def _bm_tables(basis: ReducedBasis):
    gd = basis.group
    r = gd.spec.r
    one = Poly.const(1, basis.params)
    xs = basis.xi("s", 1)
    xt = [basis.xi("t", i) for i in range(r)]
    pw = {}

    def c(e: int) -> List[Poly]:
        if e not in pw:
            pw[e] = power_coefficients(r, e, xt)
        return pw[e]

    ids = {}
    for a in range(r):
        ids[(0, a, 0)] = basis.id_of(("t",) * a)
        for b in range(r):
            ids[(1, a, b)] = basis.id_of(("t",) * a + ("s",) + ("t",) * b)
            if b:
                ids[(2, a, b)] = basis.id_of(("t",) * a + ("s",) + ("t",) * b + ("s",))
    coords = {v: k for k, v in ids.items()}

    def tp(e, make):
        """``sum_i c_i(e) * make(i)`` as a table."""
        out: Table = {}
        for i, ci in enumerate(c(e)):
            if ci:
                _acc(out, {ids[make(i)]: one}, ci)
        return out

    def add(*parts):
        out: Table = {}
        for scale, t in parts:
            _acc(out, t, scale)
        return out

    right = [None] * gd.order
    left = [None] * gd.order
    for x, (kind, a, b) in coords.items():
        if kind == 0:
            rt = tp(a + 1, lambda i: (0, i, 0))
            rs = {ids[(1, a, 0)]: one}
        elif kind == 1:
            rt = tp(b + 1, lambda i: (1, a, i))
            rs = {ids[(2, a, b)]: one} if b else add((xs, {ids[(1, a, 0)]: one}), (one, {ids[(0, a, 0)]: one}))
        else:
            rt = add(
                (one, tp(a + 1, lambda i: (2, i, b))),
                (xs, tp(a + b, lambda i: (1, i, 1))),
                (-xs, tp(a + 1, lambda i: (1, i, b))),
            )
            rs = add((xs, {x: one}), (one, {ids[(1, a, b)]: one}))
        right[x] = {"t": rt, "s": rs}

    def right_s(vec: Table) -> Table:
        out: Table = {}
        for k, v in vec.items():
            _acc(out, right[k]["s"], v)
        return out

    def left_s_kind1(a, b) -> Table:
        if a == 0:
            return add((xs, {ids[(1, 0, b)]: one}), (one, {ids[(0, b, 0)]: one}))
        out = {ids[(2, b, a)]: one}
        for i in range(1, b + 1):
            e = a + b - i
            out = add((one, out), (xs, tp(e, lambda j: (1, j, i))), (-xs, tp(e, lambda j: (1, i, j))))
        return out

    for x, (kind, a, b) in coords.items():
        if kind == 0:
            lt = tp(a + 1, lambda i: (0, i, 0))
            ls = {ids[(1, 0, a)]: one}
        elif kind == 1:
            lt = tp(a + 1, lambda i: (1, i, b))
            ls = left_s_kind1(a, b)
        else:
            lt = tp(a + 1, lambda i: (2, i, b))
            ls = right_s(left_s_kind1(a, b))
        left[x] = {"t": lt, "s": ls}
    return right, left


def _power_relation(tab: StraighteningTable, vec: Table, g: str, act) -> bool:
    b = tab.basis
    m = b.order(g)
    lhs = vec
    powers = [vec]
    for _ in range(m):
        lhs = act(lhs, g)
        powers.append(lhs)
    rhs: Table = {}
    for i in range(m):
        _acc(rhs, powers[i], b.xi(g, i))
    return lhs == rhs


def _presentation_braids(gd: GroupData) -> list:
    if gd.spec.kind == "G4":
        return [(("s", "t", "s"), ("t", "s", "t"))]
    return [(("s", "t", "s", "t"), ("t", "s", "t", "s"))]


def validate_table(tab: StraighteningTable) -> None:
    """Raise :class:`TableValidationError` unless the table defines the algebra."""
    b = tab.basis
    gd = b.group
    one = Poly.const(1, b.params)
    braids = _presentation_braids(gd)
    for x in range(gd.order):
        for g in gd.gen_names:
            for side, entry, prod in (("right", tab.right[x][g], gd.mul(x, gd.gen(g))),
                                      ("left", tab.left[x][g], gd.mul(gd.gen(g), x))):
                spec = {k: c.constant_term() for k, c in entry.items() if c.constant_term()}
                if spec != {prod: 1}:
                    raise TableValidationError(f"{side} {b.word_str(x)}*{g}: specializes to {spec}")
        e = {x: one}
        for g in gd.gen_names:
            if not _power_relation(tab, e, g, tab.act_right) or not _power_relation(tab, e, g, tab.act_left):
                raise TableValidationError(f"order relation for {g} fails on {b.word_str(x)}")
            for h in gd.gen_names:
                if tab.act_right(tab.act_left(e, g), h) != tab.act_left(tab.act_right(e, h), g):
                    raise TableValidationError(f"left {g} and right {h} actions do not commute on {b.word_str(x)}")
        for lhs, rhs in braids:
            if tab.fold_right(lhs, e) != tab.fold_right(rhs, e) or tab.fold_left(lhs, e) != tab.fold_left(rhs, e):
                raise TableValidationError(f"braid relation fails on {b.word_str(x)}")
        if tab.fold_right(b.words[x]) != e or tab.fold_left(b.words[x]) != e:
            raise TableValidationError(f"basis word {b.word_str(x)} does not fold to itself")


def build_table(basis: ReducedBasis, validate: bool = True, use_cache: bool = True) -> StraighteningTable:
    """
    Generator-multiplication table of a basis.

    If the environment variable ``CRHECKE_CACHE_DIR`` names a directory, the
    table is read from (or written to) ``<dir>/<basis name>.json``.
    """
    cache_dir = os.environ.get(CACHE_ENV) if use_cache else None
    path = os.path.join(cache_dir, f"{basis.name}.json") if cache_dir else None
    if path and os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            tab = StraighteningTable.from_json(basis, json.load(fh))
    else:
        if basis.scheme in ("g4-sts", "g4-tst"):
            right, left = _g4_tables(basis)
        else:
            right, left = _bm_tables(basis)
        tab = StraighteningTable(basis, right, left)
    if validate:
        validate_table(tab)
    if path and not os.path.exists(path):
        os.makedirs(cache_dir, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(tab.to_json(), fh, sort_keys=True)
    return tab


def straighten(basis: ReducedBasis, word, strategy: str = "right", rng: Optional[random.Random] = None) -> HeckeElement:
    """
    Expand the product of generators along ``word`` in the basis.

    ``strategy`` is ``right`` (apply the table letter by letter from the
    left end), ``left`` (from the right end), or ``lift`` (the G4 rewrite
    engine run directly on the word, optionally with shuffled move order).
    """
    w = parse_word(word, basis.group.gen_names) if isinstance(word, str) else tuple(word)
    for letter in w:
        if letter not in basis.group.gen_ids:
            raise ValueError(f"unknown letter {letter!r}")
    if strategy == "right":
        terms = basis.table.fold_right(w)
    elif strategy == "left":
        terms = basis.table.fold_left(w)
    elif strategy == "lift":
        terms = LiftStraightener(basis, rng=rng).word(w)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return HeckeElement(basis, terms)


def braid_difference(basis: ReducedBasis, w1, w2) -> HeckeElement:
    gd = basis.group
    a = parse_word(w1, gd.gen_names) if isinstance(w1, str) else tuple(w1)
    b = parse_word(w2, gd.gen_names) if isinstance(w2, str) else tuple(w2)
    if gd.eval_word(a) != gd.eval_word(b):
        raise ValueError(f"{format_word(a)} and {format_word(b)} are different group elements")
    return straighten(basis, a) - straighten(basis, b)


def homogeneous_class(basis: ReducedBasis, word: Word) -> list:
    return braid_class(word, _presentation_braids(basis.group))
