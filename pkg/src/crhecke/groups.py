"""
Concrete models of G4 and G(r,1,n).

G4 is realized as SL(2,3), with ``s = [[1,1],[0,1]]`` and
``t = [[1,0],[2,1]]``; both have order 3 and satisfy ``sts = tst``.  Since
the presented group has order 24 and these matrices generate all 24 elements
of SL(2,3), the model is faithful.

G(r,1,n) is the wreath product of Z_r with S_n, elements being pairs
``(a, sigma)`` of a colour vector and a permutation, multiplied by
``(a, sigma)(b, tau) = (a + sigma(b), sigma tau)``.  The generators are
``t = (e_1, id)`` and ``s_i = (0, (i i+1))``; for ``n = 2`` the only ``s_i``
is called ``s``.

Both models are checked against their defining relations every time a group
is built.  Elements are numbered in breadth-first order from the identity
(id 0) along right multiplication by generators, and the length of an
element is its distance in that search.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Hashable, Optional, Sequence

from .words import Word, format_word, parse_word

__all__ = [
    "GroupSpec",
    "GroupData",
    "DCoset",
    "GroupBuildError",
    "build_group",
    "get_group",
    "parse_group_spec",
]


class GroupBuildError(RuntimeError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    kind: str  # "G4" or "Gr1n"
    r: int = 0
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("G4", "Gr1n"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.kind == "Gr1n" and (self.r < 1 or self.n < 1):
            raise ValueError(f"G({self.r},1,{self.n}) needs r >= 1 and n >= 1")

    @classmethod
    def g4(cls) -> "GroupSpec":
        return cls("G4")

    @classmethod
    def gr1n(cls, r: int, n: int) -> "GroupSpec":
        return cls("Gr1n", r, n)

    def __str__(self) -> str:
        return "G4" if self.kind == "G4" else f"G({self.r},1,{self.n})"

    @property
    def slug(self) -> str:
        return "g4" if self.kind == "G4" else f"g{self.r}1{self.n}"


def parse_group_spec(text: str) -> GroupSpec:
    t = text.strip().lower().replace(" ", "")
    if t == "g4":
        return GroupSpec.g4()
    mt = re.fullmatch(r"g\((\d+),1,(\d+)\)", t)
    if mt:
        return GroupSpec.gr1n(int(mt.group(1)), int(mt.group(2)))
    raise ValueError(f"cannot parse group spec {text!r}; expected 'g4' or 'g(r,1,n)'")


# -- concrete models ---------------------------------------------------

def _sl23_mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)


def _wreath_mul(r: int):
    def mul(x, y):
        a, sigma = x
        b, tau = y
        n = len(a)
        moved = [0] * n
        for i in range(n):
            moved[sigma[i]] = b[i]
        colours = tuple((a[i] + moved[i]) % r for i in range(n))
        perm = tuple(sigma[tau[i]] for i in range(n))
        return (colours, perm)

    return mul


@dataclass(frozen=True)
class _Model:
    identity: Hashable
    mul: Callable
    gens: tuple  # ((name, order, concrete), ...)
    relations: tuple  # pairs of words that must be equal
    expected_order: int


def _g4_model() -> _Model:
    s = (1, 1, 0, 1)
    t = (1, 0, 2, 1)
    rel = (
        (("s",) * 3, ()),
        (("t",) * 3, ()),
        (("s", "t", "s"), ("t", "s", "t")),
    )
    return _Model((1, 0, 0, 1), _sl23_mul, (("s", 3, s), ("t", 3, t)), rel, 24)


def _gr1n_names(n: int) -> list:
    if n == 1:
        return ["t"]
    if n == 2:
        return ["t", "s"]
    return ["t"] + [f"s{i}" for i in range(1, n)]


def _gr1n_model(r: int, n: int) -> _Model:
    zero = tuple([0] * n)
    ident = tuple(range(n))
    names = _gr1n_names(n)
    gens = [("t", r, (tuple([1 % r] + [0] * (n - 1)), ident))]
    for i in range(n - 1):
        perm = list(ident)
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append((names[i + 1], 2, (zero, tuple(perm))))
    rel = [(("t",) * r, ())]
    for name in names[1:]:
        rel.append(((name, name), ()))
    if n >= 2:
        s1 = names[1]
        rel.append((("t", s1, "t", s1), (s1, "t", s1, "t")))
    for j in range(2, n):
        rel.append((("t", names[j]), (names[j], "t")))
    for i in range(1, n):
        for j in range(i + 1, n):
            a, b = names[i], names[j]
            if j == i + 1:
                rel.append(((a, b, a), (b, a, b)))
            else:
                rel.append(((a, b), (b, a)))
    order = r ** n
    for k in range(2, n + 1):
        order *= k
    return _Model((zero, ident), _wreath_mul(r), tuple(gens), tuple(rel), order)


# -- enumerated group --------------------------------------------------

@dataclass(frozen=True)
class DCoset:
    """An ``<s>``-``<s>`` double coset (or ``W_J d W_J`` for singleton J)."""

    index: int
    gen: str
    rep: int
    members: frozenset
    kind: str  # "centralizing", "additive" or "neither"


@dataclass(eq=False)
class GroupData:
    spec: GroupSpec
    elements: list
    gen_names: tuple
    gen_orders: dict
    gen_ids: dict
    right: list  # right[g_index][x] = x * gen
    lengths: list
    bfs_words: list
    _index: dict = field(repr=False)
    _mul: Callable = field(repr=False)
    _mul_cache: dict = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def gen(self, name: str) -> int:
        try:
            return self.gen_ids[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}; generators are {list(self.gen_names)}") from None

    def mul(self, x: int, y: int) -> int:
        key = (x, y)
        v = self._mul_cache.get(key)
        if v is None:
            v = self._index[self._mul(self.elements[x], self.elements[y])]
            self._mul_cache[key] = v
        return v

    def mul_gen(self, x: int, name: str) -> int:
        return self.right[self.gen_names.index(name)][x]

    @cached_property
    def inverse(self) -> list:
        inv = [None] * self.order
        for x in range(self.order):
            if inv[x] is None:
                # the inverse lies in the cyclic group generated by x
                y, prev = x, 0
                while y != 0:
                    prev = y
                    y = self.mul(y, x)
                inv[x] = prev if x != 0 else 0
                inv[inv[x]] = x
        return inv

    def power(self, x: int, e: int) -> int:
        out = 0
        for _ in range(e):
            out = self.mul(out, x)
        return out

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.mul(y, x)
            k += 1
        return k

    def parse(self, text: str) -> Word:
        return parse_word(text, self.gen_names)

    def eval_word(self, w) -> int:
        if isinstance(w, str):
            w = self.parse(w)
        x = 0
        for letter in w:
            if letter not in self.gen_ids:
                raise ValueError(f"unknown letter {letter!r}")
            x = self.mul_gen(x, letter)
        return x

    def length(self, x: int) -> int:
        return self.lengths[x]

    def word_str(self, x: int) -> str:
        return format_word(self.bfs_words[x])

    def conjugate(self, x: int, g: int) -> int:
        """``g x g^{-1}``."""
        return self.mul(self.mul(g, x), self.inverse[g])

    def subgroup(self, gens: Sequence[str]) -> list:
        """Elements of the parabolic subgroup generated by the named generators."""
        seen = {0}
        order = [0]
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for name in gens:
                y = self.mul_gen(x, name)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
        return sorted(order)

    def j_conjugacy_classes(self, J: Optional[Sequence[str]] = None) -> list:
        """
        Orbits of W under conjugation by the parabolic subgroup ``W_J``.

        ``J = None`` means all generators, giving ordinary conjugacy
        classes.  Classes are sorted by their smallest element id and each
        class is a sorted list of ids.
        """
        J = tuple(self.gen_names) if J is None else tuple(J)
        sub = self.subgroup(J)
        seen = [False] * self.order
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            orbit = sorted({self.conjugate(x, g) for g in sub})
            for y in orbit:
                seen[y] = True
            classes.append(orbit)
        return classes

    def class_of(self, J: Optional[Sequence[str]] = None) -> list:
        out = [0] * self.order
        for i, cl in enumerate(self.j_conjugacy_classes(J)):
            for x in cl:
                out[x] = i
        return out

    def centralizer(self, x: int) -> frozenset:
        return frozenset(g for g in range(self.order) if self.mul(g, x) == self.mul(x, g))

    def centre(self) -> frozenset:
        out = frozenset(range(self.order))
        for name in self.gen_names:
            out &= self.centralizer(self.gen(name))
        return out

    def generator_classes(self) -> list:
        """Partition of the generator names into conjugacy classes."""
        cls = self.class_of()
        groups: dict = {}
        for name in self.gen_names:
            groups.setdefault(cls[self.gen(name)], []).append(name)
        return list(groups.values())

    def double_cosets(self, gen: str) -> list:
        """
        The ``<gen>``-``<gen>`` double cosets, ordered by representative.

        The representative is the shortest member, ties broken by smallest
        id.  A coset is ``centralizing`` if all members commute with the
        generator, ``additive`` if some shortest member ``d`` has
        ``l(s^i d s^j) = l(d) + i + j`` for all ``i, j < m``.
        """
        g = self.gen(gen)
        m = self.gen_orders[gen]
        pw = [self.power(g, i) for i in range(m)]
        seen = [False] * self.order
        raw = []
        for x in sorted(range(self.order), key=lambda y: (self.lengths[y], y)):
            if seen[x]:
                continue
            members = frozenset(self.mul(self.mul(a, x), b) for a in pw for b in pw)
            for y in members:
                seen[y] = True
            raw.append((x, members))
        out = []
        for idx, (rep, members) in enumerate(raw):
            if all(self.mul(y, g) == self.mul(g, y) for y in members):
                kind = "centralizing"
            else:
                lmin = self.lengths[rep]
                kind = "neither"
                for d in sorted(members):
                    if self.lengths[d] != lmin:
                        continue
                    if all(
                        self.lengths[self.mul(self.mul(pw[i], d), pw[j])] == lmin + i + j
                        for i in range(m)
                        for j in range(m)
                    ):
                        kind = "additive"
                        break
            out.append(DCoset(idx, gen, rep, members, kind))
        return out

    def coset_of(self, cosets: list) -> list:
        out = [0] * self.order
        for c in cosets:
            for x in c.members:
                out[x] = c.index
        return out

    def reduced_words(self, x: int, limit: int = 100000) -> list:
        """All reduced (length ``l(x)``) positive words for ``x``."""
        target_len = self.lengths[x]
        out = []
        names = self.gen_names

        def extend(prefix, cur):
            if len(out) >= limit:
                return
            if len(prefix) == target_len:
                if cur == x:
                    out.append(tuple(prefix))
                return
            for k, name in enumerate(names):
                y = self.right[k][cur]
                if self.lengths[y] == len(prefix) + 1:
                    prefix.append(name)
                    extend(prefix, y)
                    prefix.pop()

        # a prefix of a reduced word is reduced, so prune on length gain
        extend([], 0)
        return out


@lru_cache(maxsize=None)
def get_group(spec: GroupSpec) -> GroupData:
    """Shared, memoized :func:`build_group`."""
    return build_group(spec)


def build_group(spec: GroupSpec) -> GroupData:
    """Enumerate the group, verify its relations, and compute lengths."""
    model = _g4_model() if spec.kind == "G4" else _gr1n_model(spec.r, spec.n)
    names = tuple(g[0] for g in model.gens)
    index = {model.identity: 0}
    elements = [model.identity]
    words: list = [()]
    lengths = [0]
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for name, _, conc in model.gens:
            y = model.mul(elements[x], conc)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                words.append(words[x] + (name,))
                lengths.append(lengths[x] + 1)
                queue.append(index[y])
    if len(elements) != model.expected_order:
        raise GroupBuildError(f"{spec}: closure has {len(elements)} elements, expected {model.expected_order}")
    right = [[index[model.mul(e, conc)] for e in elements] for _, _, conc in model.gens]
    gd = GroupData(
        spec=spec,
        elements=elements,
        gen_names=names,
        gen_orders={g[0]: g[1] for g in model.gens},
        gen_ids={g[0]: index[g[2]] for g in model.gens},
        right=right,
        lengths=lengths,
        bfs_words=words,
        _index=index,
        _mul=model.mul,
    )
    for lhs, rhs in model.relations:
        if gd.eval_word(lhs) != gd.eval_word(rhs):
            raise GroupBuildError(f"{spec}: relation {format_word(lhs)} = {format_word(rhs)} fails")
    for name, m, _ in model.gens:
        if gd.element_order(gd.gen(name)) != m:
            raise GroupBuildError(f"{spec}: generator {name} does not have order {m}")
    return gd
