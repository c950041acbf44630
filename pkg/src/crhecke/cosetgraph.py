"""
The Hecke double-coset graph for a single generator.

Vertices are the ``<s>``-``<s>`` double cosets.  There is an arrow
``d -> d'`` when some product ``T_{s^i} T_d T_{s^j}`` has a non-zero
coefficient on a basis word lying in the coset of ``d'``; these products span
``H_J T_d H_J``, so nothing else can add support.  A vertex is terminal when
its only arrow is the implicit self-loop, which is exactly stability of the
coset with respect to the basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Set, Tuple

from .basis import ReducedBasis
from .element import HeckeElement
from .groups import DCoset
from .hecke import h_mul, support_cosets

__all__ = ["DCosetGraph", "build_graph", "is_stable", "emit_dot", "graph_to_json", "transitive_reduction"]


@dataclass
class DCosetGraph:
    basis: ReducedBasis
    gen: str
    cosets: List[DCoset]
    edges: Set[Tuple[int, int]]

    @property
    def terminal(self) -> List[bool]:
        out = [True] * len(self.cosets)
        for a, _ in self.edges:
            out[a] = False
        return out

    def label(self, i: int) -> str:
        return self.basis.word_str(self.cosets[i].rep)

    def successors(self, i: int) -> Set[int]:
        return {b for a, b in self.edges if a == i}

    def arrows_by_label(self) -> Dict[str, Set[str]]:
        out: Dict[str, Set[str]] = {}
        for a, b in self.edges:
            out.setdefault(self.label(a), set()).add(self.label(b))
        return out

    def coset_index(self, x: int) -> int:
        for c in self.cosets:
            if x in c.members:
                return c.index
        raise KeyError(x)

    def is_acyclic(self) -> bool:
        indeg = {i: 0 for i in range(len(self.cosets))}
        for _, b in self.edges:
            indeg[b] += 1
        ready = [i for i, d in indeg.items() if d == 0]
        seen = 0
        while ready:
            i = ready.pop()
            seen += 1
            for b in self.successors(i):
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
        return seen == len(self.cosets)


def _two_sided_products(basis: ReducedBasis, x: int, gen: str):
    tab = basis.table
    m = basis.order(gen)
    e = {x: basis.params.xi(basis.gen_class[gen], 0)}
    for j in range(m):
        right = tab.fold_right((gen,) * j, e)
        for i in range(m):
            yield tab.fold_left((gen,) * i, right)


def build_graph(basis: ReducedBasis, gen: str) -> DCosetGraph:
    cosets = basis.group.double_cosets(gen)
    where = basis.group.coset_of(cosets)
    edges = set()
    for c in cosets:
        for prod in _two_sided_products(basis, c.rep, gen):
            for k in prod:
                if where[k] != c.index:
                    edges.add((c.index, where[k]))
    return DCosetGraph(basis, gen, cosets, edges)


def is_stable(basis: ReducedBasis, coset: DCoset) -> bool:
    """Whether ``H_J T_d H_J`` stays inside the span of the coset."""
    cosets = basis.group.double_cosets(coset.gen)
    g = coset.gen
    m = basis.order(g)
    td = HeckeElement.basis_element(basis, coset.rep)
    powers = [basis.straighten((g,) * i) for i in range(m)]
    for a in powers:
        left = h_mul(a, td)
        for b in powers:
            if support_cosets(h_mul(left, b), cosets) - {coset.index}:
                return False
    return True


def transitive_reduction(edges: Set[Tuple[int, int]]) -> Set[Tuple[int, int]]:
    succ: Dict[int, Set[int]] = {}
    for a, b in edges:
        succ.setdefault(a, set()).add(b)

    def reachable(a: int, skip: Tuple[int, int]) -> Set[int]:
        seen, stack = set(), [a]
        while stack:
            x = stack.pop()
            for y in succ.get(x, ()):
                if (x, y) != skip and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    return {(a, b) for a, b in edges if b not in reachable(a, (a, b))}


def _quote(s: str) -> str:
    return '"' + s.replace('"', r"\"") + '"'


def emit_dot(graph: DCosetGraph, reduce: bool = False) -> str:
    """Deterministic DOT; self-loops are implicit and not drawn."""
    spec = graph.basis.group.spec
    lines = [f"digraph {_quote(f'{spec} <{graph.gen}>-<{graph.gen}> double cosets, basis {graph.basis.name}')} {{"]
    order = sorted(range(len(graph.cosets)), key=lambda i: graph.basis.sort_key(graph.cosets[i].rep))
    term = graph.terminal
    for i in order:
        c = graph.cosets[i]
        shape = "doublecircle" if term[i] else "circle"
        lines.append(f"  {_quote(graph.label(i))} [shape={shape}, kind={_quote(c.kind)}];")
    edges = transitive_reduction(graph.edges) if reduce else graph.edges
    rank = {i: k for k, i in enumerate(order)}
    for a, b in sorted(edges, key=lambda e: (rank[e[0]], rank[e[1]])):
        lines.append(f"  {_quote(graph.label(a))} -> {_quote(graph.label(b))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: DCosetGraph) -> dict:
    order = sorted(range(len(graph.cosets)), key=lambda i: graph.basis.sort_key(graph.cosets[i].rep))
    term = graph.terminal
    return {
        "group": str(graph.basis.group.spec),
        "basis": graph.basis.name,
        "generator": graph.gen,
        "vertices": [
            {
                "rep": graph.label(i),
                "kind": graph.cosets[i].kind,
                "size": len(graph.cosets[i].members),
                "terminal": term[i],
            }
            for i in order
        ],
        "edges": sorted([graph.label(a), graph.label(b)] for a, b in graph.edges),
        "acyclic": graph.is_acyclic(),
    }
