"""Finite simplicial complexes given by their maximal simplices.

A complex here is a set of labelled vertices together with the family of
inclusion-maximal simplices.  Because every complex produced by this package
is a flag complex (it is determined by its 1-skeleton), the module provides
the flag closure of a graph via maximal-clique enumeration, a flag test,
isomorphism testing for small complexes, recognition of the shapes that occur
in knot tables (point, path, single simplex), and deterministic DOT and JSON
exports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InputError, SizeLimitError

Label = object
Simplex = frozenset

ISO_VERTEX_LIMIT = 64


def label_text(label: Label) -> str:
    """Render a vertex label as deterministic text.

    Strings pass through; tuples of integers print as ``(a,b,c)`` without
    whitespace, which is the form used for surface tuples and weight vectors.
    """
    if isinstance(label, str):
        return label
    if isinstance(label, tuple):
        return "(" + ",".join(str(x) for x in label) + ")"
    return str(label)


def _label_key(label: Label) -> str:
    return label_text(label)


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertices plus the antichain of maximal simplices covering them."""

    vertices: frozenset
    simplices: frozenset

    def __post_init__(self) -> None:
        if not self.vertices:
            raise InputError("a simplicial complex needs at least one vertex")
        for s in self.simplices:
            if not s:
                raise InputError("empty maximal simplex")
            if not s <= self.vertices:
                raise InputError(f"simplex {sorted(map(label_text, s))} not within vertex set")
        for a in self.simplices:
            for b in self.simplices:
                if a < b:
                    raise InputError("maximal simplices must form an antichain")
        covered = frozenset().union(*self.simplices) if self.simplices else frozenset()
        if covered != self.vertices:
            raise InputError("every vertex must lie in at least one maximal simplex")

    @classmethod
    def from_maximal(cls, simplices: Iterable[Iterable[Label]],
                     vertices: Iterable[Label] | None = None) -> "SimplicialComplex":
        """Build a complex from candidate simplices.

        Simplices contained in others are absorbed.  Vertices listed in
        `vertices` but missing from every simplex become isolated vertices
        (their own maximal 0-simplex).
        """
        sims = {frozenset(s) for s in simplices}
        sims.discard(frozenset())
        verts = set().union(*sims) if sims else set()
        if vertices is not None:
            extra = set(vertices) - verts
            sims |= {frozenset([v]) for v in extra}
            verts |= extra
        if not verts:
            raise InputError("a simplicial complex needs at least one vertex")
        maximal = {s for s in sims if not any(s < other for other in sims)}
        return cls(frozenset(verts), frozenset(maximal))

    def sorted_vertices(self) -> list:
        return sorted(self.vertices, key=_label_key)

    def one_skeleton(self) -> set:
        """All 1-simplices, as frozenset pairs."""
        edges = set()
        for s in self.simplices:
            edges.update(frozenset(p) for p in combinations(s, 2))
        return edges

    def dimension(self) -> int:
        return max(len(s) for s in self.simplices) - 1

    def degrees(self) -> dict:
        deg = {v: 0 for v in self.vertices}
        for e in self.one_skeleton():
            for v in e:
                deg[v] += 1
        return deg


def flag_closure(edges: Iterable[Iterable[Label]], vertices: Iterable[Label]) -> SimplicialComplex:
    """The flag complex on `vertices` whose 1-skeleton is `edges`.

    Maximal simplices are the maximal cliques of the edge graph, enumerated
    by Bron-Kerbosch with a deterministic sorted pivot choice.
    """
    verts = sorted(set(vertices), key=_label_key)
    if not verts:
        raise InputError("flag closure of the empty vertex set")
    adj: dict = {v: set() for v in verts}
    for e in edges:
        a, b = tuple(e)
        if a == b:
            raise InputError("loop edges are not 1-simplices")
        if a not in adj or b not in adj:
            raise InputError("edge endpoint outside vertex set")
        adj[a].add(b)
        adj[b].add(a)

    cliques: list = []

    def expand(r: set, p: set, x: set) -> None:
        if not p and not x:
            cliques.append(frozenset(r))
            return
        pivot = max(sorted(p | x, key=_label_key), key=lambda v: len(adj[v] & p))
        for v in sorted(p - adj[pivot], key=_label_key):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(verts), set())
    return SimplicialComplex.from_maximal(cliques, vertices=verts)


def is_flag(c: SimplicialComplex) -> bool:
    """True when the complex equals the flag closure of its own 1-skeleton."""
    return flag_closure(c.one_skeleton(), c.vertices) == c


def is_connected(c: SimplicialComplex) -> bool:
    adj: dict = {v: set() for v in c.vertices}
    for e in c.one_skeleton():
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    start = c.sorted_vertices()[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == c.vertices


def _vertex_profile(c: SimplicialComplex) -> dict:
    deg = c.degrees()
    prof = {}
    for v in c.vertices:
        sizes = sorted(len(s) for s in c.simplices if v in s)
        prof[v] = (deg[v], tuple(sizes))
    return prof


def isomorphic(a: SimplicialComplex, b: SimplicialComplex,
               max_vertices: int = ISO_VERTEX_LIMIT) -> bool:
    """Decide complex isomorphism by backtracking over vertex bijections.

    Pruned by degree and by the multiset of maximal-simplex sizes through
    each vertex; intended for the small complexes arising from knot tables.
    """
    if len(a.vertices) > max_vertices or len(b.vertices) > max_vertices:
        raise SizeLimitError(f"isomorphism test limited to {max_vertices} vertices")
    if len(a.vertices) != len(b.vertices):
        return False
    if sorted(len(s) for s in a.simplices) != sorted(len(s) for s in b.simplices):
        return False
    prof_a = _vertex_profile(a)
    prof_b = _vertex_profile(b)
    if sorted(prof_a.values()) != sorted(prof_b.values()):
        return False

    edges_a = a.one_skeleton()
    edges_b = b.one_skeleton()
    adj_b: dict = {v: set() for v in b.vertices}
    for e in edges_b:
        x, y = tuple(e)
        adj_b[x].add(y)
        adj_b[y].add(x)
    adj_a: dict = {v: set() for v in a.vertices}
    for e in edges_a:
        x, y = tuple(e)
        adj_a[x].add(y)
        adj_a[y].add(x)

    # most-constrained-first assignment order
    order = sorted(a.vertices, key=lambda v: (-prof_a[v][0], _label_key(v)))

    def extend(i: int, mapping: dict, used: set) -> bool:
        if i == len(order):
            mapped = {frozenset(mapping[v] for v in s) for s in a.simplices}
            return mapped == set(b.simplices)
        v = order[i]
        for w in sorted(b.vertices - used, key=_label_key):
            if prof_a[v] != prof_b[w]:
                continue
            ok = True
            for u in mapping:
                if (u in adj_a[v]) != (mapping[u] in adj_b[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1, mapping, used):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0, {}, set())


@dataclass(frozen=True)
class ComplexShape:
    """Named shape of a complex: point, path(n), simplex(d) or explicit.

    Constructors normalise the overlaps path(1) = point, path(2) = simplex(1)
    and simplex(0) = point, so equal shapes compare equal.
    """

    kind: str
    size: int = 0
    complex: SimplicialComplex | None = None

    @classmethod
    def point(cls) -> "ComplexShape":
        return cls("point")

    @classmethod
    def path(cls, n: int) -> "ComplexShape":
        if n < 1:
            raise InputError("path needs at least one vertex")
        if n == 1:
            return cls.point()
        if n == 2:
            return cls.simplex(1)
        return cls("path", n)

    @classmethod
    def simplex(cls, d: int) -> "ComplexShape":
        if d < 0:
            raise InputError("simplex dimension must be non-negative")
        if d == 0:
            return cls.point()
        return cls("simplex", d)

    @classmethod
    def explicit(cls, c: SimplicialComplex) -> "ComplexShape":
        return cls("explicit", len(c.vertices), c)

    @classmethod
    def parse(cls, text: str) -> "ComplexShape":
        """Parse a shape literal: ``point``, ``path(n)`` or ``simplex(d)``."""
        text = text.strip()
        if text == "point":
            return cls.point()
        for name, ctor in (("path", cls.path), ("simplex", cls.simplex)):
            if text.startswith(name + "(") and text.endswith(")"):
                inner = text[len(name) + 1:-1]
                try:
                    return ctor(int(inner))
                except ValueError as exc:
                    raise InputError(f"bad shape literal {text!r}") from exc
        raise InputError(f"unknown shape literal {text!r}")

    def __str__(self) -> str:
        if self.kind in ("path", "simplex"):
            return f"{self.kind}({self.size})"
        if self.kind == "explicit":
            return f"explicit({self.size} vertices)"
        return self.kind

    def as_complex(self, prefix: str = "T") -> SimplicialComplex:
        """A representative complex of this shape with labels T1, T2, ..."""
        if self.kind == "point":
            return SimplicialComplex.from_maximal([[f"{prefix}1"]])
        if self.kind == "simplex":
            verts = [f"{prefix}{i}" for i in range(1, self.size + 2)]
            return SimplicialComplex.from_maximal([verts])
        if self.kind == "path":
            verts = [f"{prefix}{i}" for i in range(1, self.size + 1)]
            return SimplicialComplex.from_maximal(
                [[verts[i], verts[i + 1]] for i in range(self.size - 1)])
        assert self.complex is not None
        return self.complex

    def equivalent(self, other: "ComplexShape") -> bool:
        if self.kind != "explicit" and other.kind != "explicit":
            return self == other
        return isomorphic(self.as_complex(), other.as_complex())


def recognize(c: SimplicialComplex) -> ComplexShape:
    """Name the shape of a complex when it is a point, path or single simplex."""
    n = len(c.vertices)
    if n == 1:
        return ComplexShape.point()
    if len(c.simplices) == 1:
        (s,) = c.simplices
        if len(s) == n:
            return ComplexShape.simplex(n - 1)
    if all(len(s) == 2 for s in c.simplices) and len(c.simplices) == n - 1:
        degs = sorted(c.degrees().values())
        if degs == [1, 1] + [2] * (n - 2) and is_connected(c):
            return ComplexShape.path(n)
    return ComplexShape.explicit(c)


def to_json(c: SimplicialComplex) -> str:
    """Canonical JSON with sorted vertices and sorted maximal simplices."""
    verts = [label_text(v) for v in c.sorted_vertices()]
    sims = sorted(sorted(label_text(v) for v in s) for s in c.simplices)
    return json.dumps({"vertices": verts, "maximal_simplices": sims},
                      indent=2, sort_keys=True) + "\n"


def to_dot(c: SimplicialComplex) -> str:
    """Deterministic DOT: one node per vertex, one edge per 1-simplex.

    Maximal simplices of dimension two or more are annotated as comments so
    that filled cliques survive the drop to the 1-skeleton.
    """
    lines = ["graph kakimizu {", "  node [shape=circle];"]
    for v in c.sorted_vertices():
        lines.append(f'  "{label_text(v)}";')
    for e in sorted(sorted(label_text(v) for v in e) for e in c.one_skeleton()):
        lines.append(f'  "{e[0]}" -- "{e[1]}";')
    for s in sorted(sorted(label_text(v) for v in s) for s in c.simplices):
        if len(s) >= 3:
            lines.append("  // filled simplex: " + " ".join(s))
    lines.append("}")
    return "\n".join(lines) + "\n"
