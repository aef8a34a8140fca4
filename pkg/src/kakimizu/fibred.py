"""Fibredness of special alternating pieces by graph reduction.

The checkerboard graph of a reduced special alternating diagram has one
vertex per white region and one edge per crossing.  The piece is fibred
exactly when the graph reduces to a single bare vertex under two moves:

* delete a loop;
* contract a non-loop edge with an endpoint of valence 2.

Nothing guarantees the move system is confluent, so reduction is a
backtracking search over move sequences, memoised on canonically labelled
graphs.  Successful searches return a replayable certificate.  A homogeneous
link is fibred exactly when each special alternating summand of its Murasugi
decomposition is.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations

from .errors import InputError, StructureError

_GRAPH_RE = re.compile(r"^\s*v\s*=\s*(\d+)\s*;\s*edges\s*=\s*((?:\(\s*\d+\s*,\s*\d+\s*\))*)\s*$")
_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")

_CANON_PERM_LIMIT = 50_000


@dataclass(frozen=True)
class ReductionGraph:
    """A connected multigraph with loops, on integer-labelled vertices."""

    vertices: frozenset
    edges: tuple  # sorted (u, v) pairs with u <= v, repeats for multi-edges

    def __post_init__(self) -> None:
        if not self.vertices:
            raise InputError("reduction graph needs at least one vertex")
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise InputError(f"edge ({u},{v}) touches an unknown vertex")
            if u > v:
                raise InputError("edges must be stored with u <= v")
        self._check_connected()

    def _check_connected(self) -> None:
        verts = set(self.vertices)
        start = min(verts)
        seen = {start}
        stack = [start]
        adj: dict = {v: set() for v in verts}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != verts:
            raise InputError("reduction graph must be connected")

    @classmethod
    def from_pairs(cls, n_or_vertices, pairs) -> "ReductionGraph":
        if isinstance(n_or_vertices, int):
            verts = frozenset(range(n_or_vertices))
        else:
            verts = frozenset(n_or_vertices)
        edges = tuple(sorted(tuple(sorted(p)) for p in pairs))
        return cls(verts, edges)

    @classmethod
    def from_text(cls, text: str) -> "ReductionGraph":
        """Parse the literal form ``v=<n>; edges=(a,b)(c,d)...``."""
        m = _GRAPH_RE.match(text.strip())
        if not m:
            raise InputError(f"cannot parse graph literal {text!r}")
        n = int(m.group(1))
        pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(m.group(2))]
        for u, v in pairs:
            if u >= n or v >= n:
                raise InputError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
        return cls.from_pairs(n, pairs)

    def degree(self, v) -> int:
        d = 0
        for u, w in self.edges:
            if u == v:
                d += 1
            if w == v:
                d += 1
        return d

    def loops(self) -> list:
        return sorted({e for e in self.edges if e[0] == e[1]})

    def contractible(self) -> list:
        """Distinct non-loop edges with an endpoint of valence 2."""
        out = set()
        for u, v in self.edges:
            if u != v and (self.degree(u) == 2 or self.degree(v) == 2):
                out.add((u, v))
        return sorted(out)

    def delete_loop(self, edge) -> "ReductionGraph":
        u, v = edge
        if u != v or edge not in self.edges:
            raise InputError(f"{edge} is not a loop of this graph")
        edges = list(self.edges)
        edges.remove(edge)
        verts = self.vertices
        if not edges and len(verts) > 1:
            raise StructureError("deleting the loop disconnected the graph")
        # an isolated vertex can only be the final single vertex
        return ReductionGraph(verts, tuple(edges))

    def contract(self, edge) -> "ReductionGraph":
        """Contract a non-loop edge, merging into the smaller label.

        Parallel copies of the contracted edge become loops; loops at the
        absorbed vertex move to the surviving one.
        """
        u, v = edge
        if u == v or edge not in self.edges:
            raise InputError(f"{edge} is not a non-loop edge of this graph")
        if self.degree(u) != 2 and self.degree(v) != 2:
            raise InputError(f"contraction of {edge} needs an endpoint of valence 2")
        keep, gone = min(u, v), max(u, v)
        edges = list(self.edges)
        edges.remove(edge)
        renamed = []
        for a, b in edges:
            a = keep if a == gone else a
            b = keep if b == gone else b
            renamed.append(tuple(sorted((a, b))))
        return ReductionGraph(self.vertices - {gone}, tuple(sorted(renamed)))

    def is_reduced(self) -> bool:
        return len(self.vertices) == 1 and not self.edges


def _refine_colors(g: ReductionGraph) -> dict:
    """Iterated degree/neighbourhood refinement; a colour per vertex."""
    loops: dict = {v: 0 for v in g.vertices}
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
    color = {v: (g.degree(v), loops[v]) for v in g.vertices}
    while True:
        new = {}
        for v in g.vertices:
            around = sorted(color[b if a == v else a]
                            for a, b in g.edges if v in (a, b) and a != b)
            new[v] = (color[v], tuple(around))
        # compress to small ints, keep the partition stable
        ranks = {c: i for i, c in enumerate(sorted(set(new.values())))}
        new = {v: ranks[new[v]] for v in g.vertices}
        if len(set(new.values())) == len(set(color.values())):
            return new
        color = new


def canonical_form(g: ReductionGraph):
    """An isomorphism-invariant key for memoisation.

    Vertices are grouped by refined colour and the minimal edge encoding
    over all colour-respecting relabellings is chosen.  When a graph is so
    symmetric that trying every relabelling would be expensive, the exact
    labelled encoding is used instead (tagged separately, so the key is
    merely finer, never wrong).
    """
    color = _refine_colors(g)
    classes: dict = {}
    for v in sorted(g.vertices):
        classes.setdefault(color[v], []).append(v)
    blocks = [classes[c] for c in sorted(classes)]
    count = 1
    for b in blocks:
        for i in range(2, len(b) + 1):
            count *= i
        if count > _CANON_PERM_LIMIT:
            return ("raw", tuple(sorted(g.vertices)), g.edges)

    best = None
    for perm_blocks in _block_permutations(blocks):
        relabel = {}
        idx = 0
        for block in perm_blocks:
            for v in block:
                relabel[v] = idx
                idx += 1
        enc = tuple(sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in g.edges))
        if best is None or enc < best:
            best = enc
    return ("canon", len(g.vertices), best)


def _block_permutations(blocks):
    if not blocks:
        yield []
        return
    head, rest = blocks[0], blocks[1:]
    for perm in permutations(head):
        for tail in _block_permutations(rest):
            yield [list(perm)] + tail


def reduction_certificate(g: ReductionGraph):
    """A replayable move sequence reducing g to a bare vertex, or None.

    Moves are ('delete_loop', (v, v)) and ('contract', (u, v)), named by
    the labels current when the move fires.  Both moves drop the edge count
    by one, so the search terminates; memoisation on canonical forms prunes
    revisits of shapes already known to be dead ends.
    """
    dead: set = set()

    def search(h: ReductionGraph):
        if h.is_reduced():
            return []
        key = canonical_form(h)
        if key in dead:
            return None
        for loop in h.loops():
            tail = search(h.delete_loop(loop))
            if tail is not None:
                return [("delete_loop", loop)] + tail
        for edge in h.contractible():
            tail = search(h.contract(edge))
            if tail is not None:
                return [("contract", edge)] + tail
        dead.add(key)
        return None

    return search(g)


def replay_certificate(g: ReductionGraph, moves) -> bool:
    """Check a certificate by applying its moves in order."""
    h = g
    for kind, edge in moves:
        if kind == "delete_loop":
            h = h.delete_loop(tuple(edge))
        elif kind == "contract":
            h = h.contract(tuple(edge))
        else:
            raise InputError(f"unknown certificate move {kind!r}")
    return h.is_reduced()


def is_fibred_special(g: ReductionGraph) -> bool:
    """Whether the special alternating piece with this graph is fibred."""
    return reduction_certificate(g) is not None


def is_fibred_homogeneous(pieces) -> bool:
    """Fibredness of a Murasugi sum: every summand must be fibred."""
    pieces = list(pieces)
    if not pieces:
        raise InputError("a Murasugi decomposition needs at least one piece")
    return all(is_fibred_special(p) for p in pieces)
