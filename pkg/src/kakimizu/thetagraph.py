"""Planar multigraphs with rotation systems and the theta-graph surface moves.

For a special alternating knot, every minimal genus Seifert surface comes
from a reduced alternating diagram, and the diagrams reachable by flypes are
tracked combinatorially: give every edge of the planar Seifert graph weight
1, merge parallel edges that bound bigons (summing weights), add weight-0
edges where a parallel twist site could be created without a bigon, and keep
the subgraph of edges lying in parallel families.  The result is the theta
graph of the surface; its faces are the regions.

Each face traversal gives every boundary edge a sign, opposite in the two
faces an edge borders.  Applying a region shifts each boundary weight by its
sign (never below zero); the reachable weight vectors are the vertices of
the Kakimizu complex, and weight vectors visited by a pass applying every
region exactly once span a maximal simplex.

Graphs are embedded in the sphere via a rotation system: a cyclic order of
incident edge ends at every vertex.  Files use one line per item::

    vertex <id>
    edge <id> <u> <v> weight=<w> dir=<+|->
    rot <vertex> <end> <end> ...

where an edge end is ``<edge-id>`` or, for loops, ``<edge-id>:0`` /
``<edge-id>:1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .complexes import SimplicialComplex, is_connected, is_flag
from .errors import InputError, MoveError, SizeLimitError, StructureError

Dart = tuple  # (edge id, end index 0 or 1)

DEFAULT_MAX_VERTICES = 100_000
MAX_REGIONS = 8


@dataclass
class Edge:
    u: str
    v: str
    weight: int
    direction: int  # +1 means oriented u -> v, -1 the reverse

    def ends(self):
        return (self.u, self.v)


def _edge_key(eid: str):
    # numeric ids sort numerically, generated ids (z1, z2, ...) after them
    return (0, int(eid), "") if eid.isdigit() else (1, 0, eid)


class PlanarMultigraph:
    """A connected multigraph embedded in the sphere.

    The embedding is a rotation system: for every vertex, the cyclic order of
    incident edge ends.  Validation checks that each end appears exactly once
    at the right vertex, that the graph is connected, and that the face count
    satisfies Euler's formula V - E + F = 2.
    """

    def __init__(self, vertices, edges, rotation):
        self.vertices = list(vertices)
        self.edges = dict(edges)
        self.rotation = {v: list(r) for v, r in rotation.items()}
        self.validate()

    def copy(self) -> "PlanarMultigraph":
        cls = type(self)
        g = cls.__new__(cls)
        g.vertices = list(self.vertices)
        g.edges = {e: Edge(ed.u, ed.v, ed.weight, ed.direction)
                   for e, ed in self.edges.items()}
        g.rotation = {v: list(r) for v, r in self.rotation.items()}
        return g

    def end_vertex(self, eid: str, end: int) -> str:
        e = self.edges[eid]
        return e.u if end == 0 else e.v

    def validate(self) -> None:
        if not self.vertices:
            raise StructureError("graph has no vertices")
        expected = {}
        for eid, e in self.edges.items():
            if e.u not in self.rotation or e.v not in self.rotation:
                raise StructureError(f"edge {eid} touches an unknown vertex")
            if e.direction not in (1, -1):
                raise StructureError(f"edge {eid} has direction {e.direction!r}")
            if e.weight < 0:
                raise StructureError(f"edge {eid} has negative weight")
            expected[(eid, 0)] = e.u
            expected[(eid, 1)] = e.v
        listed = []
        for v in self.vertices:
            for dart in self.rotation.get(v, []):
                if expected.get(dart) != v:
                    raise StructureError(f"rotation at {v} lists foreign end {dart}")
                listed.append(dart)
        if len(listed) != len(set(listed)) or set(listed) != set(expected):
            raise StructureError("rotation system must list each edge end exactly once")
        self._check_connected()
        if not self.edges:
            return  # a bare vertex; the single face has empty boundary
        f = len(self.faces())
        if len(self.vertices) - len(self.edges) + f != 2:
            raise StructureError(
                f"not a sphere embedding: V-E+F = "
                f"{len(self.vertices)}-{len(self.edges)}+{f}")

    def _check_connected(self) -> None:
        start = self.vertices[0]
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for eid, end in self.rotation[v]:
                w = self.end_vertex(eid, 1 - end)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if set(self.vertices) - seen:
            raise StructureError("graph is not connected")

    def faces(self) -> list:
        """Boundary walks of the embedding, one per face.

        A walk is a list of directed edge sides (eid, source end); the side
        (e, a) traverses e away from end a.  Arriving at the far end, the
        walk continues with the rotation successor there, so every directed
        side is used exactly once over all faces.  Walks are rotated to
        start at their smallest side and the list is sorted, making the
        face order deterministic.
        """
        succ = {}
        for v in self.vertices:
            rot = self.rotation[v]
            for i, dart in enumerate(rot):
                succ[dart] = rot[(i + 1) % len(rot)]
        walks = []
        seen = set()
        for v in self.vertices:
            for dart in self.rotation[v]:
                if dart in seen:
                    continue
                walk = []
                cur = dart
                while cur not in seen:
                    seen.add(cur)
                    walk.append(cur)
                    eid, a = cur
                    cur = succ[(eid, 1 - a)]
                walks.append(_rotate_min(walk))
        return sorted(walks)

    def walk_vertices(self, walk) -> list:
        return [self.end_vertex(eid, a) for eid, a in walk]

    def parallel_families(self) -> dict:
        fams: dict = {}
        for eid, e in self.edges.items():
            fams.setdefault(frozenset((e.u, e.v)), []).append(eid)
        for fam in fams.values():
            fam.sort(key=_edge_key)
        return fams

    def edge_order(self) -> tuple:
        return tuple(sorted(self.edges, key=_edge_key))

    def weights(self) -> dict:
        return {eid: e.weight for eid, e in self.edges.items()}

    @classmethod
    def from_text(cls, text: str) -> "PlanarMultigraph":
        vertices: list = []
        edges: dict = {}
        rot_lines: dict = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            kind = parts[0]
            try:
                if kind == "vertex":
                    (vid,) = parts[1:]
                    if vid in vertices:
                        raise InputError(f"duplicate vertex {vid}")
                    vertices.append(vid)
                elif kind == "edge":
                    eid, u, v = parts[1:4]
                    if eid in edges:
                        raise InputError(f"duplicate edge {eid}")
                    attrs = dict(p.split("=", 1) for p in parts[4:])
                    weight = int(attrs.pop("weight", "1"))
                    dirtext = attrs.pop("dir", "+")
                    if attrs or dirtext not in "+-":
                        raise InputError(f"bad edge attributes on {eid}")
                    edges[eid] = Edge(u, v, weight, 1 if dirtext == "+" else -1)
                elif kind == "rot":
                    vid = parts[1]
                    if vid in rot_lines:
                        raise InputError(f"duplicate rotation for {vid}")
                    rot_lines[vid] = parts[2:]
                else:
                    raise InputError(f"unknown directive {kind!r}")
            except (ValueError, IndexError) as exc:
                raise InputError(f"line {lineno}: cannot parse {raw!r}") from exc
        rotation: dict = {v: [] for v in vertices}
        for vid, tokens in rot_lines.items():
            if vid not in rotation:
                raise InputError(f"rotation for unknown vertex {vid}")
            darts = []
            for tok in tokens:
                if ":" in tok:
                    eid, endtext = tok.rsplit(":", 1)
                    if endtext not in ("0", "1") or eid not in edges:
                        raise InputError(f"bad edge end {tok!r}")
                    darts.append((eid, int(endtext)))
                else:
                    if tok not in edges:
                        raise InputError(f"unknown edge {tok!r} in rotation")
                    e = edges[tok]
                    if e.u == e.v:
                        raise InputError(f"loop edge {tok} needs explicit ends {tok}:0 {tok}:1")
                    if vid == e.u:
                        darts.append((tok, 0))
                    elif vid == e.v:
                        darts.append((tok, 1))
                    else:
                        raise InputError(f"edge {tok} is not incident to {vid}")
            rotation[vid] = darts
        return cls(vertices, edges, rotation)


def _rotate_min(walk: list) -> tuple:
    k = walk.index(min(walk))
    return tuple(walk[k:] + walk[:k])


class ThetaGraph(PlanarMultigraph):
    """A reduced weighted graph whose every edge lies in a parallel family."""

    def validate(self) -> None:
        super().validate()
        for pair, fam in self.parallel_families().items():
            if len(fam) < 2:
                raise StructureError(
                    f"theta edge family {sorted(fam)} is a single edge")
            if len(pair) == 1:
                raise StructureError("theta graphs carry no loops")
        for walk in self.faces():
            if len(walk) == 2:
                w1 = self.edges[walk[0][0]].weight
                w2 = self.edges[walk[1][0]].weight
                if w1 > 0 and w2 > 0:
                    raise StructureError(
                        "bigon between weight-positive edges was not reduced")


def reduce_bigons(g: PlanarMultigraph, rng=None) -> PlanarMultigraph:
    """Merge parallel edge pairs bounding bigons until none remain.

    Both edges of a bigon face are rotation-adjacent parallels; the survivor
    keeps the smaller id and carries the weight sum.  Requires the all
    weight-1 Seifert graph as input.  `rng` (tests only) shuffles the merge
    order; the result does not depend on it.
    """
    if any(e.weight != 1 for e in g.edges.values()):
        raise InputError("bigon reduction starts from the weight-1 Seifert graph")
    g = g.copy()
    while True:
        bigons = []
        for walk in g.faces():
            if len(walk) != 2:
                continue
            (e1, _), (e2, _) = walk
            if e1 == e2:
                continue
            if frozenset(g.edges[e1].ends()) == frozenset(g.edges[e2].ends()) \
                    and g.edges[e1].u != g.edges[e1].v:
                bigons.append(tuple(sorted((e1, e2), key=_edge_key)))
        if not bigons:
            return g
        bigons.sort()
        keep, drop = bigons[0] if rng is None else rng.choice(bigons)
        g.edges[keep].weight += g.edges[drop].weight
        for v in g.vertices:
            g.rotation[v] = [d for d in g.rotation[v] if d[0] != drop]
        del g.edges[drop]


def add_zero_edges(g: PlanarMultigraph) -> PlanarMultigraph:
    """Insert weight-0 edges across faces wherever no bigon results.

    A pair of distinct vertices on a face qualifies when some edge already
    joins the pair and both arcs of the face boundary between the chosen
    occurrences have at least two edges, so both faces created by the
    insertion have length at least three.  Insertion repeats, first
    qualifying position in the deterministic face order each round, until
    nothing qualifies.
    """
    g = g.copy()
    counter = 0
    while True:
        insertion = _find_zero_insertion(g)
        if insertion is None:
            return g
        walk, i, j = insertion
        counter += 1
        eid = f"z{counter}"
        while eid in g.edges:
            counter += 1
            eid = f"z{counter}"
        verts = g.walk_vertices(walk)
        u, v = verts[i], verts[j]
        # orient the new twist site like the existing edge of its family,
        # so the bigons they bound get balanced region signs
        partner = g.parallel_families()[frozenset((u, v))][0]
        pe = g.edges[partner]
        tail = pe.u if pe.direction == 1 else pe.v
        g.edges[eid] = Edge(u, v, 0, 1 if tail == u else -1)
        _insert_at_corner(g, u, walk[i], (eid, 0))
        _insert_at_corner(g, v, walk[j], (eid, 1))


def _find_zero_insertion(g: PlanarMultigraph):
    pairs = set(g.parallel_families())
    for walk in g.faces():
        length = len(walk)
        verts = g.walk_vertices(walk)
        for i in range(length):
            for j in range(i + 1, length):
                u, v = verts[i], verts[j]
                if u == v:
                    continue
                arc, coarc = j - i, length - (j - i)
                if arc < 2 or coarc < 2:
                    continue
                if frozenset((u, v)) in pairs:
                    return walk, i, j
    return None


def _insert_at_corner(g: PlanarMultigraph, vertex: str, departing: Dart, new: Dart) -> None:
    # the face walk leaves `vertex` along `departing`; placing the new end
    # just before it in the rotation puts the new edge inside that face
    rot = g.rotation[vertex]
    rot.insert(rot.index(departing), new)


def theta_subgraph(g: PlanarMultigraph) -> ThetaGraph:
    """Restrict to edges whose endpoint pair carries at least two edges."""
    keep = set()
    for fam in g.parallel_families().values():
        if len(fam) >= 2:
            keep.update(fam)
    if not keep:
        raise StructureError("theta graph is empty: the knot has a unique surface")
    verts = sorted({v for eid in keep for v in g.edges[eid].ends()})
    edges = {eid: Edge(g.edges[eid].u, g.edges[eid].v,
                       g.edges[eid].weight, g.edges[eid].direction)
             for eid in keep}
    rotation = {v: [d for d in g.rotation[v] if d[0] in keep] for v in verts}
    return ThetaGraph(verts, edges, rotation)


def build_theta(g: PlanarMultigraph) -> ThetaGraph:
    """Full pipeline from a weight-1 Seifert graph to its theta graph."""
    return theta_subgraph(add_zero_edges(reduce_bigons(g)))


@dataclass(frozen=True)
class Region:
    """A face of the theta graph with signed boundary edges."""

    index: int
    boundary: tuple  # of (edge id, sign)

    def signs(self) -> dict:
        return dict(self.boundary)


def region_signatures(tg: PlanarMultigraph) -> tuple:
    """Signed boundaries of all regions, from coherent face traversal.

    Every face is walked with the face kept on a fixed side, so an edge is
    traversed forwards by exactly one face and backwards by the other; the
    sign records whether the traversal agrees with the edge's stored
    direction.  Consequently each edge receives opposite signs from its two
    regions, and applying every region once shifts no weight at all.
    """
    regions = []
    per_edge: dict = {}
    for idx, walk in enumerate(tg.faces()):
        boundary = []
        for eid, a in walk:
            sign = tg.edges[eid].direction * (1 if a == 0 else -1)
            boundary.append((eid, sign))
            per_edge.setdefault(eid, []).append(sign)
        regions.append(Region(idx, tuple(sorted(boundary))))
    for eid, signs in per_edge.items():
        assert sorted(signs) == [-1, 1], f"edge {eid} signs {signs} do not cancel"
    return tuple(regions)


def apply_region(w: dict, region: Region) -> dict:
    """Shift each boundary weight by its sign; other weights are untouched."""
    out = dict(w)
    for eid, sign in region.boundary:
        if eid not in out:
            raise InputError(f"weight vector missing edge {eid}")
        out[eid] += sign
        if out[eid] < 0:
            raise MoveError(f"region {region.index} drives edge {eid} negative")
    return out


def _try_region(w: dict, region: Region):
    out = dict(w)
    for eid, sign in region.boundary:
        out[eid] += sign
        if out[eid] < 0:
            return None
    return out


def weight_label(tg: ThetaGraph, w: dict) -> tuple:
    return tuple(w[eid] for eid in tg.edge_order())


def build_complex(tg: ThetaGraph, w0: dict,
                  max_vertices: int = DEFAULT_MAX_VERTICES) -> SimplicialComplex:
    """The Kakimizu complex reachable from the starting weight vector.

    Vertices are the weight vectors reachable through applicable regions;
    for every vertex, each ordering of the regions that stays applicable
    contributes the set of vectors it visits as a simplex (such a pass ends
    where it started).  Inclusion-maximal visited sets are the maximal
    simplices; the result must come out connected and flag.
    """
    regions = region_signatures(tg)
    if len(regions) > MAX_REGIONS:
        raise SizeLimitError(f"{len(regions)} regions exceed the bound {MAX_REGIONS}")
    for region in regions:
        if sum(sign for _, sign in region.boundary) != 0:
            raise StructureError(
                f"region {region.index} has unbalanced signs: edge directions "
                "are not coherent with the link orientation")
    if set(w0) != set(tg.edges):
        raise InputError("weight vector must be supported on the theta edges")
    if any(not isinstance(x, int) or x < 0 for x in w0.values()):
        raise InputError("weights must be non-negative integers")

    seen = {weight_label(tg, w0): dict(w0)}
    frontier = [dict(w0)]
    while frontier:
        w = frontier.pop()
        for region in regions:
            w2 = _try_region(w, region)
            if w2 is None:
                continue
            lab = weight_label(tg, w2)
            if lab not in seen:
                if len(seen) >= max_vertices:
                    raise SizeLimitError(f"more than {max_vertices} reachable surfaces")
                seen[lab] = w2
                frontier.append(w2)

    simplices = {frozenset([lab]) for lab in seen}
    for lab0, start in seen.items():
        for perm in permutations(regions):
            w = dict(start)
            visited = {lab0}
            for region in perm:
                w = _try_region(w, region)
                if w is None:
                    break
                visited.add(weight_label(tg, w))
            else:
                assert weight_label(tg, w) == lab0, "a full pass must close up"
                simplices.add(frozenset(visited))

    complex_ = SimplicialComplex.from_maximal(simplices)
    assert is_connected(complex_), "theta complex must be connected"
    assert is_flag(complex_), "theta complex must be flag"
    return complex_
