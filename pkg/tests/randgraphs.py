"""Random sphere-embedded multigraphs for property tests.

Graphs grow from a pair of parallel edges by three embedding-preserving
operations (parallel duplication, a chord across a face, edge subdivision),
so every generated graph is 2-edge-connected and spherical by construction;
the constructor's Euler check confirms it.
"""

import random

from kakimizu.thetagraph import Edge, PlanarMultigraph


def random_sphere_graph(rng: random.Random, ops: int = 8) -> PlanarMultigraph:
    vertices = ["v0", "v1"]
    edges = {"0": Edge("v0", "v1", 1, 1), "1": Edge("v0", "v1", 1, 1)}
    rotation = {"v0": [("0", 0), ("1", 0)], "v1": [("1", 1), ("0", 1)]}
    next_edge = 2
    next_vertex = 2

    def fresh_edge():
        nonlocal next_edge
        eid = str(next_edge)
        next_edge += 1
        return eid

    for _ in range(ops):
        op = rng.choice(["parallel", "chord", "subdivide"])
        if op == "parallel":
            eid = rng.choice(sorted(edges))
            e = edges[eid]
            new = fresh_edge()
            edges[new] = Edge(e.u, e.v, 1, rng.choice((1, -1)))
            ru = rotation[e.u]
            ru.insert(ru.index((eid, 0)) + 1, (new, 0))
            rv = rotation[e.v]
            rv.insert(rv.index((eid, 1)), (new, 1))
        elif op == "subdivide":
            eid = rng.choice(sorted(edges))
            e = edges[eid]
            mid = f"v{next_vertex}"
            next_vertex += 1
            vertices.append(mid)
            a, b = fresh_edge(), fresh_edge()
            edges[a] = Edge(e.u, mid, 1, rng.choice((1, -1)))
            edges[b] = Edge(mid, e.v, 1, rng.choice((1, -1)))
            ru = rotation[e.u]
            ru[ru.index((eid, 0))] = (a, 0)
            rv = rotation[e.v]
            rv[rv.index((eid, 1))] = (b, 1)
            rotation[mid] = [(a, 1), (b, 0)]
            del edges[eid]
        else:
            g = PlanarMultigraph(vertices, edges, rotation)
            walks = g.faces()
            walk = walks[rng.randrange(len(walks))]
            verts = g.walk_vertices(walk)
            spots = [(i, j) for i in range(len(walk)) for j in range(len(walk))
                     if i < j and verts[i] != verts[j]]
            if not spots:
                continue
            i, j = rng.choice(spots)
            new = fresh_edge()
            edges[new] = Edge(verts[i], verts[j], 1, rng.choice((1, -1)))
            ri = rotation[verts[i]]
            ri.insert(ri.index(walk[i]), (new, 0))
            rj = rotation[verts[j]]
            rj.insert(rj.index(walk[j]), (new, 1))

    for e in edges.values():
        e.weight = rng.randint(0, 3)
    return PlanarMultigraph(vertices, edges, rotation)
