import random

import pytest

from kakimizu.errors import InputError
from kakimizu.fibred import (ReductionGraph, canonical_form, is_fibred_homogeneous,
                             is_fibred_special, reduction_certificate,
                             replay_certificate)


def random_connected_multigraph(rng, max_edges=8):
    """Random spanning tree plus extra edges and loops."""
    n = rng.randint(1, 5)
    pairs = []
    for v in range(1, n):
        pairs.append((rng.randrange(v), v))
    target = rng.randint(len(pairs), max_edges)
    while len(pairs) < target:
        if rng.random() < 0.25:
            v = rng.randrange(n)
            pairs.append((v, v))
        else:
            pairs.append((rng.randrange(n), rng.randrange(n)))
    return ReductionGraph.from_pairs(n, pairs)


def greedy_reduces(g: ReductionGraph, rng) -> bool:
    """Independent greedy reducer: apply a random available move until stuck.

    Restates the move rules inline; shares no code with the search.
    """
    verts = set(g.vertices)
    edges = list(g.edges)
    while edges:
        deg = {v: 0 for v in verts}
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        loops = [e for e in edges if e[0] == e[1]]
        contractible = [e for e in edges
                        if e[0] != e[1] and (deg[e[0]] == 2 or deg[e[1]] == 2)]
        moves = [("loop", e) for e in loops] + [("contract", e) for e in contractible]
        if not moves:
            return False
        kind, (u, v) = rng.choice(moves)
        edges.remove((u, v))
        if kind == "contract":
            keep, gone = min(u, v), max(u, v)
            edges = [tuple(sorted((keep if a == gone else a, keep if b == gone else b)))
                     for a, b in edges]
            verts.discard(gone)
    return len(verts) == 1


class TestReductionGraph:
    def test_from_text(self):
        g = ReductionGraph.from_text("v=3; edges=(0,1)(1,2)(2,2)")
        assert g.degree(2) == 3
        assert g.loops() == [(2, 2)]

    @pytest.mark.parametrize("bad", ["", "v=2; edges=", "v=2; edges=(0,3)",
                                     "edges=(0,1)", "v=x; edges=(0,1)"])
    def test_rejects(self, bad):
        with pytest.raises(InputError):
            ReductionGraph.from_text(bad)

    def test_disconnected_rejected(self):
        with pytest.raises(InputError):
            ReductionGraph.from_pairs(4, [(0, 1), (2, 3)])

    def test_contract_parallel_makes_loop(self):
        g = ReductionGraph.from_pairs(2, [(0, 1), (0, 1)])
        h = g.contract((0, 1))
        assert h.edges == ((0, 0),)

    def test_contract_needs_valence_two(self):
        g = ReductionGraph.from_pairs(2, [(0, 1), (0, 1), (0, 1)])
        with pytest.raises(InputError):
            g.contract((0, 1))


class TestFibredSpecial:
    def test_bare_vertex(self):
        assert is_fibred_special(ReductionGraph.from_pairs(1, []))

    def test_single_loop(self):
        assert is_fibred_special(ReductionGraph.from_pairs(1, [(0, 0)]))

    def test_theta_graph_is_not(self):
        g = ReductionGraph.from_pairs(2, [(0, 1)] * 3)
        assert not is_fibred_special(g)

    def test_doubled_edge_is(self):
        # contract one copy, the other becomes a loop
        g = ReductionGraph.from_pairs(2, [(0, 1), (0, 1)])
        assert is_fibred_special(g)

    def test_subdivided_theta_is_not(self):
        # contracting the valence-2 corners just rebuilds the triple edge
        g = ReductionGraph.from_pairs(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)])
        assert not is_fibred_special(g)

    def test_doubled_path_is(self):
        g = ReductionGraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (1, 2)])
        assert is_fibred_special(g)

    def test_certificate_replays(self):
        g = ReductionGraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (1, 2)])
        cert = reduction_certificate(g)
        assert cert is not None
        assert replay_certificate(g, cert)
        assert len(cert) == len(g.edges)

    def test_no_certificate_for_stuck_graph(self):
        g = ReductionGraph.from_pairs(2, [(0, 1)] * 3)
        assert reduction_certificate(g) is None


class TestHomogeneous:
    def test_all_pieces_fibred(self):
        pieces = [ReductionGraph.from_pairs(1, [(0, 0)]),
                  ReductionGraph.from_pairs(1, [(0, 0), (0, 0)])]
        assert is_fibred_homogeneous(pieces)

    def test_one_piece_fails(self):
        pieces = [ReductionGraph.from_pairs(1, [(0, 0)]),
                  ReductionGraph.from_pairs(2, [(0, 1)] * 3)]
        assert not is_fibred_homogeneous(pieces)

    def test_empty_rejected(self):
        with pytest.raises(InputError):
            is_fibred_homogeneous([])


class TestCanonicalForm:
    def test_invariant_under_relabelling(self):
        rng = random.Random(17)
        for _ in range(60):
            g = random_connected_multigraph(rng)
            verts = sorted(g.vertices)
            perm = list(verts)
            rng.shuffle(perm)
            relabel = dict(zip(verts, perm))
            h = ReductionGraph.from_pairs(
                g.vertices, [(relabel[u], relabel[v]) for u, v in g.edges])
            assert canonical_form(g) == canonical_form(h)

    def test_distinguishes_loop_count(self):
        a = ReductionGraph.from_pairs(1, [(0, 0)])
        b = ReductionGraph.from_pairs(1, [(0, 0), (0, 0)])
        assert canonical_form(a) != canonical_form(b)

    def test_small_non_isomorphic_graphs_differ(self):
        path = ReductionGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3)])
        star = ReductionGraph.from_pairs(4, [(0, 1), (0, 2), (0, 3)])
        assert canonical_form(path) != canonical_form(star)


class TestGreedyAgreement:
    def test_search_confirms_every_greedy_success(self):
        rng = random.Random(99)
        greedy_hits = 0
        for _ in range(120):
            g = random_connected_multigraph(rng)
            greedy_any = any(greedy_reduces(g, random.Random(seed))
                             for seed in range(50))
            if greedy_any:
                greedy_hits += 1
                assert is_fibred_special(g)
        assert greedy_hits > 10, "corpus should contain reducible graphs"

    def test_backtracking_beats_single_greedy_order(self):
        # reducibility may need the right move order; the search finds it
        rng = random.Random(1)
        seen_greedy_miss = False
        for _ in range(300):
            g = random_connected_multigraph(rng)
            if is_fibred_special(g) and not greedy_reduces(g, random.Random(0)):
                seen_greedy_miss = True
                break
        # a miss is not guaranteed, but when it happens the search must win
        # (the assertion above already covered correctness); record outcome
        print(f"single-order greedy missed a reducible graph: {seen_greedy_miss}")
