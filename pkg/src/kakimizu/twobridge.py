"""The band-chain calculus for minimal genus Seifert surfaces of 2-bridge knots.

A 2-bridge knot with all-even continued fraction [e_1, ..., e_n] spans
surfaces built from n twisted bands B_{e_1}, ..., B_{e_n} plumbed in a row
along n-1 disks.  Each plumbing disk is either inner (0) or outer (1), so a
surface is a 0/1 tuple of length n-1.  A band with |e| = 2 is a Hopf band;
moves at Hopf bands identify tuples that name isotopic surfaces, and the
identification classes are the vertices of the Kakimizu complex.

Applying a component band B_k flips the plumbing bits of the disks next to
it; an interior band applies only when its two flanking bits agree.  A full
pass that applies every band exactly once returns to the starting surface,
and the set of vertices such a pass visits spans a maximal simplex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import rational
from .complexes import SimplicialComplex, is_connected, is_flag
from .errors import InputError, MoveError, SizeLimitError

SurfaceTuple = tuple  # of 0/1 ints, one per plumbing disk

DEFAULT_MAX_BANDS = 12


@dataclass(frozen=True)
class BandChain:
    """A row of evenly twisted bands, plumbed along n-1 disks."""

    bands: tuple

    def __post_init__(self) -> None:
        if not self.bands:
            raise InputError("a band chain needs at least one band")
        for e in self.bands:
            if not isinstance(e, int) or e % 2 != 0 or abs(e) < 2:
                raise InputError(f"bands must be even with at least one full twist, got {e!r}")

    @property
    def n(self) -> int:
        return len(self.bands)

    @property
    def disks(self) -> int:
        return len(self.bands) - 1

    def is_hopf(self, k: int) -> bool:
        """Band k (1-indexed) is a Hopf band exactly when |e_k| = 2."""
        return abs(self.bands[k - 1]) == 2

    def hopf_positions(self) -> tuple:
        return tuple(k for k in range(1, self.n + 1) if self.is_hopf(k))

    @classmethod
    def from_fraction(cls, f: Fraction) -> "BandChain":
        """Chain of a 2-bridge index, raw (shifted first) or already shifted."""
        return cls(rational.expand_index(f))

    @classmethod
    def parse(cls, text: str) -> "BandChain":
        """Accept either a fraction ``p/q`` or a band list ``[e1,e2,...]``."""
        text = text.strip()
        if text.startswith("["):
            return cls(rational.parse_cfe(text))
        return cls.from_fraction(rational.parse_fraction(text))


def band_chain(cfe) -> BandChain:
    """Wrap an all-even continued fraction as a chain of twisted bands."""
    return BandChain(tuple(cfe))


def flanking_disks(chain: BandChain, k: int) -> tuple:
    """The 1-indexed plumbing disks next to band k (one or two of them).

    Band k sits between disks k-1 and k; the first and last bands touch a
    single disk, and a one-band chain touches none.
    """
    if not 1 <= k <= chain.n:
        raise InputError(f"band index {k} out of range 1..{chain.n}")
    return tuple(d for d in (k - 1, k) if 1 <= d <= chain.disks)


def _check_tuple(chain: BandChain, t) -> SurfaceTuple:
    t = tuple(t)
    if len(t) != chain.disks or any(b not in (0, 1) for b in t):
        raise InputError(f"surface tuple must be {chain.disks} bits, got {t!r}")
    return t


def is_applicable(chain: BandChain, t, k: int) -> bool:
    """Whether component band k may be applied to the surface t.

    End bands apply at any time.  An interior band applies only when the two
    disks flanking it carry equal plumbing bits.
    """
    t = _check_tuple(chain, t)
    disks = flanking_disks(chain, k)
    if len(disks) < 2:
        return True
    return t[disks[0] - 1] == t[disks[1] - 1]


def apply_band(chain: BandChain, t, k: int) -> SurfaceTuple:
    """Apply band k: flip the plumbing bit of every disk flanking it."""
    t = _check_tuple(chain, t)
    if not is_applicable(chain, t, k):
        raise MoveError(f"band {k} not applicable at {t}")
    bits = list(t)
    for d in flanking_disks(chain, k):
        bits[d - 1] ^= 1
    return tuple(bits)


def all_surface_tuples(chain: BandChain):
    return product((0, 1), repeat=chain.disks)


@dataclass(frozen=True)
class IsotopyOrbit:
    """A class of surface tuples identified by Hopf-band moves."""

    label: tuple
    members: frozenset

    def __post_init__(self) -> None:
        if self.label not in self.members:
            raise InputError("orbit label must be a member")
        if self.label != min(self.members):
            raise InputError("orbit label must be the lexicographic minimum")


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def hopf_orbits(chain: BandChain) -> tuple:
    """Partition all surface tuples into isotopy orbits.

    Only moves at Hopf bands identify surfaces; interior Hopf moves are
    conditional on their flanking bits being equal, exactly as in
    :func:`is_applicable`.  Orbits are returned sorted by label.
    """
    tuples = list(all_surface_tuples(chain))
    uf = _UnionFind(tuples)
    hopf = chain.hopf_positions()
    for t in tuples:
        for k in hopf:
            if is_applicable(chain, t, k):
                uf.union(t, apply_band(chain, t, k))
    groups: dict = {}
    for t in tuples:
        groups.setdefault(uf.find(t), set()).add(t)
    orbits = [IsotopyOrbit(min(g), frozenset(g)) for g in groups.values()]
    return tuple(sorted(orbits, key=lambda o: o.label))


def _orbit_label_map(orbits) -> dict:
    lab = {}
    for o in orbits:
        for t in o.members:
            lab[t] = o.label
    return lab


def maximal_cycles(chain: BandChain, start) -> frozenset:
    """Orbit sets visited by full passes of the n band moves from `start`.

    A full pass applies each band exactly once, every move applicable when
    its turn arrives; any such pass flips each disk bit twice and therefore
    ends back at `start`.  Returns the collection of visited-orbit sets,
    one frozenset of orbit labels per distinct pass outcome (empty when no
    ordering is fully applicable).
    """
    start = _check_tuple(chain, start)
    label_of = _orbit_label_map(hopf_orbits(chain))
    return _cycles_from(chain, start, label_of)


def _cycles_from(chain: BandChain, start, label_of) -> frozenset:
    n = chain.n
    results = set()

    def walk(t, remaining, visited):
        if not remaining:
            assert t == start, "a full pass must return to its starting surface"
            results.add(frozenset(visited))
            return
        for k in remaining:
            if is_applicable(chain, t, k):
                t2 = apply_band(chain, t, k)
                walk(t2, remaining - {k}, visited | {label_of[t2]})

    walk(start, frozenset(range(1, n + 1)), frozenset({label_of[start]}))
    return frozenset(results)


def build_complex(chain: BandChain, max_bands: int = DEFAULT_MAX_BANDS) -> SimplicialComplex:
    """The Kakimizu complex of the chain.

    Vertices are the Hopf orbits, labelled by their minimal member; maximal
    simplices are the inclusion-maximal visited-orbit sets over all starting
    surfaces and all fully applicable orderings.
    """
    if chain.n > max_bands:
        raise SizeLimitError(f"chain has {chain.n} bands, limit is {max_bands}")
    orbits = hopf_orbits(chain)
    label_of = _orbit_label_map(orbits)
    simplices = set()
    for start in all_surface_tuples(chain):
        simplices |= _cycles_from(chain, start, label_of)
    simplices |= {frozenset([o.label]) for o in orbits}
    complex_ = SimplicialComplex.from_maximal(simplices)
    assert is_connected(complex_), "Kakimizu complex of a 2-bridge knot must be connected"
    assert is_flag(complex_), "Kakimizu complex must be a flag complex"
    return complex_


def complex_from_fraction(f: Fraction, max_bands: int = DEFAULT_MAX_BANDS) -> SimplicialComplex:
    return build_complex(BandChain.from_fraction(f), max_bands=max_bands)
