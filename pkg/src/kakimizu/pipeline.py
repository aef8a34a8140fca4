"""Knot-table ingestion and the rule-driven Kakimizu classifier.

Each knot record names its algorithm class and the parameters that class
needs:

``fibred``
    no parameters; fibred links span a unique surface, the complex is a
    point.
``two_bridge``
    a fraction ``p/q`` or a literal band list ``[e1,e2,...]``; handled by
    the continued-fraction and band-chain machinery.
``special_alternating``
    a graph file (resolved next to the table); handled by the theta-graph
    machinery.
``unique_base_plus_fibred``
    flags ``base_unique=<0|1>;fibred_summands=<k>``; deplumbing the fibred
    summands one at a time gives a bijection onto the surfaces of the base,
    so a unique base forces a point.
``plumbing_unique_pair``
    product-disk flags ``A1=..;A1p=..;A2=..;A2p=..`` feeding the plumbing
    theorem: no disks gives the edge S - S^c, a disk at A1 gives the path
    S^c - S - T^c.
``table_expected``
    a shape literal; the complex is taken from the record (used where the
    published derivation is a prose proof, not an algorithm).

Records run independently; one bad row never aborts a batch.  Reports are
canonical JSON, byte-identical across runs.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass
from pathlib import Path

from . import thetagraph, twobridge
from .complexes import ComplexShape, SimplicialComplex, is_connected, is_flag, label_text, recognize
from .errors import InputError, KakimizuError
from .twobridge import DEFAULT_MAX_BANDS

KNOT_CLASSES = (
    "fibred",
    "two_bridge",
    "special_alternating",
    "unique_base_plus_fibred",
    "plumbing_unique_pair",
    "table_expected",
)


@dataclass(frozen=True)
class MarkingFlags:
    """Which marked product disks exist in the plumbing theorem's setting."""

    product_disk_a1: bool = False
    product_disk_a1_prime: bool = False
    product_disk_a2: bool = False
    product_disk_a2_prime: bool = False

    @classmethod
    def parse(cls, text: str) -> "MarkingFlags":
        fields = {"A1": False, "A1p": False, "A2": False, "A2p": False}
        for item in text.split(";"):
            item = item.strip()
            if not item:
                continue
            key, _, value = item.partition("=")
            if key not in fields or value not in ("0", "1"):
                raise InputError(f"bad marking flag {item!r}")
            fields[key] = value == "1"
        return cls(fields["A1"], fields["A1p"], fields["A2"], fields["A2p"])


@dataclass(frozen=True)
class KnotRecord:
    name: str
    klass: str
    params: str
    expected: ComplexShape | None = None
    base_dir: Path | None = None

    def __post_init__(self) -> None:
        if self.klass not in KNOT_CLASSES:
            raise InputError(f"unknown knot class {self.klass!r}")


@dataclass
class ResultRecord:
    name: str
    computed: SimplicialComplex | None
    shape: ComplexShape | None
    matched_expected: bool | None
    runtime: float
    error: str | None = None


def strip_fibred_summands(base_unique: bool, summand_count: int):
    """Deplumb fibred summands from a unique-surface base.

    Each deplumbing is a product decomposition inducing a bijection of
    surface sets, so the complex equals the base's: a point.  Returns the
    point complex together with the audit trail of bijection steps.
    """
    if not base_unique:
        raise InputError("base must span a unique surface")
    if summand_count < 0:
        raise InputError("summand count cannot be negative")
    trail = []
    for k in range(summand_count, 0, -1):
        trail.append(
            f"deplumb fibred summand {k}: surface sets of the sum and of the "
            f"remaining base with {k - 1} summands are in bijection")
    trail.append("base spans a unique surface, so the complex is a single vertex")
    return ComplexShape.point().as_complex(), trail


def plumbing_theorem_complex(flags: MarkingFlags) -> SimplicialComplex:
    """Complex of a plumbing of two unique-surface, non-fibred pieces.

    With no product disk at any marking, the surface and its dual are the
    only classes (an edge).  With a product disk at A1 only, the dual of the
    re-plumbed surface joins in (a path of three).  Other flag combinations
    fall outside the theorem.
    """
    none_set = not (flags.product_disk_a1 or flags.product_disk_a1_prime
                    or flags.product_disk_a2 or flags.product_disk_a2_prime)
    if none_set:
        return SimplicialComplex.from_maximal([["[S]", "[S^c]"]])
    only_a1 = (flags.product_disk_a1 and not flags.product_disk_a1_prime
               and not flags.product_disk_a2 and not flags.product_disk_a2_prime)
    if only_a1:
        return SimplicialComplex.from_maximal([["[S^c]", "[S]"], ["[S]", "[T^c]"]])
    raise InputError(f"flag combination outside the plumbing theorem: {flags}")


def _unique_base_params(params: str):
    fields = {"base_unique": None, "fibred_summands": None}
    for item in params.split(";"):
        item = item.strip()
        if not item:
            continue
        key, _, value = item.partition("=")
        if key not in fields:
            raise InputError(f"unknown field {key!r} in {params!r}")
        fields[key] = value
    if fields["base_unique"] not in ("0", "1"):
        raise InputError("base_unique must be 0 or 1")
    try:
        count = int(fields["fibred_summands"] or "")
    except ValueError as exc:
        raise InputError("fibred_summands must be an integer") from exc
    return fields["base_unique"] == "1", count


def classify_and_compute(rec: KnotRecord,
                         max_bands: int = DEFAULT_MAX_BANDS,
                         max_vertices: int = thetagraph.DEFAULT_MAX_VERTICES) -> SimplicialComplex:
    """Dispatch a record to its algorithm and return the complex."""
    if rec.klass == "fibred":
        return ComplexShape.point().as_complex()
    if rec.klass == "two_bridge":
        return twobridge.build_complex(twobridge.BandChain.parse(rec.params),
                                       max_bands=max_bands)
    if rec.klass == "special_alternating":
        path = Path(rec.params)
        if not path.is_absolute() and rec.base_dir is not None:
            path = rec.base_dir / path
        tg = load_theta_file(path)
        return thetagraph.build_complex(tg, tg.weights(), max_vertices=max_vertices)
    if rec.klass == "unique_base_plus_fibred":
        base_unique, count = _unique_base_params(rec.params)
        complex_, _ = strip_fibred_summands(base_unique, count)
        return complex_
    if rec.klass == "plumbing_unique_pair":
        return plumbing_theorem_complex(MarkingFlags.parse(rec.params))
    if rec.klass == "table_expected":
        return ComplexShape.parse(rec.params).as_complex()
    raise InputError(f"unknown knot class {rec.klass!r}")


def load_theta_file(path) -> thetagraph.ThetaGraph:
    """Load a graph file; weight-1 graphs run the full theta construction.

    A file whose weights are all 1 is a raw Seifert graph and passes through
    bigon reduction, zero-edge insertion and theta restriction.  Any other
    file must already be a valid theta graph.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read graph file {path}: {exc}") from exc
    g = thetagraph.PlanarMultigraph.from_text(text)
    if all(e.weight == 1 for e in g.edges.values()):
        return thetagraph.build_theta(g)
    return thetagraph.ThetaGraph(g.vertices, g.edges, g.rotation)


def load_table(path) -> list:
    """Read a CSV knot table with columns name,class,params,expected."""
    path = Path(path)
    records = []
    names = set()
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read table {path}: {exc}") from exc
    reader = csv.reader(lines)
    for lineno, row in enumerate(reader, start=1):
        if not row or (row[0].startswith("#")):
            continue
        if lineno == 1 and [c.strip() for c in row] == ["name", "class", "params", "expected"]:
            continue
        if len(row) != 4:
            raise InputError(f"{path}:{lineno}: expected 4 columns, got {len(row)}")
        name, klass, params, expected = (c.strip() for c in row)
        if name in names:
            raise InputError(f"{path}:{lineno}: duplicate knot name {name!r}")
        names.add(name)
        try:
            shape = ComplexShape.parse(expected) if expected else None
            records.append(KnotRecord(name, klass, params, shape, base_dir=path.parent))
        except InputError as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from exc
    return records


def run_batch(records, max_bands: int = DEFAULT_MAX_BANDS,
              max_vertices: int = thetagraph.DEFAULT_MAX_VERTICES) -> list:
    """Compute every record, never aborting the batch on one failure."""
    results = []
    for rec in records:
        began = time.perf_counter()
        try:
            complex_ = classify_and_compute(rec, max_bands=max_bands, max_vertices=max_vertices)
            assert is_connected(complex_) and is_flag(complex_)
            shape = recognize(complex_)
            matched = shape.equivalent(rec.expected) if rec.expected is not None else None
            results.append(ResultRecord(rec.name, complex_, shape, matched,
                                        time.perf_counter() - began))
        except (KakimizuError, AssertionError) as exc:
            results.append(ResultRecord(rec.name, None, None, None,
                                        time.perf_counter() - began, error=str(exc)))
    return results


def report_payload(results) -> dict:
    """The canonical report object: stable fields only, sorted by name."""
    rows = []
    for r in sorted(results, key=lambda r: r.name):
        row = {
            "name": r.name,
            "shape": str(r.shape) if r.shape is not None else None,
            "matched_expected": r.matched_expected,
            "error": r.error,
        }
        if r.computed is not None:
            row["vertices"] = [label_text(v) for v in r.computed.sorted_vertices()]
            row["maximal_simplices"] = sorted(
                sorted(label_text(v) for v in s) for s in r.computed.simplices)
        rows.append(row)
    return {
        "results": rows,
        "totals": {
            "records": len(results),
            "errors": sum(1 for r in results if r.error is not None),
            "matched": sum(1 for r in results if r.matched_expected is True),
            "mismatched": sum(1 for r in results if r.matched_expected is False),
        },
    }


def write_report(results, path) -> None:
    """Write the canonical JSON report (no timestamps, no runtimes)."""
    Path(path).write_text(json.dumps(report_payload(results), indent=2, sort_keys=True) + "\n")


def summary_table(results) -> str:
    """Human-readable batch summary, one line per knot."""
    width = max((len(r.name) for r in results), default=4)
    lines = [f"{'name':<{width}}  {'shape':<22} match  time"]
    for r in sorted(results, key=lambda r: r.name):
        if r.error is not None:
            status, shape = "ERR", r.error[:40]
        else:
            shape = str(r.shape)
            status = {True: "yes", False: "NO", None: "-"}[r.matched_expected]
        lines.append(f"{r.name:<{width}}  {shape:<22} {status:<5}  {r.runtime:.3f}s")
    return "\n".join(lines)
