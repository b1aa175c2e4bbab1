"""Command line front end.

Subcommands:
  theta    write a multi-theta graph file
  analyze  run the full pipeline on a graph and print a report
  oracle   cross-check the two vertex enumeration algorithms
  batch    analyze a range of multi-theta graphs as a table

Exit codes: 0 success, 1 usage, 2 invalid input, 3 internal
contradiction (two routes that must agree disagreed).

Reports are exact: every fraction is serialized as "p/q" (or "p" when
integral), the JSON field order is fixed, and a report parsed back from
its JSON form compares equal to the original.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .graph_core import (
    GraphError,
    TrivalentGraph,
    multi_theta,
    parse_graph,
    serialize_graph,
)
from .lattice_fan import (
    ConsistencyError,
    apply_loop_free_guard,
    build_lattice,
    delzant_check,
)
from .polytope import (
    HPolytope,
    VPolytope,
    build_hrep,
    brute_force_vertices,
    cube_vertex_labellings,
    enumerate_vertices,
    facet_defining_rows,
    format_hrep,
    format_vrep,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_CONTRADICTION = 3

# brute_force_vertices is exponential in the row count; past this ambient
# dimension the cross-check is refused rather than left to crawl.
ORACLE_DIM_LIMIT = 9


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the pipeline learns about one graph.

    Vertex-dependent fields are None when enumeration was skipped.
    ``covolume`` and witnesses are exact rationals.
    """

    genus: int
    graph_vertices: int
    graph_edges: int
    loop_free: bool
    ambient_dim: int
    affine_dim: int | None
    facet_count: int | None
    vertex_count: int | None
    cube_vertex_count: int
    max_vertex_denominator: int | None
    covolume: Fraction
    simple: bool | None
    simple_witness: tuple[Fraction, ...] | None
    lattice_polytope: bool | None
    smooth: bool | None
    overall: str | None
    elapsed_ms: int

    def __post_init__(self):
        if self.overall == "SMOOTH" and not (self.simple and self.smooth):
            raise ValueError("SMOOTH verdict with failing sub-verdicts")

    def to_json(self) -> str:
        return json.dumps(
            {
                "graph": {
                    "genus": self.genus,
                    "vertices": self.graph_vertices,
                    "edges": self.graph_edges,
                    "loop_free": self.loop_free,
                },
                "polytope": {
                    "ambient_dim": self.ambient_dim,
                    "affine_dim": self.affine_dim,
                    "facet_count": self.facet_count,
                    "vertex_count": self.vertex_count,
                    "cube_vertex_count": self.cube_vertex_count,
                    "max_vertex_denominator": self.max_vertex_denominator,
                },
                "lattice": {"covolume": _frac_str(self.covolume)},
                "verdict": {
                    "simple": self.simple,
                    "simple_witness": _point_json(self.simple_witness),
                    "lattice_polytope": self.lattice_polytope,
                    "smooth": self.smooth,
                    "overall": self.overall,
                },
                "elapsed_ms": self.elapsed_ms,
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        d = json.loads(text)
        return cls(
            genus=d["graph"]["genus"],
            graph_vertices=d["graph"]["vertices"],
            graph_edges=d["graph"]["edges"],
            loop_free=d["graph"]["loop_free"],
            ambient_dim=d["polytope"]["ambient_dim"],
            affine_dim=d["polytope"]["affine_dim"],
            facet_count=d["polytope"]["facet_count"],
            vertex_count=d["polytope"]["vertex_count"],
            cube_vertex_count=d["polytope"]["cube_vertex_count"],
            max_vertex_denominator=d["polytope"]["max_vertex_denominator"],
            covolume=Fraction(d["lattice"]["covolume"]),
            simple=d["verdict"]["simple"],
            simple_witness=_point_from_json(d["verdict"]["simple_witness"]),
            lattice_polytope=d["verdict"]["lattice_polytope"],
            smooth=d["verdict"]["smooth"],
            overall=d["verdict"]["overall"],
            elapsed_ms=d["elapsed_ms"],
        )

    def render(self) -> str:
        def yn(flag):
            return "-" if flag is None else ("yes" if flag else "no")

        def num(x):
            return "-" if x is None else str(x)

        lines = [
            f"genus {self.genus}: {self.graph_vertices} vertices, "
            f"{self.graph_edges} edges, loop-free {yn(self.loop_free)}",
            f"ambient dimension {self.ambient_dim}, affine dimension {num(self.affine_dim)}",
            f"facets {num(self.facet_count)}, vertices {num(self.vertex_count)}, "
            f"cube vertices {self.cube_vertex_count}, "
            f"max vertex denominator {num(self.max_vertex_denominator)}",
            f"lattice covolume {_frac_str(self.covolume)}",
            f"simple {yn(self.simple)}"
            + (
                f" (witness {_point_str(self.simple_witness)})"
                if self.simple_witness is not None
                else ""
            )
            + f", lattice polytope {yn(self.lattice_polytope)}, smooth {yn(self.smooth)}",
            f"verdict: {self.overall if self.overall is not None else '-'}",
            f"elapsed: {self.elapsed_ms} ms",
        ]
        return "\n".join(lines) + "\n"


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _point_json(p):
    return None if p is None else [_frac_str(x) for x in p]


def _point_from_json(p):
    return None if p is None else tuple(Fraction(x) for x in p)


def _point_str(p) -> str:
    return "(" + ", ".join(_frac_str(x) for x in p) + ")"


@dataclass(frozen=True)
class AnalysisArtifacts:
    """Intermediate pipeline values kept around for exports and tests."""

    graph: TrivalentGraph
    hrep: HPolytope
    vpoly: VPolytope | None
    facet_rows: tuple[int, ...] | None


def analyze_graph(
    graph: TrivalentGraph, skip_vertex_enum: bool = False
) -> tuple[AnalysisReport, AnalysisArtifacts]:
    """Run the pipeline; raises ConsistencyError on a guard breach."""
    t0 = time.perf_counter()
    h = build_hrep(graph)
    labellings = cube_vertex_labellings(graph)
    lattice = build_lattice(graph)
    if skip_vertex_enum:
        v = facet_rows = None
        affine_dim = facet_count = vertex_count = max_denom = None
        simple = simple_witness = lattice_poly = smooth = overall = None
    else:
        v = enumerate_vertices(h)
        facet_rows = facet_defining_rows(h, v)
        verdict = delzant_check(h, v, lattice, facet_rows)
        apply_loop_free_guard(graph, verdict)
        affine_dim = v.dim
        facet_count = len(facet_rows)
        vertex_count = len(v.vertices)
        max_denom = max(
            (x.denominator for vert in v.vertices for x in vert), default=1
        )
        simple = verdict.simple
        simple_witness = verdict.simple_witness
        lattice_poly = verdict.lattice_polytope
        smooth = verdict.smooth
        overall = verdict.overall
    elapsed_ms = int((time.perf_counter() - t0) * 1000)
    report = AnalysisReport(
        genus=graph.genus,
        graph_vertices=graph.n_vertices,
        graph_edges=graph.n_edges,
        loop_free=graph.is_loop_free(),
        ambient_dim=h.dim,
        affine_dim=affine_dim,
        facet_count=facet_count,
        vertex_count=vertex_count,
        cube_vertex_count=len(labellings),
        max_vertex_denominator=max_denom,
        covolume=lattice.covolume,
        simple=simple,
        simple_witness=simple_witness,
        lattice_polytope=lattice_poly,
        smooth=smooth,
        overall=overall,
        elapsed_ms=elapsed_ms,
    )
    return report, AnalysisArtifacts(graph, h, v, facet_rows)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this project reserves 2 for
    invalid input data, so usage errors are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="graphtoric")
    sub = parser.add_subparsers(dest="command", required=True)

    p_theta = sub.add_parser("theta", help="write a multi-theta graph file")
    p_theta.add_argument("g", type=int, help="genus, at least 2")
    p_theta.add_argument("-o", "--output", help="output path (default stdout)")

    p_an = sub.add_parser("analyze", help="full pipeline on one graph")
    p_an.add_argument("graph", nargs="?", help="graph file path")
    p_an.add_argument("--theta", type=int, metavar="G", help="use the multi-theta graph")
    p_an.add_argument("--json", action="store_true", help="JSON report on stdout")
    p_an.add_argument("--export-hrep", metavar="PATH")
    p_an.add_argument("--export-vrep", metavar="PATH")
    p_an.add_argument("--skip-vertex-enum", action="store_true")

    p_or = sub.add_parser("oracle", help="cross-check vertex enumeration")
    p_or.add_argument("graph", nargs="?", help="graph file path")
    p_or.add_argument("--theta", type=int, metavar="G")

    p_b = sub.add_parser("batch", help="analyze a genus range of multi-theta graphs")
    p_b.add_argument("g_min", type=int)
    p_b.add_argument("g_max", type=int)
    p_b.add_argument("--json", action="store_true")
    return parser


def _load_graph(args, parser: _Parser) -> TrivalentGraph:
    if (args.graph is None) == (args.theta is None):
        parser.error("give exactly one of a graph file or --theta G")
    if args.theta is not None:
        if args.theta < 2:
            parser.error("--theta requires genus >= 2")
        return multi_theta(args.theta)
    with open(args.graph, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _cmd_theta(args, parser) -> int:
    if args.g < 2:
        parser.error("genus must be at least 2")
    text = serialize_graph(multi_theta(args.g))
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def _cmd_analyze(args, parser) -> int:
    if args.export_vrep and args.skip_vertex_enum:
        parser.error("--export-vrep needs vertex enumeration")
    graph = _load_graph(args, parser)
    report, artifacts = analyze_graph(graph, skip_vertex_enum=args.skip_vertex_enum)
    if args.export_hrep:
        with open(args.export_hrep, "w", encoding="utf-8") as fh:
            fh.write(format_hrep(artifacts.hrep))
    if args.export_vrep:
        with open(args.export_vrep, "w", encoding="utf-8") as fh:
            fh.write(format_vrep(artifacts.vpoly))
    sys.stdout.write(report.to_json() + "\n" if args.json else report.render())
    return EXIT_OK


def _cmd_oracle(args, parser) -> int:
    graph = _load_graph(args, parser)
    n = graph.n_edges
    if n > ORACLE_DIM_LIMIT:
        raise GraphError(
            f"oracle limited to ambient dimension {ORACLE_DIM_LIMIT}, got {n}"
        )
    h = build_hrep(graph)
    fast = enumerate_vertices(h)
    slow = brute_force_vertices(h)
    if fast.vertices != slow.vertices:
        raise ConsistencyError(
            f"vertex enumeration disagrees: {len(fast.vertices)} vs "
            f"{len(slow.vertices)} vertices"
        )
    print(f"oracle pass: {len(fast.vertices)} vertices agree")
    return EXIT_OK


def _cmd_batch(args, parser) -> int:
    if not 2 <= args.g_min <= args.g_max:
        parser.error("need 2 <= g_min <= g_max")
    failures = 0
    if not args.json:
        print("g  cube_vertices  2^g_ok  origin_facets  6g-6_ok  verdict")
    for g in range(args.g_min, args.g_max + 1):
        try:
            row = _batch_row(g)
        except Exception as exc:  # keep going; report the failed genus
            failures += 1
            if args.json:
                print(json.dumps({"g": g, "error": str(exc)}))
            else:
                print(f"{g}  error: {exc}", file=sys.stderr)
            continue
        if args.json:
            print(json.dumps(row))
        else:
            print(
                f"{row['g']}  {row['cube_vertex_count']:>13}  "
                f"{str(row['cube_count_ok']).lower():>6}  "
                f"{row['origin_facet_count']:>13}  "
                f"{str(row['origin_facet_ok']).lower() if row['origin_facet_ok'] is not None else '-':>7}  "
                f"{row['overall']}"
            )
    return EXIT_INPUT if failures else EXIT_OK


def _batch_row(g: int) -> dict:
    graph = multi_theta(g)
    h = build_hrep(graph)
    v = enumerate_vertices(h)
    facet_rows = set(facet_defining_rows(h, v))
    labellings = cube_vertex_labellings(graph)
    lattice = build_lattice(graph)
    verdict = delzant_check(h, v, lattice)
    apply_loop_free_guard(graph, verdict)
    origin = tuple(Fraction(0) for _ in range(h.dim))
    oi = v.vertices.index(origin)
    origin_facets = sum(1 for i in v.incidence[oi] if i in facet_rows)
    return {
        "g": g,
        "cube_vertex_count": len(labellings),
        "cube_count_ok": len(labellings) == 2**g,
        "origin_facet_count": origin_facets,
        # the 6g-6 count only holds from genus 3 up
        "origin_facet_ok": (origin_facets == 6 * g - 6) if g >= 3 else None,
        "overall": verdict.overall,
    }


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "theta": _cmd_theta,
        "analyze": _cmd_analyze,
        "oracle": _cmd_oracle,
        "batch": _cmd_batch,
    }[args.command]
    try:
        return handler(args, parser)
    except ConsistencyError as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
