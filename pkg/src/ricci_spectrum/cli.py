"""Command-line interface: edge-list ingestion and report emission.

Input files are UTF-8 edge lists, one edge per line as ``u v w`` (w
optional, default 1; '#' starts a comment; u == v makes a loop).  Vertex
labels may be arbitrary whitespace-free strings; they are mapped to dense
ids in order of first appearance and preserved in the reports.  Weights are
parsed exactly: integers, decimals ("0.25") or ratios ("1/4").

Commands: spectrum, curvature, neighborhood --t, bounds --t-max,
audit --t-max, report.  Output is a human table or canonical JSON
(--format json: sorted keys, rationals as "p/q" strings, floats with 15
significant digits) that is byte-identical across runs.

Exit codes: 0 ok, 2 parse/config error, 3 invalid graph, 4 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import __version__
from .bounds import (
    contraction_audit,
    curvature_transfer_check,
    joint_neighbor_bounds,
    k_scan,
    largest_upper,
    metric_audit,
    ollivier_lower,
)
from .curvature import (
    global_lower_bound,
    ricci_curvature,
    sharpness_case,
    unweighted_terms,
)
from .errors import (
    CertificateGapNonzero,
    NonPositiveWeight,
    ParseError,
    RicciSpectrumError,
)
from .graph import WeightedGraph, build_graph, is_bipartite, validate_connected
from .spectrum import spectrum, verify_transfer_identity
from .tolerances import TRANSFER_IDENTITY_TOL
from .walk import neighborhood_graph

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_GRAPH = 3
EXIT_INTERNAL = 4

COMMANDS = ("spectrum", "curvature", "neighborhood", "bounds", "audit", "report")


@dataclass(frozen=True)
class AnalysisConfig:
    input_path: str
    command: str
    t: int = 2
    t_max: int = 6
    arithmetic: str = "exact"  # "exact" | "float": how rationals are rendered
    output_format: str = "table"  # "table" | "json"
    tolerance: float = TRANSFER_IDENTITY_TOL

    def validate(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.t < 1:
            raise ValueError("--t must be >= 1")
        if not 1 <= self.t_max <= 64:
            raise ValueError("--t-max must lie in 1..64")
        if self.tolerance <= 0:
            raise ValueError("--tolerance must be positive")
        if self.arithmetic not in ("exact", "float"):
            raise ValueError(f"unknown arithmetic mode {self.arithmetic!r}")
        if self.output_format not in ("table", "json"):
            raise ValueError(f"unknown format {self.output_format!r}")


@dataclass
class Report:
    summary: dict
    sections: dict = field(default_factory=dict)
    version: str = __version__
    config: dict = field(default_factory=dict)


def parse_edge_list(text: str):
    """Parse an edge-list document into (WeightedGraph, label table)."""
    labels: dict = {}
    order: list = []

    def vertex_id(token: str) -> int:
        if token not in labels:
            labels[token] = len(labels)
            order.append(token)
        return labels[token]

    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(line_no, f"expected 'u v [w]', got {raw.strip()!r}")
        u, v = vertex_id(parts[0]), vertex_id(parts[1])
        if len(parts) == 3:
            try:
                w = Fraction(parts[2])
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(line_no, f"bad weight {parts[2]!r}: {exc}") from exc
        else:
            w = Fraction(1)
        if w <= 0:
            # same class build_graph would raise, with the line attached
            raise NonPositiveWeight(f"line {line_no}: non-positive weight {w}")
        edges.append((u, v, w))
    graph = build_graph(edges)
    return graph, tuple(order)


def format_edge_list(g: WeightedGraph, labels) -> str:
    """Render a graph in the input dialect (exact weights, sorted edges)."""
    lines = [f"{labels[u]} {labels[v]} {w}" for u, v, w in g.edges()]
    return "\n".join(lines) + "\n"


# -- canonical serialization ---------------------------------------------------


def _canonical(value, arithmetic: str):
    if isinstance(value, Fraction):
        return str(value) if arithmetic == "exact" else float(f"{float(value):.15g}")
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return float(f"{value:.15g}")
    if isinstance(value, dict):
        return {str(k): _canonical(v, arithmetic) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_canonical(v, arithmetic) for v in value]
    if hasattr(value, "__dataclass_fields__"):
        return {
            name: _canonical(getattr(value, name), arithmetic)
            for name in value.__dataclass_fields__
        }
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    return value


def report_to_json(report: Report, arithmetic: str) -> str:
    payload = {
        "summary": _canonical(report.summary, arithmetic),
        "sections": _canonical(report.sections, arithmetic),
        "version": report.version,
        "config": _canonical(report.config, arithmetic),
    }
    return json.dumps(payload, sort_keys=True, indent=2)


def _walk_lines(value, indent=0, key=None):
    pad = "  " * indent
    head = f"{pad}{key}: " if key is not None else pad
    if isinstance(value, dict):
        lines = [f"{pad}{key}:"] if key is not None else []
        for k, v in value.items():
            lines.extend(_walk_lines(v, indent + 1, k))
        return lines
    if isinstance(value, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            return [head + " ".join(str(v) for v in value)]
        lines = [f"{pad}{key}:"] if key is not None else []
        for v in value:
            lines.extend(_walk_lines(v, indent + 1, "-"))
        return lines
    return [head + str(value)]


def report_to_table(report: Report, arithmetic: str) -> str:
    body = {
        "summary": _canonical(report.summary, arithmetic),
        **_canonical(report.sections, arithmetic),
    }
    return "\n".join(_walk_lines(body)) + "\n"


# -- sections -------------------------------------------------------------------


def _summary(g: WeightedGraph, labels) -> dict:
    bipartite, _ = is_bipartite(g)
    return {
        "vertices": g.n_vertices,
        "edges": g.edge_count(),
        "loops": g.loop_count(),
        "connected": True,
        "bipartite": bipartite,
        "labels": list(labels),
    }


def _spectrum_section(g: WeightedGraph) -> dict:
    spec = spectrum(g)
    return {
        "eigenvalues": [float(v) for v in spec.eigenvalues],
        "lambda_1": spec.lambda_1 if g.n_vertices > 1 else 0.0,
        "lambda_max": spec.lambda_max,
    }


def _curvature_section(g: WeightedGraph, labels) -> dict:
    per_edge = []
    for u, v, _ in g.edges():
        if u == v:
            continue
        value = ricci_curvature(g, u, v)
        case = sharpness_case(g, u, v)
        entry = {
            "edge": [labels[u], labels[v]],
            "kappa": value.kappa,
            "w1": value.w1,
            "lower_formula": case.lower_k,
            "upper_formula": case.upper,
            "case": case.case,
            "conditions_hold": case.conditions_hold,
            "equality": case.equality,
        }
        terms = unweighted_terms(g, u, v)
        if terms is not None:
            entry["triangles"] = terms["triangles"]
            entry["loops"] = [terms["loop_x"], terms["loop_y"]]
        per_edge.append(entry)
    return {
        "edges": per_edge,
        "k_exact": global_lower_bound(g, "exact"),
        "k_formula": global_lower_bound(g, "formula"),
    }


def _bounds_section(g: WeightedGraph, t_max: int) -> dict:
    table = k_scan(g, t_max)
    return {
        "spectral_gap": ollivier_lower(g),
        "largest_eigenvalue": largest_upper(g),
        "joint_neighbors": joint_neighbor_bounds(g),
        "k_scan": {
            "rows": list(table.rows),
            "best_lower_t": table.best_lower_t,
            "best_upper_t": table.best_upper_t,
        },
    }


def _audit_section(g: WeightedGraph, t_max: int, tolerance: float) -> dict:
    contraction = contraction_audit(g, min(t_max, 4))
    metric = [metric_audit(g, t) for t in range(1, t_max + 1)]
    transfer = [curvature_transfer_check(g, t) for t in range(1, t_max + 1)]
    identity = {
        t: verify_transfer_identity(g, t) for t in range(1, t_max + 1)
    }
    ok = (
        contraction.passed
        and all(m.lower_holds and m.upper_holds is not False for m in metric)
        and all(c.passed is not False for c in transfer)
        and all(dev <= tolerance for dev in identity.values())
    )
    return {
        "contraction": contraction,
        "metric": metric,
        "curvature_transfer": transfer,
        "transfer_identity_deviation": {str(t): dev for t, dev in identity.items()},
        "all_passed": ok,
    }


def run(config: AnalysisConfig) -> Report:
    """Execute one command against an edge-list file."""
    config.validate()
    with open(config.input_path, "r", encoding="utf-8") as fh:
        text = fh.read()
    g, labels = parse_edge_list(text)
    if not validate_connected(g):
        raise RicciSpectrumError("input graph is not connected")

    report = Report(
        summary=_summary(g, labels),
        config={
            "command": config.command,
            "input": config.input_path,
            "t": config.t,
            "t_max": config.t_max,
            "arithmetic": config.arithmetic,
            "tolerance": config.tolerance,
        },
    )
    cmd = config.command
    if cmd == "spectrum":
        report.sections["spectrum"] = _spectrum_section(g)
    elif cmd == "curvature":
        report.sections["curvature"] = _curvature_section(g, labels)
    elif cmd == "neighborhood":
        gt = neighborhood_graph(g, config.t)
        report.sections["neighborhood"] = {
            "t": config.t,
            "edge_list": format_edge_list(gt, labels),
        }
    elif cmd == "bounds":
        report.sections["bounds"] = _bounds_section(g, config.t_max)
    elif cmd == "audit":
        section = _audit_section(g, config.t_max, config.tolerance)
        report.sections["audit"] = section
        if not section["all_passed"]:
            raise CertificateGapNonzero("an exact audit failed; see the audit section")
    elif cmd == "report":
        report.sections["spectrum"] = _spectrum_section(g)
        report.sections["curvature"] = _curvature_section(g, labels)
        report.sections["bounds"] = _bounds_section(g, config.t_max)
        report.sections["audit"] = _audit_section(g, config.t_max, config.tolerance)
    return report


def render(report: Report, config: AnalysisConfig) -> str:
    if config.output_format == "json":
        return report_to_json(report, config.arithmetic)
    if config.command == "neighborhood":
        # the edge-list dialect, re-ingestible as-is
        return report.sections["neighborhood"]["edge_list"]
    return report_to_table(report, config.arithmetic)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ricci-spectrum",
        description="Exact curvature, walk graphs, spectra and eigenvalue bounds "
        "for weighted graphs with loops.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", help="edge-list file ('u v w' lines)")
    parser.add_argument("--t", type=int, default=2, help="walk length (neighborhood)")
    parser.add_argument("--t-max", type=int, default=6, dest="t_max",
                        help="largest walk length for scans and audits")
    parser.add_argument("--format", choices=("table", "json"), default="table")
    arith = parser.add_mutually_exclusive_group()
    arith.add_argument("--exact", dest="arithmetic", action="store_const",
                       const="exact", help="render rationals as p/q (default)")
    arith.add_argument("--float", dest="arithmetic", action="store_const",
                       const="float", help="render rationals as floats")
    parser.set_defaults(arithmetic="exact")
    parser.add_argument("--tolerance", type=float, default=TRANSFER_IDENTITY_TOL,
                        help="audit tolerance for float identities")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    config = AnalysisConfig(
        input_path=args.input,
        command=args.command,
        t=args.t,
        t_max=args.t_max,
        arithmetic=args.arithmetic,
        output_format=args.format,
        tolerance=args.tolerance,
    )
    try:
        config.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        report = run(config)
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CertificateGapNonzero as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (RicciSpectrumError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GRAPH
    sys.stdout.write(render(report, config))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
