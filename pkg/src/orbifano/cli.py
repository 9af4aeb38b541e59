from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from orbifano.config import Settings
from orbifano.errors import InputError, NoFamily, OrbifanoError
from orbifano.formats import json_format
from orbifano.formats.base import FormatError
from orbifano.intersection.ci import ci_degree
from orbifano.invariants.formulas import invariants_of, poincare_series
from orbifano.invariants.sieve import candidate_sieve
from orbifano.io.registry import default_registry, load_registry
from orbifano.io.weightfile import parse_bundle_file, parse_omega, parse_weight_file
from orbifano.logging_setup import configure_logging
from orbifano.mmp.curation import roots_for_k
from orbifano.mmp.theorem import tree_for
from orbifano.mmp.tree import render_tree_text, tree_to_json
from orbifano.polygon.families import match_family
from orbifano.polygon.fano import (
    FanoPolygon,
    degree_via_formula,
    face_fan,
    parse_vertices,
    singularity_content,
    toric_degree,
)
from orbifano.polygon.svg import render_polygon_svg
from orbifano.schemas.registry import Registry, format_rational
from orbifano.toric.chambers import charts, fan_from_chamber, irrelevant_ideal, nef_cone
from orbifano.toric.weights import adjoint_class
from orbifano.verify.runner import SUITES, report_json, summarize, verify_all


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--registry", type=Path, default=argparse.SUPPRESS,
                        help="registry JSON file instead of the embedded one")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        type=str.upper, default=argparse.SUPPRESS)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="orbifano",
        description="Exact checks for del Pezzo surfaces with 1/3(1,1) points",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run the verification suites")
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.add_argument("--json", type=Path, dest="json_out", help="write the report to this file")
    p.add_argument("--progress", action="store_true", default=None)

    p = sub.add_parser("polygon", parents=[common], help="analyze or draw a Fano polygon")
    p.add_argument("action", choices=["analyze", "render"])
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--id", type=int, dest="polygon_id")
    which.add_argument("--vertices", type=str)
    p.add_argument("--out", type=Path)
    p.add_argument("--scale", type=int)

    p = sub.add_parser("toric", parents=[common], help="GIT data of a weight matrix")
    p.add_argument("action", choices=["nef", "charts", "irrelevant", "fan"])
    p.add_argument("--weights", type=Path, required=True)
    p.add_argument("--omega", type=str)

    p = sub.add_parser("degree", parents=[common], help="K^2 of a complete intersection")
    p.add_argument("--weights", type=Path, required=True)
    p.add_argument("--bundles", type=Path)
    p.add_argument("--omega", type=str)

    p = sub.add_parser("mmp", parents=[common], help="directed MMP trees")
    p.add_argument("action", choices=["tree"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["raw", "curated"])
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("candidates", parents=[common], help="the (k, K^2) sieve")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("info", parents=[common], help="a family record with computed invariants")
    p.add_argument("name")
    return parser


def _settings(args: argparse.Namespace) -> Settings:
    overrides: Dict[str, Any] = {}
    if getattr(args, "registry", None) is not None:
        overrides["registry_path"] = args.registry
    if getattr(args, "log_level", None) is not None:
        overrides["log_level"] = args.log_level
    if getattr(args, "progress", None):
        overrides["progress"] = True
    if getattr(args, "mode", None):
        overrides["mmp_mode"] = args.mode
    if getattr(args, "scale", None):
        overrides["svg_scale"] = args.scale
    try:
        return Settings(**overrides)
    except ValidationError as exc:
        raise InputError(f"invalid setting: {exc.errors()[0]['msg']}") from exc


def _registry(settings: Settings) -> Registry:
    if settings.registry_path is not None:
        return load_registry(settings.registry_path)
    return default_registry()


def _polygon(args: argparse.Namespace, reg: Registry) -> FanoPolygon:
    if args.vertices is not None:
        return parse_vertices(args.vertices)
    try:
        return FanoPolygon.of(reg.polygon(args.polygon_id).vertices)
    except KeyError:
        raise InputError(f"no polygon with id {args.polygon_id}") from None


def _omega(text: Optional[str], default: Sequence[int]) -> Sequence[int]:
    return parse_omega(text) if text else tuple(default)


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    entries = verify_all(args.suite, _registry(settings), progress=settings.progress)
    if args.json_out is not None:
        args.json_out.write_text(report_json(entries) + "\n", encoding="utf-8")
    counts = summarize(entries)
    for e in entries:
        if e.failed:
            print(f"FAIL {e.id} [{e.citation}]: expected {e.expected}, computed {e.computed}")
    print(
        f"{len(entries)} checks: {counts['pass']} passed, {counts['fail']} failed, "
        f"{counts['skipped-with-citation']} skipped with citation"
    )
    return 1 if counts["fail"] else 0


def cmd_polygon(args: argparse.Namespace, settings: Settings) -> int:
    reg = _registry(settings)
    p = _polygon(args, reg)
    if args.action == "render":
        svg = render_polygon_svg(p, scale=settings.svg_scale)
        if args.out is None:
            sys.stdout.write(svg)
        else:
            args.out.write_text(svg, encoding="utf-8")
            print(f"wrote {args.out}")
        return 0

    content = singularity_content(p)
    print(f"vertices: {p}")
    print(f"n: {content.n}")
    print(f"basket: {content.basket}")
    print(f"K^2 (fan): {toric_degree(face_fan(p))}")
    if not content.is_pure_one_third:
        print("family: none (basket is not made of 1/3(1,1) points)")
        return 0
    print(f"K^2 (12 - n - 5k/3): {degree_via_formula(content)}")
    try:
        print(f"family: {match_family(p, reg)}")
    except NoFamily as exc:
        print(f"family: none ({exc})")
    return 0


def cmd_toric(args: argparse.Namespace, settings: Settings) -> int:
    wf = parse_weight_file(args.weights)
    wm = wf.weights
    omega = _omega(args.omega, adjoint_class(wm, wf.bundles))
    labels = wm.labels
    if args.action == "nef":
        for ray in nef_cone(wm, omega).rays:
            print(" ".join(str(x) for x in ray))
    elif args.action == "charts":
        for chart in charts(wm, omega):
            print(chart.describe(labels))
    elif args.action == "irrelevant":
        print(" ".join("*".join(labels[j] for j in gen) for gen in irrelevant_ideal(wm, omega)))
    else:
        fan = fan_from_chamber(wm, omega)
        for label, ray in zip(labels, fan.rays):
            print(f"{label}: {' '.join(str(x) for x in ray)}")
        for cone in fan.cones:
            print("cone " + " ".join(labels[j] for j in cone))
    return 0


def cmd_degree(args: argparse.Namespace, settings: Settings) -> int:
    wf = parse_weight_file(args.weights)
    bundles = parse_bundle_file(args.bundles, wf.weights.rank) if args.bundles else wf.bundles
    omega = _omega(args.omega, adjoint_class(wf.weights, bundles))
    print(ci_degree(wf.weights, omega, bundles))
    return 0


def cmd_mmp(args: argparse.Namespace, settings: Settings) -> int:
    reg = _registry(settings)
    roots = roots_for_k(args.k)
    if not roots:
        raise InputError(f"no recorded root for k={args.k}; roots exist for k = 1..6")
    trees = {root.name: tree_for(root.name, settings.mmp_mode, reg) for root in roots}
    if args.as_json:
        print(json_format.dumps({name: tree_to_json(tree) for name, tree in trees.items()}))
        return 0
    blocks: List[str] = [render_tree_text(tree, title=name) for name, tree in trees.items()]
    print("\n\n".join(blocks))
    return 0


def cmd_candidates(args: argparse.Namespace, settings: Settings) -> int:
    statuses = candidate_sieve()
    if args.as_json:
        print(json_format.dumps([s.as_dict() for s in statuses]))
        return 0
    print(f"{'k':>2}  {'K^2':>5}  {'sigma':>5}  {'verdict':<18}  reason")
    for s in statuses:
        print(
            f"{s.k:>2}  {format_rational(s.d):>5}  {f'{s.sigma_min}..{s.sigma_max}':>5}  "
            f"{s.verdict:<18}  {s.reason}"
        )
    return 0


def cmd_info(args: argparse.Namespace, settings: Settings) -> int:
    reg = _registry(settings)
    try:
        rec = reg.family(args.name)
    except KeyError:
        raise InputError(f"no family named {args.name!r}") from None
    inv = invariants_of(rec.k, rec.d)
    table = Table(title=rec.name)
    table.add_column("field")
    table.add_column("registry")
    table.add_column("computed")
    rows = [
        ("k", rec.k, inv.k),
        ("K^2", rec.degree, format_rational(inv.d)),
        ("h0(-K)", rec.h0, inv.h0),
        ("rho(Y)", rec.r, inv.r),
        ("moduli", rec.moduli, inv.moduli),
        ("n", "", inv.n),
        ("c2hat", "", format_rational(inv.c2hat)),
        ("Fano index", rec.fano_index, ""),
        ("pi1(smooth locus)", rec.pi1, ""),
        ("construction", rec.construction.kind, ""),
    ]
    for name, stored, computed in rows:
        table.add_row(name, str(stored), str(computed))
    series = ", ".join(str(c) for c in poincare_series(rec.k, rec.d, settings.series_terms))
    table.add_row("h0(-nK)", "", series)
    Console().print(table)
    if rec.construction.erratum:
        print(f"erratum: {rec.construction.erratum}")
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "polygon": cmd_polygon,
    "toric": cmd_toric,
    "degree": cmd_degree,
    "mmp": cmd_mmp,
    "candidates": cmd_candidates,
    "info": cmd_info,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = _settings(args)
        configure_logging(settings.log_level)
        return COMMANDS[args.command](args, settings)
    except (OrbifanoError, FormatError) as exc:
        print(f"orbifano: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
