#!/usr/bin/env python3
"""
Symmetry / quadric / truss toolkit - CLI

Usage:
    python cli.py group dihedral 8 --verify          # D8: 16 elements, axioms checked
    python cli.py group rotation 45 --degrees        # cyclic closure of one rotation
    python cli.py group file matrices.json --verify  # exit 2 when the set is not a group
    python cli.py quadric "48x^2+32y^2-24z^2+96x-320y-960z-8944=0" --symmetry
    python cli.py conic "x^2+y^2-4x+6y-3=0"
    python cli.py truss solve builtin:d2 --svg d2.svg
    python cli.py truss compare builtin:d2 builtin:asym
    python cli.py truss stiffness models/d2.json --reduced
    python cli.py truss ring builtin:d2 8

Exit codes: 0 ok, 2 group axiom failure, 3 unsupported algebra, 4 parse error,
5 mechanism, 6 model error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from typing import Optional, Sequence

from symtruss.config import REPORT_FORMATS, SETTINGS
from symtruss.errors import GroupAxiomFailure, ParseError, SymtrussError
from symtruss.isometry import cyclic, dihedral, generate, orbit, rotation2, verify_group
from symtruss.modelfile import load_matrix_set, resolve_model, save_model
from symtruss.quadform import (
    ConicCoeffs,
    classify_conic,
    classify_quadric,
    conic_symmetry,
    parse_quadratic,
    symmetry_elements,
)
from symtruss.reports import (
    Report,
    SummaryItem,
    compare_report,
    conic_report,
    group_report,
    quadric_report,
    render,
    solve_report,
    stiffness_report,
)
from symtruss.svg import write_svg
from symtruss.trussfem import SolveResult, assemble, compare, generate_ring, reduced_system, solve

logger = logging.getLogger("symtruss.cli")


class _Parser(argparse.ArgumentParser):
    """Usage errors are parse errors (exit 4) rather than argparse's exit 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise ParseError(f"{self.prog}: {message}")


def _point(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"point must be comma-separated numbers, got {text!r}") from exc
    if len(values) not in (2, 3):
        raise ParseError(f"point must have 2 or 3 coordinates, got {len(values)}")
    if not all(math.isfinite(v) for v in values):
        raise ParseError(f"point coordinates must be finite, got {text!r}")
    return values


def _scale(text: str) -> float:
    try:
        value = float(text)
    except ValueError as exc:
        raise ParseError(f"scale must be a number, got {text!r}") from exc
    if not math.isfinite(value) or value <= 0:
        raise ParseError(f"scale must be a positive finite number, got {text!r}")
    return value


# =============================================================================
# COMMANDS
# =============================================================================


def cmd_group(args: argparse.Namespace) -> Report:
    if args.kind == "file":
        group = load_matrix_set(args.value)
    elif args.kind == "rotation":
        try:
            angle = float(args.value)
        except ValueError as exc:
            raise ParseError(f"angle must be a number, got {args.value!r}") from exc
        if not math.isfinite(angle):
            raise ParseError(f"angle must be finite, got {args.value!r}")
        if args.degrees:
            angle = math.radians(angle)
        generator = rotation2(angle)
        group = generate([generator], f"<{generator.label}>")
    else:
        try:
            n = int(args.value)
        except ValueError as exc:
            raise ParseError(f"order must be an integer, got {args.value!r}") from exc
        group = dihedral(n) if args.kind == "dihedral" else cyclic(n)

    verification = verify_group(group) if args.verify or args.kind == "file" else None
    points = None
    if args.orbit:
        point = _point(args.orbit)
        if len(point) != group.dim:
            raise ParseError(f"orbit point needs {group.dim} coordinates for {group.name}")
        points = orbit(group, [point])
    report = group_report(group, verification, points, show_elements=args.list or not args.verify)
    if verification is not None and not verification.ok:
        _emit(report, args.format)
        raise GroupAxiomFailure(f"{group.name} is not a group: " + "; ".join(report.notes))
    return report


def cmd_quadric(args: argparse.Namespace) -> Report:
    parsed = parse_quadratic(args.equation)
    quadric = parsed.as_quadric() if isinstance(parsed, ConicCoeffs) else parsed
    canonical = classify_quadric(quadric)
    return quadric_report(canonical, symmetry_elements(canonical) if args.symmetry else None)


def cmd_conic(args: argparse.Namespace) -> Report:
    parsed = parse_quadratic(args.equation)
    if not isinstance(parsed, ConicCoeffs):
        raise ParseError("conic equations use x and y only; use the quadric command for z")
    canonical = classify_conic(parsed)
    return conic_report(canonical, conic_symmetry(canonical) if args.symmetry else None)


def _with_svg(report: Report, result: SolveResult, args: argparse.Namespace) -> Report:
    if args.svg:
        path = write_svg(result, args.svg, scale=args.scale)
        logger.info("[SVG] wrote %s", path)
        report.summary.append(SummaryItem(key="svg", value=str(path)))
    return report


def cmd_truss(args: argparse.Namespace) -> Report:
    if args.action == "solve":
        result = solve(resolve_model(args.model))
        return _with_svg(solve_report(result), result, args)
    if args.action == "compare":
        return compare_report(compare(resolve_model(args.first), resolve_model(args.second)))
    if args.action == "stiffness":
        model = resolve_model(args.model)
        if args.reduced:
            system = reduced_system(model)
            return stiffness_report(model.name, system.stiffness, system.labels, system)
        return stiffness_report(model.name, assemble(model), model.dof_labels())
    ring = generate_ring(resolve_model(args.model), args.sectors)
    if args.save:
        save_model(ring, args.save)
    result = solve(ring)
    return _with_svg(solve_report(result), result, args)


# =============================================================================
# ENTRY POINT
# =============================================================================


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=REPORT_FORMATS, default=None, help="Report format (default table)")

    parser = _Parser(description="Symmetry groups, quadrics and symmetric trusses")
    commands = parser.add_subparsers(dest="command", required=True)

    group = commands.add_parser("group", parents=[common], help="Dihedral/cyclic groups and matrix sets")
    group.add_argument("kind", choices=("dihedral", "cyclic", "rotation", "file"))
    group.add_argument("value", help="Order n, rotation angle or path to a JSON matrix list")
    group.add_argument("--verify", action="store_true", help="Check closure, identity and inverses")
    group.add_argument("--list", action="store_true", help="List element matrices")
    group.add_argument("--degrees", action="store_true", help="Rotation angle is in degrees")
    group.add_argument("--orbit", metavar="X,Y[,Z]", help="Print the orbit of a point")
    group.set_defaults(handler=cmd_group)

    quadric = commands.add_parser("quadric", parents=[common], help="Classify a quadric surface")
    quadric.add_argument("equation")
    quadric.add_argument("--symmetry", action="store_true", help="List center, axes and planes")
    quadric.set_defaults(handler=cmd_quadric)

    conic = commands.add_parser("conic", parents=[common], help="Classify a conic")
    conic.add_argument("equation")
    conic.add_argument("--symmetry", action="store_true", help="List center and axes")
    conic.set_defaults(handler=cmd_conic)

    truss = commands.add_parser("truss", help="Plane truss analysis")
    actions = truss.add_subparsers(dest="action", required=True)
    drawing = argparse.ArgumentParser(add_help=False)
    drawing.add_argument("--svg", metavar="PATH", help="Write the deformed shape as SVG")
    drawing.add_argument("--scale", type=_scale, default=None, help="Displacement magnification (default 500)")

    solve_cmd = actions.add_parser("solve", parents=[common, drawing], help="Solve one model")
    solve_cmd.add_argument("model", help="Model file or builtin:d2 | builtin:asym | builtin:unbraced")
    compare_cmd = actions.add_parser("compare", parents=[common], help="Compare two models")
    compare_cmd.add_argument("first")
    compare_cmd.add_argument("second")
    stiffness_cmd = actions.add_parser("stiffness", parents=[common], help="Print the stiffness matrix")
    stiffness_cmd.add_argument("model")
    stiffness_cmd.add_argument("--reduced", action="store_true", help="Free DOFs only")
    ring_cmd = actions.add_parser("ring", parents=[common, drawing], help="Replicate a module n times and solve")
    ring_cmd.add_argument("model")
    ring_cmd.add_argument("sectors", type=int)
    ring_cmd.add_argument("--save", metavar="PATH", help="Write the ring model document")
    truss.set_defaults(handler=cmd_truss)
    return parser


def _emit(report: Report, report_format: Optional[str]) -> None:
    sys.stdout.write(render(report, report_format or SETTINGS.report_format))


def main(argv: Optional[Sequence[str]] = None) -> int:
    level = logging.getLevelName(SETTINGS.log_level)
    logging.basicConfig(
        level=level if isinstance(level, int) else logging.WARNING,
        format="%(message)s",
        stream=sys.stderr,
    )
    try:
        args = build_parser().parse_args(argv)
        _emit(args.handler(args), args.format)
    except SymtrussError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
