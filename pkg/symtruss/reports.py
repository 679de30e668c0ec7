"""Report records shared by every command and their table / CSV / JSON renderings.

Values are stored in display units (mm, N, degrees); the column kind decides
how the table format prints them. CSV prints floats with 9 significant
digits so the numbers can be re-read and re-checked.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel

from .isometry import GroupReport, Isometry, IsometryKind, SymmetryGroup
from .quadform import CanonicalConic, CanonicalQuadric, ConicSymmetry, QuadricSymmetry
from .trussfem import ComparisonReport, ReducedSystem, SolveResult, element_geometry

Cell = Union[bool, int, float, str, None]

MM = 1000.0


class Column(BaseModel):
    name: str
    kind: str = "text"  # text | mm | newton | integer | matrix | pct | number


class Table(BaseModel):
    name: str
    title: str
    columns: list[Column]
    rows: list[list[Cell]] = []


class SummaryItem(BaseModel):
    key: str
    value: Cell
    kind: str = "text"


class Report(BaseModel):
    command: str
    title: str
    summary: list[SummaryItem] = []
    tables: list[Table] = []
    notes: list[str] = []


# =============================================================================
# FORMATTING
# =============================================================================


def _fixed(value: float, decimals: int) -> str:
    text = f"{value:.{decimals}f}"
    if float(text) == 0:
        return f"{0.0:.{decimals}f}"
    return text


def format_value(value: Cell, kind: str = "text") -> str:
    if value is None:
        return "-"
    if isinstance(value, bool) or isinstance(value, str):
        return str(value)
    if kind == "mm":
        return _fixed(value, 4)
    if kind == "newton":
        rounded = int(round(value))
        return "0" if rounded == 0 else f"{rounded:+d}"
    if kind == "integer":
        return _fixed(value, 0)
    if kind == "matrix":
        return _fixed(value, 6)
    if kind == "pct":
        return f"{value:+.1f}%" if math.isfinite(value) else str(value)
    if isinstance(value, int):
        return str(value)
    return f"{value:.6g}"


def _csv_value(value: Cell) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def render_table(report: Report) -> str:
    out = [report.title]
    for item in report.summary:
        out.append(f"  {item.key}: {format_value(item.value, item.kind)}")
    for table in report.tables:
        out.append("")
        out.append(table.title)
        cells = [[format_value(v, c.kind) for v, c in zip(row, table.columns)] for row in table.rows]
        widths = [
            max([len(column.name)] + [len(row[i]) for row in cells]) for i, column in enumerate(table.columns)
        ]
        out.append("  ".join(column.name.ljust(w) for column, w in zip(table.columns, widths)).rstrip())
        for row, source in zip(cells, table.rows):
            parts = []
            for text, value, w in zip(row, source, widths):
                numeric = isinstance(value, (int, float)) and not isinstance(value, bool)
                parts.append(text.rjust(w) if numeric else text.ljust(w))
            out.append("  ".join(parts).rstrip())
    if report.notes:
        out.append("")
        out.extend(report.notes)
    return "\n".join(out) + "\n"


def render_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for item in report.summary:
        writer.writerow(["summary", item.key, _csv_value(item.value)])
    for table in report.tables:
        writer.writerow(["table"] + [column.name for column in table.columns])
        for row in table.rows:
            writer.writerow([table.name] + [_csv_value(v) for v in row])
    for note in report.notes:
        writer.writerow(["note", note])
    return buffer.getvalue()


def render_json(report: Report) -> str:
    return json.dumps(report.model_dump(), indent=2, ensure_ascii=False) + "\n"


RENDERERS = {"table": render_table, "csv": render_csv, "json": render_json}


def render(report: Report, report_format: str = "table") -> str:
    try:
        return RENDERERS[report_format](report)
    except KeyError:
        raise ValueError(f"unknown report format {report_format!r}") from None


# =============================================================================
# GROUPS
# =============================================================================


def _matrix_text(m: np.ndarray) -> str:
    rows = ", ".join("[" + ", ".join(_fixed(v, 6) for v in row) + "]" for row in m)
    return f"[{rows}]"


def _parameter(element: Isometry) -> Cell:
    if element.kind is IsometryKind.ROTATION:
        return math.degrees(float(element.parameter))
    return str(element.parameter)


def group_report(
    group: SymmetryGroup,
    verification: GroupReport | None = None,
    orbit_points: np.ndarray | None = None,
    show_elements: bool = True,
) -> Report:
    report = Report(command="group", title=f"group {group.name} (order {len(group)})")
    report.summary.append(SummaryItem(key="order", value=len(group)))
    if verification is not None:
        report.summary.extend(
            [
                SummaryItem(key="closure", value=verification.closure),
                SummaryItem(key="identity", value=verification.has_identity),
                SummaryItem(key="inverses", value=verification.has_inverses),
                SummaryItem(key="group", value=verification.ok),
            ]
        )
        if verification.witness:
            left, right = verification.witness
            report.notes.append(f"not closed: {left} * {right} is not in the set")
        if verification.inverse_witness:
            report.notes.append(f"no inverse for {verification.inverse_witness}")
    if show_elements:
        table = Table(
            name="elements",
            title="Elements",
            columns=[
                Column(name="#"),
                Column(name="label"),
                Column(name="kind"),
                Column(name="angle/mirror", kind="number"),
                Column(name="det", kind="number"),
                Column(name="matrix"),
            ],
        )
        for index, element in enumerate(group):
            table.rows.append(
                [
                    index,
                    element.label,
                    element.kind.value,
                    _parameter(element),
                    round(element.determinant, 12) + 0.0,
                    _matrix_text(element.matrix),
                ]
            )
        report.tables.append(table)
    if orbit_points is not None:
        axes = "xyz"[: orbit_points.shape[1]] if orbit_points.size else "xy"
        report.tables.append(
            Table(
                name="orbit",
                title=f"Orbit ({len(orbit_points)} points)",
                columns=[Column(name=axis, kind="matrix") for axis in axes],
                rows=[[float(v) + 0.0 for v in point] for point in orbit_points],
            )
        )
    return report


# =============================================================================
# CONICS AND QUADRICS
# =============================================================================


def _point(values: Sequence[float | None]) -> str:
    return "(" + ", ".join("-" if v is None else f"{v + 0.0:g}" for v in values) + ")"


def conic_report(conic: CanonicalConic, symmetry: ConicSymmetry | None = None) -> Report:
    report = Report(command="conic", title=f"conic: {conic.kind.value}")
    report.summary.append(SummaryItem(key="kind", value=conic.kind.value))
    report.summary.append(SummaryItem(key="discriminant", value=conic.discriminant + 0.0, kind="number"))
    if conic.detail:
        report.summary.append(SummaryItem(key="detail", value=conic.detail))
    if conic.center is not None:
        report.summary.append(SummaryItem(key="center", value=_point(conic.center)))
    if conic.vertex is not None:
        report.summary.append(SummaryItem(key="vertex", value=_point(conic.vertex)))
    if conic.radius is not None:
        report.summary.append(SummaryItem(key="radius", value=conic.radius, kind="number"))
    if conic.semi_axes is not None and conic.radius is None:
        report.summary.append(SummaryItem(key="semi_axes", value=_point(conic.semi_axes)))
    if conic.major_axis is not None:
        report.summary.append(SummaryItem(key="axis", value=conic.major_axis))
    if conic.focal_distance is not None:
        report.summary.append(SummaryItem(key="focal_distance", value=conic.focal_distance, kind="number"))
    if conic.foci:
        report.summary.append(SummaryItem(key="foci", value=" ".join(_point(f) for f in conic.foci)))
    if symmetry is not None:
        report.tables.append(_elements_table(symmetry.elements()))
    return report


def quadric_report(quadric: CanonicalQuadric, symmetry: QuadricSymmetry | None = None) -> Report:
    report = Report(command="quadric", title=f"quadric: {quadric.kind.value}")
    report.summary.append(SummaryItem(key="kind", value=quadric.kind.value))
    if quadric.detail:
        report.summary.append(SummaryItem(key="detail", value=quadric.detail))
    label = "vertex" if quadric.axis is not None else "center"
    report.summary.append(SummaryItem(key=label, value=_point(quadric.center)))
    report.summary.append(SummaryItem(key="denominators", value=_point(quadric.denominators)))
    report.summary.append(SummaryItem(key="signs", value=_point(quadric.signs)))
    report.summary.append(SummaryItem(key="rhs", value=quadric.rhs + 0.0, kind="number"))
    if quadric.radius is not None:
        report.summary.append(SummaryItem(key="radius", value=quadric.radius, kind="number"))
    if quadric.axis is not None:
        report.summary.append(SummaryItem(key="axis", value="xyz"[quadric.axis]))
    if symmetry is not None:
        report.tables.append(_elements_table(symmetry.elements()))
    return report


def _elements_table(elements: list) -> Table:
    table = Table(
        name="symmetry",
        title="Symmetry elements",
        columns=[Column(name="element"), Column(name="description")],
    )
    for element in elements:
        table.rows.append([type(element).__name__, element.describe()])
    return table


# =============================================================================
# TRUSSES
# =============================================================================


def solve_report(result: SolveResult) -> Report:
    model = result.model
    report = Report(
        command="truss solve",
        title=f"truss {model.name}: {len(model.nodes)} nodes, {len(model.elements)} elements",
    )

    displacements = Table(
        name="displacements",
        title="Displacements (mm)",
        columns=[Column(name="node"), Column(name="ux", kind="mm"), Column(name="uy", kind="mm")],
    )
    for node, (ux, uy) in zip(model.nodes, result.u):
        displacements.rows.append([node.id, float(ux) * MM + 0.0, float(uy) * MM + 0.0])

    reactions = Table(
        name="reactions",
        title="Reactions (N)",
        columns=[Column(name="node"), Column(name="dof"), Column(name="R", kind="newton")],
    )
    for reaction in result.reactions:
        reactions.rows.append([reaction.node, reaction.direction, reaction.force + 0.0])

    axial = Table(
        name="axial",
        title="Axial forces (N, + tension)",
        columns=[
            Column(name="element"),
            Column(name="L (m)", kind="number"),
            Column(name="c", kind="number"),
            Column(name="s", kind="number"),
            Column(name="N", kind="newton"),
        ],
    )
    for element in model.elements:
        g = element_geometry(model, element)
        axial.rows.append([element.id, g.length, g.c + 0.0, g.s + 0.0, result.axial[element.id]])

    report.tables.extend([displacements, reactions, axial])
    peak_id, peak_force = result.peak()
    report.summary.append(SummaryItem(key="||u||_2 (mm)", value=result.u_norm * MM, kind="mm"))
    report.summary.append(SummaryItem(key="peak element", value=peak_id))
    report.summary.append(SummaryItem(key="peak N (N)", value=peak_force, kind="newton"))
    report.notes.extend(model.notes)
    return report


def comparison_line(comparison: ComparisonReport) -> str:
    first, second = comparison.first, comparison.second
    return (
        f"peak |N|: {abs(comparison.peak_first[1]):.0f} → {abs(comparison.peak_second[1]):.0f} N "
        f"({format_value(comparison.peak_delta_pct, 'pct')}) ; "
        f"‖u‖₂: {first.u_norm * MM:.3f} → {second.u_norm * MM:.3f} mm "
        f"({format_value(comparison.norm_delta_pct, 'pct')})"
    )


def compare_report(comparison: ComparisonReport) -> Report:
    first, second = comparison.first.model.name, comparison.second.model.name
    report = Report(command="truss compare", title=f"compare {first} vs {second}")
    table = Table(
        name="axial",
        title="Axial forces (N)",
        columns=[
            Column(name="element"),
            Column(name=first, kind="newton"),
            Column(name=second, kind="newton"),
        ],
    )
    for row in comparison.rows:
        table.rows.append([row.element, row.first, row.second])
    report.tables.append(table)
    report.summary.extend(
        [
            SummaryItem(key=f"||u||_2 {first} (mm)", value=comparison.first.u_norm * MM, kind="mm"),
            SummaryItem(key=f"||u||_2 {second} (mm)", value=comparison.second.u_norm * MM, kind="mm"),
            SummaryItem(key=f"peak {first}", value=comparison.peak_first[0]),
            SummaryItem(key=f"peak {second}", value=comparison.peak_second[0]),
            SummaryItem(key="peak delta", value=comparison.peak_delta_pct, kind="pct"),
            SummaryItem(key="norm delta", value=comparison.norm_delta_pct, kind="pct"),
        ]
    )
    report.notes.append(comparison_line(comparison))
    return report


def stiffness_report(
    name: str,
    stiffness: np.ndarray,
    labels: Sequence[str],
    system: Optional[ReducedSystem] = None,
) -> Report:
    title = "reduced stiffness" if system is not None else "global stiffness"
    report = Report(command="truss stiffness", title=f"{name}: {title} (N/m)")
    table = Table(
        name="stiffness",
        title="K",
        columns=[Column(name="dof")] + [Column(name=label, kind="integer") for label in labels],
    )
    for label, row in zip(labels, stiffness):
        table.rows.append([label] + [float(v) + 0.0 for v in row])
    report.tables.append(table)
    if system is not None:
        report.tables.append(
            Table(
                name="loads",
                title="F (N)",
                columns=[Column(name="dof"), Column(name="F", kind="number")],
                rows=[[label, float(v) + 0.0] for label, v in zip(labels, system.loads)],
            )
        )
    return report
