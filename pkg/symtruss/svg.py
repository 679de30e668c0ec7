"""Deformed-shape drawing of a solved truss."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Union

import numpy as np

from .config import SETTINGS
from .errors import ParseError
from .trussfem import SolveResult

MARGIN = 40
LEGEND_HEIGHT = 48
UNDEFORMED = "#999999"
COMPRESSION = "#d62728"
TENSION = "#1f77b4"
UNSTRESSED = "#000000"


def _color(force: float, peak: float) -> str:
    if abs(force) <= 1e-6 * max(peak, 1.0):
        return UNSTRESSED
    return TENSION if force > 0 else COMPRESSION


def _svgroot(width: int, height: int) -> ET.Element:
    return ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=f"{width}px",
        height=f"{height}px",
        viewBox=f"0 0 {width} {height}",
    )


def _line(parent: ET.Element, start: np.ndarray, end: np.ndarray, **style: str) -> ET.Element:
    return ET.SubElement(
        parent,
        "line",
        x1=f"{start[0]:.2f}",
        y1=f"{start[1]:.2f}",
        x2=f"{end[0]:.2f}",
        y2=f"{end[1]:.2f}",
        **style,
    )


def render_svg(result: SolveResult, scale: float | None = None, width: int | None = None) -> ET.Element:
    """Undeformed geometry dashed grey, deformed geometry (displacements x scale) colored by axial force."""
    scale = SETTINGS.svg_scale if scale is None else scale
    width = SETTINGS.svg_width if width is None else width
    model = result.model
    original = model.coordinates()
    deformed = original + scale * result.u

    everything = np.vstack([original, deformed])
    low, high = everything.min(axis=0), everything.max(axis=0)
    span = np.maximum(high - low, 1e-9)
    pixels = (width - 2 * MARGIN) / max(span[0], span[1])
    height = int(round(span[1] * pixels)) + 2 * MARGIN + LEGEND_HEIGHT

    def to_screen(points: np.ndarray) -> np.ndarray:
        x = MARGIN + (points[:, 0] - low[0]) * pixels
        y = MARGIN + (high[1] - points[:, 1]) * pixels
        return np.column_stack([x, y])

    before, after = to_screen(original), to_screen(deformed)
    index = model.node_index
    peak = max((abs(force) for force in result.axial.values()), default=0.0)

    svg = _svgroot(width, height)
    ET.SubElement(svg, "title").text = f"{model.name}: deformed shape x{scale:g}"

    ghost = ET.SubElement(svg, "g", stroke=UNDEFORMED, fill="none")
    ghost.set("stroke-width", "1")
    ghost.set("stroke-dasharray", "4 3")
    for element in model.elements:
        _line(ghost, before[index[element.node_i]], before[index[element.node_j]])

    bars = ET.SubElement(svg, "g", fill="none")
    bars.set("stroke-width", "2.5")
    for element in model.elements:
        bar = _line(
            bars,
            after[index[element.node_i]],
            after[index[element.node_j]],
            stroke=_color(result.axial[element.id], peak),
        )
        ET.SubElement(bar, "title").text = f"{element.id}: {result.axial[element.id]:+.0f} N"

    joints = ET.SubElement(svg, "g", fill=UNSTRESSED)
    for node, point in zip(model.nodes, after):
        circle = ET.SubElement(joints, "circle", cx=f"{point[0]:.2f}", cy=f"{point[1]:.2f}", r="3")
        ET.SubElement(circle, "title").text = node.id

    legend = ET.SubElement(svg, "g")
    legend.set("font-family", "sans-serif")
    legend.set("font-size", "12")
    top = height - LEGEND_HEIGHT + 16
    entries = (
        (UNDEFORMED, "undeformed"),
        (COMPRESSION, "compression"),
        (TENSION, "tension"),
    )
    x = MARGIN
    for color, label in entries:
        sample = _line(legend, np.array([x, top]), np.array([x + 24, top]), stroke=color)
        sample.set("stroke-width", "2.5")
        ET.SubElement(legend, "text", x=f"{x + 30}", y=f"{top + 4}").text = label
        x += 130
    ET.SubElement(legend, "text", x=f"{MARGIN}", y=f"{top + 22}").text = (
        f"displacements scaled x{scale:g}"
    )
    return svg


def write_svg(
    result: SolveResult,
    path: Union[str, Path],
    scale: float | None = None,
    width: int | None = None,
) -> Path:
    path = Path(path)
    svg = render_svg(result, scale=scale, width=width)
    ET.indent(svg)
    try:
        ET.ElementTree(svg).write(path, encoding="utf-8", xml_declaration=True)
    except OSError as exc:
        raise ParseError(f"cannot write SVG file {path}: {exc}") from exc
    return path
