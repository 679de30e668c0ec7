"""Symmetry definitions as executable predicates.

A symmetry element is a center, an axis (plane or space) or a mirror plane.
Each element has an image map; a figure is symmetric about the element when
the map sends the figure onto itself.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import NoSamples
from .isometry import Axis, Isometry, SymmetryGroup, orbit
from .numcore import (
    Line2,
    Line3,
    Plane3,
    Vector,
    collinear,
    dist_point_line2,
    dist_point_line3,
    dist_point_plane,
    point_sets_equal,
    vector,
)

logger = logging.getLogger(__name__)

CONDITION_TOLERANCE = 1e-9
MEMBERSHIP_TOLERANCE = 1e-9
IMPLIED_TOLERANCE = 1e-6


@dataclass(frozen=True)
class Center:
    point: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "point", tuple(float(v) for v in vector(self.point)))

    def describe(self) -> str:
        return "center (" + ", ".join(f"{v:g}" for v in self.point) + ")"


@dataclass(frozen=True)
class Axis2D:
    line: Line2

    def describe(self) -> str:
        return f"axis {self.line.describe()}"


@dataclass(frozen=True)
class Axis3D:
    line: Line3

    def describe(self) -> str:
        return f"axis {self.line.describe()}"


@dataclass(frozen=True)
class MirrorPlane:
    plane: Plane3

    def describe(self) -> str:
        return f"plane {self.plane.describe()}"


SymmetryElement = Union[Center, Axis2D, Axis3D, MirrorPlane]


@dataclass(frozen=True)
class PointFigure:
    points: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("a point figure needs at least one point")
        rows = tuple(tuple(float(v) for v in vector(p)) for p in self.points)
        if len({len(row) for row in rows}) != 1:
            raise ValueError("all points of a figure must have the same dimension")
        object.__setattr__(self, "points", rows)

    def as_array(self) -> NDArray[np.float64]:
        return np.array(self.points, dtype=float)


@dataclass(frozen=True)
class ImplicitFigure:
    """Points P with |f(P)| <= membership_tol."""

    f: Callable[[NDArray[np.float64]], float]
    membership_tol: float = MEMBERSHIP_TOLERANCE

    def __post_init__(self) -> None:
        if not self.membership_tol > 0:
            raise ValueError("membership_tol must be positive")

    def contains(self, point: ArrayLike, tol: float | None = None) -> bool:
        limit = self.membership_tol if tol is None else tol
        return abs(float(self.f(np.asarray(point, dtype=float)))) <= limit


Figure = Union[PointFigure, ImplicitFigure]


def central_image(point: ArrayLike, center: ArrayLike) -> Vector:
    """Point reflection: 2O - P."""
    p, o = vector(point), vector(center)
    if p.size != o.size:
        raise ValueError("point and center must have the same dimension")
    return vector(2.0 * o - p)


def axial_image2(point: ArrayLike, axis: Axis | str, offset: float = 0.0) -> Vector:
    """Reflection about the line parallel to the X (y = offset) or Y (x = offset) axis."""
    p = np.array(vector(point, 2))
    axis = Axis(axis)
    if axis is Axis.Z:
        raise ValueError("plane axes are X or Y")
    # the axis keeps its own coordinate; the other one is negated about the offset
    negated = 1 if axis is Axis.X else 0
    p[negated] = 2.0 * offset - p[negated]
    return vector(p)


def axis_image3(point: ArrayLike, axis: Axis | str, through: ArrayLike = (0.0, 0.0, 0.0)) -> Vector:
    """Half-turn about the line through ``through`` parallel to a coordinate axis."""
    p = np.array(vector(point, 3))
    anchor = vector(through, 3)
    keep = Axis(axis).index
    for index in range(3):
        if index != keep:
            p[index] = 2.0 * anchor[index] - p[index]
    return vector(p)


def plane_image3(point: ArrayLike, axis: Axis | str, offset: float = 0.0) -> Vector:
    """Reflection in the plane x_axis = offset."""
    p = np.array(vector(point, 3))
    index = Axis(axis).index
    p[index] = 2.0 * offset - p[index]
    return vector(p)


def image(point: ArrayLike, element: SymmetryElement) -> Vector:
    """Image of a point under the map of any symmetry element."""
    p = vector(point)
    if isinstance(element, Center):
        return central_image(p, element.point)
    if isinstance(element, Axis2D):
        line = element.line
        p = vector(p, 2)
        n = line.normal
        return vector(p - 2.0 * (n @ p + line.c) / (n @ n) * n)
    if isinstance(element, Axis3D):
        p = vector(p, 3)
        origin = np.asarray(element.line.origin)
        v = np.asarray(element.line.direction)
        foot = origin + ((p - origin) @ v) / (v @ v) * v
        return vector(2.0 * foot - p)
    if isinstance(element, MirrorPlane):
        p = vector(p, 3)
        n = element.plane.normal
        return vector(p - 2.0 * (n @ p + element.plane.d) / (n @ n) * n)
    raise TypeError(f"unknown symmetry element {element!r}")


@dataclass(frozen=True)
class ConditionReport:
    """The two conditions of a symmetry definition for one pair P, P*."""

    aligned: bool
    equidistant: bool
    alignment: str

    @property
    def holds(self) -> bool:
        return self.aligned and self.equidistant


def _perpendicular(segment: NDArray[np.float64], direction: NDArray[np.float64]) -> bool:
    length = np.linalg.norm(segment)
    if length <= CONDITION_TOLERANCE:
        return True
    return abs(segment @ direction) <= CONDITION_TOLERANCE * length * np.linalg.norm(direction)


def _parallel(segment: NDArray[np.float64], direction: NDArray[np.float64]) -> bool:
    length = np.linalg.norm(segment)
    if length <= CONDITION_TOLERANCE:
        return True
    cross = np.cross(segment, direction)
    return np.linalg.norm(cross) <= CONDITION_TOLERANCE * length * np.linalg.norm(direction)


def _same(first: float, second: float) -> bool:
    return abs(first - second) <= CONDITION_TOLERANCE * max(1.0, abs(first), abs(second))


def check_definition(point: ArrayLike, point_star: ArrayLike, element: SymmetryElement) -> ConditionReport:
    """Evaluate alignment (collinear / perpendicular / orthogonal) and equal distance."""
    p, q = vector(point), vector(point_star)
    segment = np.asarray(q - p)
    if isinstance(element, Center):
        o = vector(element.point)
        return ConditionReport(
            aligned=collinear(p, o, q),
            equidistant=_same(float(np.linalg.norm(p - o)), float(np.linalg.norm(q - o))),
            alignment="collinear",
        )
    if isinstance(element, Axis2D):
        line = element.line
        return ConditionReport(
            aligned=_perpendicular(segment, line.direction),
            equidistant=_same(dist_point_line2(p, line), dist_point_line2(q, line)),
            alignment="perpendicular",
        )
    if isinstance(element, Axis3D):
        line = element.line
        return ConditionReport(
            aligned=_perpendicular(segment, np.asarray(line.direction)),
            equidistant=_same(dist_point_line3(p, line), dist_point_line3(q, line)),
            alignment="perpendicular",
        )
    if isinstance(element, MirrorPlane):
        plane = element.plane
        return ConditionReport(
            aligned=_parallel(segment, plane.normal),
            equidistant=_same(dist_point_plane(p, plane), dist_point_plane(q, plane)),
            alignment="orthogonal to plane",
        )
    raise TypeError(f"unknown symmetry element {element!r}")


def is_symmetric(
    figure: Figure,
    element: SymmetryElement,
    samples: Sequence[ArrayLike] | NDArray[np.float64] | None = None,
) -> bool:
    """Does the element's map send the figure onto itself?

    Point figures are compared as sets. Implicit figures are checked on the
    member samples: each image must satisfy |f| <= 1e-6.
    """
    if isinstance(figure, PointFigure):
        points = figure.as_array()
        images = [image(p, element) for p in points]
        return point_sets_equal(images, points)

    members = [np.asarray(p, dtype=float) for p in (samples if samples is not None else [])]
    if not members:
        raise NoSamples("an implicit figure needs sample points")
    members = [p for p in members if figure.contains(p)]
    if not members:
        raise NoSamples("none of the sample points lies on the figure")
    if samples is not None and len(members) < len(samples):
        logger.warning("[Symmetry] ignored %d non-member samples", len(samples) - len(members))
    return all(figure.contains(image(p, element), IMPLIED_TOLERANCE) for p in members)


def as_isometry(element: SymmetryElement) -> Isometry:
    """Linear map of an element through the origin."""
    if isinstance(element, Center):
        o = np.asarray(element.point)
        if np.any(o != 0):
            raise ValueError("only a center at the origin is a linear map")
        return Isometry.from_matrix(-np.eye(o.size), "inversion")
    if isinstance(element, Axis2D):
        if element.line.c != 0:
            raise ValueError("axis must pass through the origin")
        n = element.line.normal
        return Isometry.from_matrix(np.eye(2) - 2.0 * np.outer(n, n) / (n @ n))
    if isinstance(element, Axis3D):
        if dist_point_line3((0.0, 0.0, 0.0), element.line) > 0:
            raise ValueError("axis must pass through the origin")
        v = np.asarray(element.line.direction)
        return Isometry.from_matrix(2.0 * np.outer(v, v) / (v @ v) - np.eye(3))
    if isinstance(element, MirrorPlane):
        if element.plane.d != 0:
            raise ValueError("plane must pass through the origin")
        n = element.plane.normal
        return Isometry.from_matrix(np.eye(3) - 2.0 * np.outer(n, n) / (n @ n))
    raise TypeError(f"unknown symmetry element {element!r}")


def is_invariant(
    points: PointFigure | Iterable[ArrayLike],
    group: SymmetryGroup | Iterable[Isometry],
) -> bool:
    """orbit(group, F) == F as point sets."""
    source = points.as_array() if isinstance(points, PointFigure) else np.asarray(list(points), dtype=float)
    return point_sets_equal(orbit(group, source), source)
