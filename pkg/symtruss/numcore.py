"""Small dense linear algebra: vectors, lines, planes, distances and a pivoting solver.

Vectors and matrices are plain float64 numpy arrays marked read-only, so they
can be shared between threads and stored in frozen dataclasses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import SingularMatrix

Vector = NDArray[np.float64]
Matrix = NDArray[np.float64]

PIVOT_TOLERANCE = 1e-12
POINT_TOLERANCE = 1e-9
COLLINEAR_TOLERANCE = 1e-9


def _frozen(array: NDArray[np.float64]) -> NDArray[np.float64]:
    array.setflags(write=False)
    return array


def vector(values: ArrayLike, dim: int | None = None) -> Vector:
    """Finite 1-D float array, optionally of a fixed dimension."""
    array = np.array(values, dtype=float).reshape(-1)
    if array.size < 1:
        raise ValueError("vector needs at least one component")
    if dim is not None and array.size != dim:
        raise ValueError(f"expected {dim} components, got {array.size}")
    if not np.all(np.isfinite(array)):
        raise ValueError(f"vector components must be finite: {array.tolist()}")
    return _frozen(array)


def vec2(x: float, y: float) -> Vector:
    return vector((x, y), 2)


def vec3(x: float, y: float, z: float) -> Vector:
    return vector((x, y, z), 3)


def matrix(rows: ArrayLike) -> Matrix:
    """Finite 2-D float array with at least one row and column."""
    array = np.array(rows, dtype=float)
    if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
        raise ValueError(f"matrix must be two-dimensional and non-empty, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise ValueError("matrix entries must be finite")
    return _frozen(array)


def as_point3(point: ArrayLike) -> Vector:
    """Embed a 2-D point in the z = 0 plane; 3-D points pass through."""
    array = vector(point)
    if array.size == 2:
        return vector((array[0], array[1], 0.0), 3)
    if array.size != 3:
        raise ValueError(f"points must have 2 or 3 components, got {array.size}")
    return array


@dataclass(frozen=True)
class Line2:
    """The line a*x + b*y + c = 0."""

    a: float
    b: float
    c: float = 0.0

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c)):
            raise ValueError("line coefficients must be finite")
        if self.a * self.a + self.b * self.b <= 0:
            raise ValueError("line needs a or b nonzero")

    @classmethod
    def vertical(cls, x: float) -> "Line2":
        return cls(1.0, 0.0, -x)

    @classmethod
    def horizontal(cls, y: float) -> "Line2":
        return cls(0.0, 1.0, -y)

    @property
    def normal(self) -> Vector:
        return vec2(self.a, self.b)

    @property
    def direction(self) -> Vector:
        return vec2(-self.b, self.a)

    def describe(self) -> str:
        if self.b == 0:
            return f"x = {-self.c / self.a:g}"
        if self.a == 0:
            return f"y = {-self.c / self.b:g}"
        return f"{self.a:g}x + {self.b:g}y + {self.c:g} = 0"


@dataclass(frozen=True)
class Line3:
    """The line origin + t * direction."""

    origin: tuple[float, float, float]
    direction: tuple[float, float, float]

    def __post_init__(self) -> None:
        origin = vector(self.origin, 3)
        direction = vector(self.direction, 3)
        if np.linalg.norm(direction) <= 0:
            raise ValueError("line direction must be nonzero")
        object.__setattr__(self, "origin", tuple(float(v) for v in origin))
        object.__setattr__(self, "direction", tuple(float(v) for v in direction))

    def describe(self) -> str:
        origin = ", ".join(f"{v:g}" for v in self.origin)
        direction = ", ".join(f"{v:g}" for v in self.direction)
        return f"({origin}) + t({direction})"


@dataclass(frozen=True)
class Plane3:
    """The plane a*x + b*y + c*z + d = 0."""

    a: float
    b: float
    c: float
    d: float = 0.0

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c, self.d)):
            raise ValueError("plane coefficients must be finite")
        if self.a * self.a + self.b * self.b + self.c * self.c <= 0:
            raise ValueError("plane needs a nonzero normal")

    @classmethod
    def coordinate(cls, axis: int, offset: float) -> "Plane3":
        """Plane x_axis = offset (axis 0, 1, 2 for x, y, z)."""
        normal = [0.0, 0.0, 0.0]
        normal[axis] = 1.0
        return cls(*normal, -offset)

    @property
    def normal(self) -> Vector:
        return vec3(self.a, self.b, self.c)

    def describe(self) -> str:
        nonzero = [(name, v) for name, v in zip("xyz", (self.a, self.b, self.c)) if v != 0]
        if len(nonzero) == 1:
            name, v = nonzero[0]
            return f"{name} = {-self.d / v:g}"
        return f"{self.a:g}x + {self.b:g}y + {self.c:g}z + {self.d:g} = 0"


def solve_dense(a: ArrayLike, b: ArrayLike) -> Vector:
    """Solve A u = b by Gaussian elimination with partial pivoting.

    Raises SingularMatrix when a pivot falls below 1e-12 times the largest
    absolute entry of the original A.
    """
    work = np.array(a, dtype=float)
    rhs = np.array(b, dtype=float).reshape(-1)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise ValueError(f"A must be square, got shape {work.shape}")
    n = work.shape[0]
    if n < 1 or rhs.size != n:
        raise ValueError(f"b must have {n} entries, got {rhs.size}")
    if not (np.all(np.isfinite(work)) and np.all(np.isfinite(rhs))):
        raise ValueError("A and b must be finite")

    scale = float(np.max(np.abs(work)))
    threshold = PIVOT_TOLERANCE * scale
    if scale == 0.0:
        raise SingularMatrix("matrix is identically zero")

    for k in range(n):
        p = int(np.argmax(np.abs(work[k:, k]))) + k
        if abs(work[p, k]) < threshold or work[p, k] == 0.0:
            raise SingularMatrix(f"pivot {k} is {abs(work[p, k]):.3e}, below {threshold:.3e}")
        if p != k:
            work[[k, p]] = work[[p, k]]
            rhs[[k, p]] = rhs[[p, k]]
        factors = work[k + 1:, k] / work[k, k]
        work[k + 1:, k:] -= np.outer(factors, work[k, k:])
        rhs[k + 1:] -= factors * rhs[k]

    u = np.zeros(n)
    for k in range(n - 1, -1, -1):
        u[k] = (rhs[k] - work[k, k + 1:] @ u[k + 1:]) / work[k, k]
    return _frozen(u)


def residual_inf(a: ArrayLike, u: ArrayLike, b: ArrayLike) -> float:
    """||A u - b||_inf / max(1, ||b||_inf)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(np.max(np.abs(a @ np.asarray(u, dtype=float) - b)) / max(1.0, float(np.max(np.abs(b)))))


def dist_point_line2(point: ArrayLike, line: Line2) -> float:
    p = vector(point, 2)
    return abs(line.a * p[0] + line.b * p[1] + line.c) / math.hypot(line.a, line.b)


def dist_point_line3(point: ArrayLike, line: Line3) -> float:
    p = vector(point, 3)
    direction = np.asarray(line.direction)
    offset = p - np.asarray(line.origin)
    return float(np.linalg.norm(np.cross(offset, direction)) / np.linalg.norm(direction))


def dist_point_plane(point: ArrayLike, plane: Plane3) -> float:
    p = vector(point, 3)
    normal = plane.normal
    return abs(float(normal @ p) + plane.d) / float(np.linalg.norm(normal))


def collinear(p: ArrayLike, q: ArrayLike, r: ArrayLike) -> bool:
    """True when ||(Q-P) x (R-P)|| <= 1e-9 * largest pairwise distance."""
    p3, q3, r3 = as_point3(p), as_point3(q), as_point3(r)
    spread = max(
        np.linalg.norm(q3 - p3),
        np.linalg.norm(r3 - p3),
        np.linalg.norm(r3 - q3),
    )
    return bool(np.linalg.norm(np.cross(q3 - p3, r3 - p3)) <= COLLINEAR_TOLERANCE * spread)


def unique_points(points: Iterable[ArrayLike], tol: float = POINT_TOLERANCE) -> NDArray[np.float64]:
    """Points in first-seen order with near-duplicates (distance <= tol) removed."""
    kept: list[Vector] = []
    for point in points:
        candidate = np.asarray(point, dtype=float)
        if not any(np.linalg.norm(candidate - other) <= tol for other in kept):
            kept.append(candidate)
    if not kept:
        return np.empty((0, 0))
    return np.vstack(kept)


def point_sets_equal(
    first: Sequence[ArrayLike] | NDArray[np.float64],
    second: Sequence[ArrayLike] | NDArray[np.float64],
    tol: float = POINT_TOLERANCE,
) -> bool:
    """Set equality of two point clouds: every point has a partner within tol, both ways."""
    a = unique_points(first, tol)
    b = unique_points(second, tol)
    if a.size == 0 or b.size == 0:
        return a.size == b.size
    if a.shape[1] != b.shape[1]:
        return False
    distances = np.linalg.norm(a[:, None, :] - b[None, :, :], axis=2)
    return bool(np.all(distances.min(axis=1) <= tol) and np.all(distances.min(axis=0) <= tol))
