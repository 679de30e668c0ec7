"""Rotations, reflections and the finite groups they generate."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import InvalidOrder, ModelError
from .numcore import Matrix, matrix, unique_points

logger = logging.getLogger(__name__)

ORTHOGONALITY_TOLERANCE = 1e-12
CLASSIFY_TOLERANCE = 1e-9
MATRIX_TOLERANCE = 1e-12
ORBIT_TOLERANCE = 1e-9


class IsometryKind(str, Enum):
    ROTATION = "rotation"
    REFLECTION = "reflection"
    NOT_ISOMETRY = "not_isometry"


class Axis(str, Enum):
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def index(self) -> int:
        return "XYZ".index(self.value)


def _degrees(radians: float) -> str:
    value = math.degrees(radians)
    if abs(value - round(value)) < 1e-9:
        return f"{round(value):d}°"
    return f"{value:.4g}°"


def _orthogonality_error(m: NDArray[np.float64]) -> float:
    return float(np.max(np.abs(m.T @ m - np.eye(m.shape[0]))))


def _describe(m: Matrix) -> tuple[IsometryKind, float | str]:
    """Kind and parameter of an orthogonal matrix."""
    if np.linalg.det(m) > 0:
        if m.shape[0] == 2:
            return IsometryKind.ROTATION, math.atan2(m[1, 0], m[0, 0]) % (2 * math.pi)
        cosine = min(1.0, max(-1.0, (np.trace(m) - 1.0) / 2.0))
        return IsometryKind.ROTATION, math.acos(cosine)
    if m.shape[0] == 2:
        mirror = (math.atan2(m[1, 0], m[0, 0]) / 2.0) % math.pi
        return IsometryKind.REFLECTION, f"line@{_degrees(mirror)}"
    for axis in Axis:
        expected = np.eye(3)
        expected[axis.index, axis.index] = -1.0
        if np.max(np.abs(m - expected)) <= MATRIX_TOLERANCE:
            return IsometryKind.REFLECTION, f"plane {axis.value.lower()}=0"
    return IsometryKind.REFLECTION, "improper"


@dataclass(frozen=True, eq=False)
class Isometry:
    """An orthogonal 2x2 or 3x3 matrix tagged as rotation or reflection.

    ``parameter`` is the angle in radians for rotations and a mirror label
    for reflections.
    """

    matrix: Matrix
    kind: IsometryKind
    parameter: float | str
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", IsometryKind(self.kind))
        m = matrix(self.matrix)
        if m.shape not in ((2, 2), (3, 3)):
            raise ValueError(f"isometries are 2x2 or 3x3, got {m.shape}")
        error = _orthogonality_error(m)
        if error > ORTHOGONALITY_TOLERANCE:
            raise ValueError(f"matrix is not orthogonal (||M^T M - I|| = {error:.3e})")
        det = float(np.linalg.det(m))
        expected = 1.0 if self.kind is IsometryKind.ROTATION else -1.0
        if self.kind is IsometryKind.NOT_ISOMETRY or abs(det - expected) > ORTHOGONALITY_TOLERANCE:
            raise ValueError(f"determinant {det:+.12f} does not match kind {self.kind.value}")
        object.__setattr__(self, "matrix", m)
        if not self.label:
            object.__setattr__(self, "label", self._default_label())

    @classmethod
    def from_matrix(cls, m: ArrayLike, label: str = "") -> "Isometry":
        m = matrix(m)
        kind, parameter = _describe(m)
        return cls(m, kind, parameter, label)

    def _default_label(self) -> str:
        if self.kind is IsometryKind.ROTATION:
            if abs(float(self.parameter)) < MATRIX_TOLERANCE:
                return "identity"
            return f"rho({_degrees(float(self.parameter))})"
        return f"sigma({self.parameter})"

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def determinant(self) -> float:
        return float(np.linalg.det(self.matrix))

    def apply(self, points: ArrayLike) -> NDArray[np.float64]:
        """Image of one point (shape (d,)) or many points (shape (k, d))."""
        array = np.asarray(points, dtype=float)
        return array @ self.matrix.T

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other."""
        return Isometry.from_matrix(self.matrix @ other.matrix)

    def inverse(self) -> "Isometry":
        return Isometry.from_matrix(self.matrix.T)

    def equals(self, other: "Isometry", tol: float = MATRIX_TOLERANCE) -> bool:
        return self.dim == other.dim and bool(np.max(np.abs(self.matrix - other.matrix)) <= tol)

    def is_identity(self, tol: float = MATRIX_TOLERANCE) -> bool:
        return bool(np.max(np.abs(self.matrix - np.eye(self.dim))) <= tol)

    def __repr__(self) -> str:
        return f"Isometry({self.label})"


def rotation2(theta: float) -> Isometry:
    """Counter-clockwise rotation of the plane by theta radians."""
    c, s = math.cos(theta), math.sin(theta)
    return Isometry(np.array([[c, -s], [s, c]]), IsometryKind.ROTATION, theta % (2 * math.pi))


def rotation3_z(theta: float) -> Isometry:
    c, s = math.cos(theta), math.sin(theta)
    m = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    return Isometry(m, IsometryKind.ROTATION, theta % (2 * math.pi))


def reflection2(axis: Axis | str) -> Isometry:
    """Reflection about the X axis (diag(1, -1)) or the Y axis (diag(-1, 1))."""
    axis = Axis(axis)
    if axis is Axis.X:
        return Isometry(np.diag([1.0, -1.0]), IsometryKind.REFLECTION, "X", "sigma(X)")
    if axis is Axis.Y:
        return Isometry(np.diag([-1.0, 1.0]), IsometryKind.REFLECTION, "Y", "sigma(Y)")
    raise ValueError("plane reflections are about the X or Y axis")


def sigma_h() -> Isometry:
    """Reflection in the horizontal plane z = 0."""
    return Isometry(np.diag([1.0, 1.0, -1.0]), IsometryKind.REFLECTION, "plane z=0", "sigma_h")


def _deduplicate(elements: Iterable[Isometry]) -> tuple[Isometry, ...]:
    kept: list[Isometry] = []
    for element in elements:
        if not any(element.equals(other) for other in kept):
            kept.append(element)
    return tuple(kept)


@dataclass(frozen=True)
class SymmetryGroup:
    name: str
    elements: tuple[Isometry, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        dims = {element.dim for element in self.elements}
        if len(dims) > 1:
            raise ModelError(f"group {self.name} mixes dimensions {sorted(dims)}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Isometry]:
        return iter(self.elements)

    @property
    def dim(self) -> int:
        return self.elements[0].dim if self.elements else 2

    def index_of(self, candidate: Isometry, tol: float = MATRIX_TOLERANCE) -> int | None:
        for index, element in enumerate(self.elements):
            if element.equals(candidate, tol):
                return index
        return None


def dihedral(n: int) -> SymmetryGroup:
    """D_n: the n rotations by 2*pi*k/n and the n reflections rho_k * sigma_X."""
    if n < 1:
        raise InvalidOrder(f"dihedral order must be at least 1, got {n}")
    sigma = reflection2(Axis.X)
    rotations = [rotation2(2 * math.pi * k / n) for k in range(n)]
    reflections = [rotation.compose(sigma) for rotation in rotations]
    return SymmetryGroup(f"D{n}", _deduplicate([*rotations, *reflections]))


def cyclic(n: int) -> SymmetryGroup:
    if n < 1:
        raise InvalidOrder(f"cyclic order must be at least 1, got {n}")
    return SymmetryGroup(f"C{n}", _deduplicate(rotation2(2 * math.pi * k / n) for k in range(n)))


def generate(generators: Sequence[Isometry], name: str, max_order: int = 1024) -> SymmetryGroup:
    """Closure of a finite set of isometries under composition."""
    if not generators:
        raise InvalidOrder("at least one generator is needed")
    dim = generators[0].dim
    elements = list(_deduplicate([Isometry.from_matrix(np.eye(dim)), *generators]))
    frontier = list(elements)
    while frontier:
        fresh: list[Isometry] = []
        for left in frontier:
            for right in generators:
                product = left.compose(right)
                if any(product.equals(known) for known in elements) or any(
                    product.equals(known) for known in fresh
                ):
                    continue
                fresh.append(product)
        elements.extend(fresh)
        if len(elements) > max_order:
            raise InvalidOrder(f"closure of {name} exceeds {max_order} elements")
        frontier = fresh
    logger.debug("[Group] %s closed with %d elements", name, len(elements))
    return SymmetryGroup(name, tuple(elements))


def group_from_matrices(matrices: Sequence[ArrayLike], name: str) -> SymmetryGroup:
    """A SymmetryGroup built as given (no closure), for checking external matrix sets."""
    elements = []
    for index, raw in enumerate(matrices):
        try:
            m = np.asarray(raw, dtype=float)
        except ValueError as exc:
            raise ModelError(f"matrix {index} of {name} is not rectangular") from exc
        if m.shape not in ((2, 2), (3, 3)):
            raise ModelError(f"matrix {index} of {name} is {m.shape}, expected 2x2 or 3x3")
        if classify_isometry(m) is IsometryKind.NOT_ISOMETRY:
            raise ModelError(f"matrix {index} of {name} is not an isometry")
        # snap to exact orthogonality so tolerances downstream stay 1e-12
        u, _, vt = np.linalg.svd(m)
        elements.append(Isometry.from_matrix(u @ vt))
    return SymmetryGroup(name, tuple(elements))


@dataclass(frozen=True)
class GroupReport:
    closure: bool
    has_identity: bool
    has_inverses: bool
    witness: tuple[str, str] | None = None
    inverse_witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.closure and self.has_identity and self.has_inverses


def verify_group(group: SymmetryGroup) -> GroupReport:
    """Check closure, identity and inverses exhaustively."""
    witness = None
    for left in group:
        for right in group:
            if group.index_of(left.compose(right)) is None:
                witness = (left.label, right.label)
                break
        if witness:
            break
    has_identity = any(element.is_identity() for element in group)
    inverse_witness = next(
        (element.label for element in group if group.index_of(element.inverse()) is None),
        None,
    )
    return GroupReport(
        closure=witness is None,
        has_identity=has_identity,
        has_inverses=inverse_witness is None,
        witness=witness,
        inverse_witness=inverse_witness,
    )


def classify_isometry(m: ArrayLike) -> IsometryKind:
    array = np.asarray(m, dtype=float)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or not np.all(np.isfinite(array)):
        return IsometryKind.NOT_ISOMETRY
    if _orthogonality_error(array) > CLASSIFY_TOLERANCE:
        return IsometryKind.NOT_ISOMETRY
    return IsometryKind.ROTATION if np.linalg.det(array) > 0 else IsometryKind.REFLECTION


def orbit(group: SymmetryGroup | Iterable[Isometry], points: Iterable[ArrayLike]) -> NDArray[np.float64]:
    """All images g(p), deduplicated at 1e-9; shape (k, dim)."""
    elements = list(group)
    source = [np.asarray(p, dtype=float) for p in points]
    if not source:
        dim = elements[0].dim if elements else 2
        return np.empty((0, dim))
    images = [element.apply(p) for p in source for element in elements]
    return unique_points(images, ORBIT_TOLERANCE)
