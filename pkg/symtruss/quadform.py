"""Second-degree equations: parsing, conic/quadric classification and symmetry extraction.

Classification completes the square variable by variable, so only
axis-aligned quadrics are handled; equations with xy, xz or yz terms are
rejected instead of being rotated to principal axes.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, fields
from enum import Enum
from typing import Union

import numpy as np
from numpy.typing import NDArray

from .errors import CrossTermsUnsupported, DegreeError, NoSamples, NotQuadratic, ParseError
from .numcore import Line2, Line3, Plane3
from .symcheck import Axis2D, Axis3D, Center, ImplicitFigure, MirrorPlane, SymmetryElement

logger = logging.getLogger(__name__)

ZERO_TOLERANCE = 1e-12
VARIABLES = "xyz"

# =============================================================================
# COEFFICIENT RECORDS
# =============================================================================


def _require_finite(record: object) -> None:
    for item in fields(record):
        value = getattr(record, item.name)
        if not math.isfinite(value):
            raise ValueError(f"coefficient {item.name} must be finite, got {value}")


@dataclass(frozen=True)
class ConicCoeffs:
    """A x^2 + B xy + C y^2 + D x + E y + F = 0."""

    A: float = 0.0
    B: float = 0.0
    C: float = 0.0
    D: float = 0.0
    E: float = 0.0
    F: float = 0.0

    def __post_init__(self) -> None:
        _require_finite(self)
        if self.A == 0 and self.B == 0 and self.C == 0:
            raise NotQuadratic("conic has no second-degree term")

    def as_tuple(self) -> tuple[float, ...]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def __call__(self, point: NDArray[np.float64]) -> float:
        x, y = float(point[0]), float(point[1])
        return self.A * x * x + self.B * x * y + self.C * y * y + self.D * x + self.E * y + self.F

    def scaled(self, factor: float) -> "ConicCoeffs":
        return ConicCoeffs(*(factor * v for v in self.as_tuple()))

    def translated(self, shift: tuple[float, float]) -> "ConicCoeffs":
        """The conic moved by ``shift`` (substitute x - h, y - k)."""
        h, k = shift
        A, B, C, D, E, F = self.as_tuple()
        return ConicCoeffs(
            A=A,
            B=B,
            C=C,
            D=D - 2 * A * h - B * k,
            E=E - 2 * C * k - B * h,
            F=F + A * h * h + B * h * k + C * k * k - D * h - E * k,
        )

    def as_quadric(self) -> "QuadricCoeffs":
        return QuadricCoeffs(xx=self.A, yy=self.C, xy=self.B, x=self.D, y=self.E, const=self.F)

    def implicit(self) -> ImplicitFigure:
        return ImplicitFigure(self)


@dataclass(frozen=True)
class QuadricCoeffs:
    """Coefficients of x^2, y^2, z^2, xy, xz, yz, x, y, z and 1."""

    xx: float = 0.0
    yy: float = 0.0
    zz: float = 0.0
    xy: float = 0.0
    xz: float = 0.0
    yz: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0
    const: float = 0.0

    def __post_init__(self) -> None:
        _require_finite(self)
        if not any((self.xx, self.yy, self.zz, self.xy, self.xz, self.yz)):
            raise NotQuadratic("quadric has no second-degree term")

    def as_tuple(self) -> tuple[float, ...]:
        return (self.xx, self.yy, self.zz, self.xy, self.xz, self.yz, self.x, self.y, self.z, self.const)

    @property
    def squares(self) -> tuple[float, float, float]:
        return (self.xx, self.yy, self.zz)

    @property
    def linear(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    @property
    def cross(self) -> tuple[float, float, float]:
        return (self.xy, self.xz, self.yz)

    def __call__(self, point: NDArray[np.float64]) -> float:
        x, y, z = (float(v) for v in point[:3])
        return (
            self.xx * x * x + self.yy * y * y + self.zz * z * z
            + self.xy * x * y + self.xz * x * z + self.yz * y * z
            + self.x * x + self.y * y + self.z * z + self.const
        )

    def scaled(self, factor: float) -> "QuadricCoeffs":
        return QuadricCoeffs(*(factor * v for v in self.as_tuple()))

    def translated(self, shift: tuple[float, float, float]) -> "QuadricCoeffs":
        """The surface moved by ``shift`` (axis-aligned quadrics only)."""
        if any(self.cross):
            raise CrossTermsUnsupported("translation is implemented for axis-aligned quadrics")
        linear = []
        const = self.const
        for a, b, t in zip(self.squares, self.linear, shift):
            linear.append(b - 2 * a * t)
            const += a * t * t - b * t
        return QuadricCoeffs(*self.squares, 0.0, 0.0, 0.0, *linear, const)

    def implicit(self) -> ImplicitFigure:
        return ImplicitFigure(self)


# =============================================================================
# PARSER
# =============================================================================

_NUMBER = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_DIGITS = re.compile(r"\d+")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        char = self.text[self.pos]
        self.pos += 1
        return char

    def match(self, pattern: re.Pattern[str]) -> str | None:
        self.peek()
        found = pattern.match(self.text, self.pos)
        if not found:
            return None
        self.pos = found.end()
        return found.group()


def _parse_monomial(scanner: _Scanner) -> tuple[str, ...]:
    variables: list[str] = []
    start = scanner.pos
    while scanner.peek() in tuple(VARIABLES):
        name = scanner.take()
        power = 1
        if scanner.peek() == "^":
            caret = scanner.pos
            scanner.take()
            digits = scanner.match(_DIGITS)
            if digits is None:
                raise ParseError("exponent expected after '^'", scanner.pos)
            power = int(digits)
            if power > 2:
                raise DegreeError(f"exponent {power} on {name} exceeds 2 (at position {caret})")
            if power != 2:
                raise ParseError(f"only ^2 exponents are allowed, got ^{power}", caret)
        variables.extend([name] * power)
        if scanner.peek() == "*":
            scanner.take()
            if scanner.peek() not in tuple(VARIABLES):
                raise ParseError("variable expected after '*'", scanner.pos)
    if len(variables) > 2:
        raise DegreeError(f"term of degree {len(variables)} (at position {start})")
    return tuple(sorted(variables))


def _parse_side(scanner: _Scanner, terms: dict[tuple[str, ...], float], sign_of_side: float) -> None:
    first = True
    while True:
        char = scanner.peek()
        sign = 1.0
        if char in ("+", "-"):
            sign = -1.0 if scanner.take() == "-" else 1.0
            if scanner.peek() in ("+", "-"):
                raise ParseError("repeated sign", scanner.pos)
        elif not first:
            return
        term_start = scanner.pos
        number = scanner.match(_NUMBER)
        coefficient = float(number) if number is not None else 1.0
        if number is not None and scanner.peek() == "*":
            scanner.take()
            if scanner.peek() not in tuple(VARIABLES):
                raise ParseError("variable expected after '*'", scanner.pos)
        monomial = _parse_monomial(scanner)
        if number is None and not monomial:
            found = scanner.peek()
            if found is None:
                raise ParseError("term expected, found end of input", scanner.pos)
            raise ParseError(f"term expected, found {found!r}", scanner.pos)
        terms[monomial] = terms.get(monomial, 0.0) + sign_of_side * sign * coefficient
        logger.debug("[Parse] term %s%s at %d", number or "", "".join(monomial), term_start)
        first = False


def parse_quadratic(text: str) -> Union[ConicCoeffs, QuadricCoeffs]:
    """Parse ``48x^2+32y^2-24z^2+96x-320y-960z-8944=0`` style equations.

    Both sides may hold terms; the right side is subtracted. Equations that
    mention z give a QuadricCoeffs, otherwise a ConicCoeffs.
    """
    scanner = _Scanner(text)
    terms: dict[tuple[str, ...], float] = {}
    _parse_side(scanner, terms, 1.0)
    if scanner.peek() == "=":
        scanner.take()
        _parse_side(scanner, terms, -1.0)
    trailing = scanner.peek()
    if trailing is not None:
        raise ParseError(f"unexpected {trailing!r}", scanner.pos)

    def coefficient(*names: str) -> float:
        return terms.get(tuple(sorted(names)), 0.0)

    if "z" in text:
        return QuadricCoeffs(
            xx=coefficient("x", "x"),
            yy=coefficient("y", "y"),
            zz=coefficient("z", "z"),
            xy=coefficient("x", "y"),
            xz=coefficient("x", "z"),
            yz=coefficient("y", "z"),
            x=coefficient("x"),
            y=coefficient("y"),
            z=coefficient("z"),
            const=coefficient(),
        )
    return ConicCoeffs(
        A=coefficient("x", "x"),
        B=coefficient("x", "y"),
        C=coefficient("y", "y"),
        D=coefficient("x"),
        E=coefficient("y"),
        F=coefficient(),
    )


# =============================================================================
# CONICS
# =============================================================================


class ConicKind(str, Enum):
    CIRCLE = "circle"
    ELLIPSE = "ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    DEGENERATE = "degenerate"


def _near_zero(value: float, *magnitudes: float) -> bool:
    scale = max((abs(m) for m in magnitudes), default=0.0)
    if scale == 0.0:
        return value == 0.0
    return abs(value) <= ZERO_TOLERANCE * scale


def discriminant(conic: ConicCoeffs) -> float:
    return conic.B * conic.B - 4.0 * conic.A * conic.C


@dataclass(frozen=True)
class CanonicalConic:
    """Classified conic.

    ``major_axis`` names the coordinate direction of the ellipse major axis,
    the hyperbola transverse axis or the parabola axis. ``focal_parameter``
    is the signed p of (u - h)^2 = 4 p (w - k) for parabolas.
    """

    kind: ConicKind
    discriminant: float
    coefficients: ConicCoeffs
    center: tuple[float, float] | None = None
    vertex: tuple[float, float] | None = None
    radius: float | None = None
    semi_axes: tuple[float, float] | None = None
    major_axis: str | None = None
    focal_distance: float | None = None
    focal_parameter: float | None = None
    foci: tuple[tuple[float, float], ...] = ()
    detail: str = ""

    def expand(self) -> ConicCoeffs:
        """Raw coefficients of the canonical equation (scale fixed by the canonical form)."""
        if self.kind is ConicKind.PARABOLA and self.vertex is not None and self.focal_parameter is not None:
            h, k = self.vertex
            p = self.focal_parameter
            if self.major_axis == "y":  # (x - h)^2 - 4p (y - k) = 0
                return ConicCoeffs(A=1.0, D=-2 * h, E=-4 * p, F=h * h + 4 * p * k)
            return ConicCoeffs(C=1.0, E=-2 * k, D=-4 * p, F=k * k + 4 * p * h)
        if self.center is None or self.semi_axes is None or self.kind is ConicKind.DEGENERATE:
            raise NoSamples(f"{self.kind.value} ({self.detail}) has no canonical expansion")
        h, k = self.center
        a, b = self.semi_axes
        if self.kind is ConicKind.HYPERBOLA:
            wx, wy = (1 / a**2, -1 / b**2) if self.major_axis == "x" else (-1 / b**2, 1 / a**2)
        else:
            wx, wy = (1 / a**2, 1 / b**2) if self.major_axis != "y" else (1 / b**2, 1 / a**2)
        return ConicCoeffs(A=wx, C=wy, D=-2 * wx * h, E=-2 * wy * k, F=wx * h * h + wy * k * k - 1.0)

    def figure(self) -> ImplicitFigure:
        return ImplicitFigure(self.expand())


def _foci(center: tuple[float, float], axis: str, c: float) -> tuple[tuple[float, float], ...]:
    h, k = center
    if c == 0:
        return ((h, k),)
    if axis == "x":
        return ((h - c, k), (h + c, k))
    return ((h, k - c), (h, k + c))


def classify_conic(conic: ConicCoeffs) -> CanonicalConic:
    """Classify by the discriminant B^2 - 4AC, completing the square when B = 0."""
    A, B, C, D, E, F = conic.as_tuple()
    quad_scale = max(abs(A), abs(B), abs(C))
    delta = discriminant(conic)
    all_scale = max(abs(v) for v in conic.as_tuple())

    if not _near_zero(B, quad_scale):
        # the principal-axes form only decides degeneracy; parameters stay unreported
        principal = classify_conic(rotate_conic(conic, 0.5 * math.atan2(B, A - C)))
        if principal.kind is ConicKind.DEGENERATE:
            return CanonicalConic(ConicKind.DEGENERATE, delta, conic, detail=f"rotated_{principal.detail}")
        if _near_zero(delta, quad_scale * quad_scale):
            kind = ConicKind.PARABOLA
        elif delta < 0:
            kind = ConicKind.ELLIPSE
        else:
            kind = ConicKind.HYPERBOLA
        return CanonicalConic(kind, delta, conic, detail="rotated")

    a_zero = _near_zero(A, quad_scale)
    c_zero = _near_zero(C, quad_scale)

    if a_zero or c_zero:
        # one squared variable u, the other w may appear linearly
        if c_zero:
            square, linear, lin_coef, sq_lin = A, "y", E, D
        else:
            square, linear, lin_coef, sq_lin = C, "x", D, E
        u0 = -sq_lin / (2 * square)
        rest = F - square * u0 * u0
        if _near_zero(lin_coef, all_scale):
            ratio = -rest / square
            if _near_zero(rest, F, square * u0 * u0):
                detail = "coincident_lines"
            elif ratio > 0:
                detail = "parallel_lines"
            else:
                detail = "empty"
            return CanonicalConic(ConicKind.DEGENERATE, 0.0, conic, detail=detail)
        w0 = -rest / lin_coef
        p = -lin_coef / (4 * square)
        vertex = (u0, w0) if linear == "y" else (w0, u0)
        focus = (vertex[0], vertex[1] + p) if linear == "y" else (vertex[0] + p, vertex[1])
        return CanonicalConic(
            ConicKind.PARABOLA,
            0.0,
            conic,
            vertex=vertex,
            major_axis=linear,
            focal_distance=abs(p),
            focal_parameter=p,
            foci=(focus,),
        )

    h = -D / (2 * A)
    k = -E / (2 * C)
    rhs = A * h * h + C * k * k - F
    center = (h, k)
    if _near_zero(rhs, A * h * h, C * k * k, F):
        detail = "point" if A * C > 0 else "line_pair"
        return CanonicalConic(ConicKind.DEGENERATE, delta, conic, center=center, detail=detail)

    dx, dy = rhs / A, rhs / C
    if A * C > 0:
        if dx < 0:
            return CanonicalConic(ConicKind.DEGENERATE, delta, conic, center=center, detail="empty")
        if _near_zero(A - C, quad_scale):
            r = math.sqrt(dx)
            return CanonicalConic(
                ConicKind.CIRCLE,
                delta,
                conic,
                center=center,
                radius=r,
                semi_axes=(r, r),
                major_axis="x",
                focal_distance=0.0,
                foci=(center,),
            )
        axis = "x" if dx >= dy else "y"
        a, b = math.sqrt(max(dx, dy)), math.sqrt(min(dx, dy))
        c = math.sqrt(a * a - b * b)
        return CanonicalConic(
            ConicKind.ELLIPSE,
            delta,
            conic,
            center=center,
            semi_axes=(a, b),
            major_axis=axis,
            focal_distance=c,
            foci=_foci(center, axis, c),
        )

    axis = "x" if dx > 0 else "y"
    a, b = (math.sqrt(dx), math.sqrt(-dy)) if axis == "x" else (math.sqrt(dy), math.sqrt(-dx))
    c = math.hypot(a, b)
    return CanonicalConic(
        ConicKind.HYPERBOLA,
        delta,
        conic,
        center=center,
        semi_axes=(a, b),
        major_axis=axis,
        focal_distance=c,
        foci=_foci(center, axis, c),
    )


def rotate_conic(conic: ConicCoeffs, theta: float) -> ConicCoeffs:
    """Coefficients after substituting (x, y) = R(theta) (x', y')."""
    c, s = math.cos(theta), math.sin(theta)
    rotation = np.array([[c, -s], [s, c]])
    quadratic = np.array([[conic.A, conic.B / 2], [conic.B / 2, conic.C]])
    q = rotation.T @ quadratic @ rotation
    linear = np.array([conic.D, conic.E]) @ rotation
    return ConicCoeffs(
        A=float(q[0, 0]),
        B=float(q[0, 1] + q[1, 0]),
        C=float(q[1, 1]),
        D=float(linear[0]),
        E=float(linear[1]),
        F=conic.F,
    )


@dataclass(frozen=True)
class ConicSymmetry:
    center: tuple[float, float] | None
    axes: tuple[Line2, ...]

    def elements(self) -> list[SymmetryElement]:
        found: list[SymmetryElement] = []
        if self.center is not None:
            found.append(Center(self.center))
        found.extend(Axis2D(line) for line in self.axes)
        return found


def conic_symmetry(conic: CanonicalConic) -> ConicSymmetry:
    """Center and axis-parallel axes of an axis-aligned conic."""
    if conic.detail in ("rotated", "empty"):
        return ConicSymmetry(None, ())
    if conic.kind is ConicKind.PARABOLA:
        h, k = conic.vertex
        axis = Line2.vertical(h) if conic.major_axis == "y" else Line2.horizontal(k)
        return ConicSymmetry(None, (axis,))
    if conic.center is None:
        return ConicSymmetry(None, ())
    h, k = conic.center
    return ConicSymmetry(conic.center, (Line2.vertical(h), Line2.horizontal(k)))


def conic_samples(conic: CanonicalConic, count: int = 48) -> NDArray[np.float64]:
    """Points on the curve from its canonical parametrization."""
    angles = 2 * math.pi * (np.arange(count) + 0.37) / count
    if conic.kind is ConicKind.PARABOLA and conic.detail != "rotated":
        h, k = conic.vertex
        p = conic.focal_parameter
        t = np.linspace(-2.0, 2.0, count) + 0.013
        if conic.major_axis == "y":
            return np.column_stack([h + t, k + t * t / (4 * p)])
        return np.column_stack([h + t * t / (4 * p), k + t])
    if conic.kind in (ConicKind.CIRCLE, ConicKind.ELLIPSE):
        h, k = conic.center
        a, b = conic.semi_axes
        ax, by = (a, b) if conic.major_axis == "x" else (b, a)
        return np.column_stack([h + ax * np.cos(angles), k + by * np.sin(angles)])
    if conic.kind is ConicKind.HYPERBOLA and conic.detail != "rotated":
        h, k = conic.center
        a, b = conic.semi_axes
        s = np.linspace(-1.5, 1.5, count) + 0.011
        branch = np.where(np.arange(count) % 2 == 0, 1.0, -1.0)
        if conic.major_axis == "x":
            return np.column_stack([h + branch * a * np.cosh(s), k + b * np.sinh(s)])
        return np.column_stack([h + b * np.sinh(s), k + branch * a * np.cosh(s)])
    raise NoSamples(f"no parametrization for {conic.kind.value} {conic.detail}".strip())


# =============================================================================
# QUADRICS
# =============================================================================


class QuadricKind(str, Enum):
    SPHERE = "sphere"
    ELLIPSOID = "ellipsoid"
    ELLIPTIC_PARABOLOID = "elliptic_paraboloid"
    HYPERBOLIC_PARABOLOID = "hyperbolic_paraboloid"
    HYPERBOLOID_ONE_SHEET = "hyperboloid_one_sheet"
    HYPERBOLOID_TWO_SHEETS = "hyperboloid_two_sheets"
    DEGENERATE_OR_OTHER = "degenerate_or_other"


Optional3 = tuple[Union[float, None], Union[float, None], Union[float, None]]


@dataclass(frozen=True)
class CanonicalQuadric:
    """Classified quadric in the normalized form

        sum_i sign_i (v_i - c_i)^2 / den_i + sum_i linear_i v_i + constant = 0

    ``denominators`` are the positive a^2, b^2, c^2 of the squared variables
    (None where a variable is not squared). ``rhs`` is the value left on the
    right after completing the squares in the input scale.
    """

    kind: QuadricKind
    coefficients: QuadricCoeffs
    center: Optional3
    denominators: Optional3
    signs: tuple[int, int, int]
    linear: tuple[float, float, float]
    constant: float
    rhs: float
    axis: int | None = None
    detail: str = ""

    @property
    def semi_axes(self) -> Optional3:
        return tuple(None if d is None else math.sqrt(d) for d in self.denominators)

    @property
    def radius(self) -> float | None:
        if self.kind is not QuadricKind.SPHERE:
            return None
        return self.semi_axes[0]

    @property
    def weights(self) -> tuple[float, float, float]:
        return tuple(0.0 if d is None else s / d for s, d in zip(self.signs, self.denominators))

    def expand(self) -> QuadricCoeffs:
        squares, linear = [], []
        constant = self.constant
        for w, c, extra in zip(self.weights, self.center, self.linear):
            squares.append(w)
            if w:
                linear.append(-2 * w * c + extra)
                constant += w * c * c
            else:
                linear.append(extra)
        return QuadricCoeffs(*squares, 0.0, 0.0, 0.0, *linear, constant)

    def figure(self) -> ImplicitFigure:
        """The surface as an implicit figure of the normalized polynomial."""
        return ImplicitFigure(self.expand())


def _sign(value: float) -> int:
    return 1 if value > 0 else -1 if value < 0 else 0


def classify_quadric(quadric: QuadricCoeffs) -> CanonicalQuadric:
    """Complete the square in each squared variable and read the sign pattern."""
    squares = quadric.squares
    quad_scale = max(abs(v) for v in (*squares, *quadric.cross))
    if any(not _near_zero(v, quad_scale) for v in quadric.cross):
        raise CrossTermsUnsupported(
            "xy, xz and yz terms need a principal-axis rotation, which is not supported"
        )
    all_scale = max(abs(v) for v in quadric.as_tuple())
    squared = [i for i in range(3) if not _near_zero(squares[i], quad_scale)]
    linear_only = [
        i for i in range(3) if i not in squared and not _near_zero(quadric.linear[i], all_scale)
    ]

    center: list[float | None] = [None, None, None]
    completed = [quadric.const]
    for i in squared:
        center[i] = -quadric.linear[i] / (2 * squares[i])
        completed.append(squares[i] * center[i] ** 2)
    rhs = sum(completed[1:]) - quadric.const
    rhs_zero = _near_zero(rhs, *completed)
    if rhs_zero:
        rhs = 0.0

    axis = None
    if len(linear_only) == 1:
        axis = linear_only[0]
        norm = -quadric.linear[axis]
        center[axis] = rhs / quadric.linear[axis]
    elif not linear_only and not rhs_zero:
        norm = rhs
    else:
        norm = max(abs(squares[i]) for i in squared)

    denominators = tuple(abs(norm / squares[i]) if i in squared else None for i in range(3))
    signs = tuple(_sign(squares[i] / norm) if i in squared else 0 for i in range(3))
    linear = tuple(
        quadric.linear[i] / norm if i in linear_only else 0.0 for i in range(3)
    )
    constant = -rhs / norm

    kind, detail = _quadric_kind(squared, linear_only, signs, rhs_zero, squares, quad_scale)
    logger.debug("[Quadric] %s (%s) signs=%s rhs=%g", kind.value, detail, signs, rhs)
    return CanonicalQuadric(
        kind=kind,
        coefficients=quadric,
        center=tuple(center),
        denominators=denominators,
        signs=signs,
        linear=linear,
        constant=constant,
        rhs=rhs,
        axis=axis,
        detail=detail,
    )


def _quadric_kind(
    squared: list[int],
    linear_only: list[int],
    signs: tuple[int, int, int],
    rhs_zero: bool,
    squares: tuple[float, float, float],
    quad_scale: float,
) -> tuple[QuadricKind, str]:
    other = QuadricKind.DEGENERATE_OR_OTHER
    positives = sum(1 for i in squared if signs[i] > 0)
    mixed = 0 < positives < len(squared)

    if len(squared) == 3:
        if rhs_zero:
            return other, "cone" if mixed else "point"
        if positives == 3:
            equal = all(_near_zero(squares[i] - squares[0], quad_scale) for i in range(3))
            return (QuadricKind.SPHERE if equal else QuadricKind.ELLIPSOID), ""
        if positives == 2:
            return QuadricKind.HYPERBOLOID_ONE_SHEET, ""
        if positives == 1:
            return QuadricKind.HYPERBOLOID_TWO_SHEETS, ""
        return other, "empty"

    if len(squared) == 2:
        if len(linear_only) == 1:
            if mixed:
                return QuadricKind.HYPERBOLIC_PARABOLOID, ""
            return QuadricKind.ELLIPTIC_PARABOLOID, ""
        if rhs_zero:
            return other, "plane_pair" if mixed else "line"
        if positives == 2:
            return other, "elliptic_cylinder"
        if positives == 1:
            return other, "hyperbolic_cylinder"
        return other, "empty"

    if linear_only:
        return other, "parabolic_cylinder"
    if rhs_zero:
        return other, "plane"
    return other, "parallel_planes" if positives else "empty"


@dataclass(frozen=True)
class QuadricSymmetry:
    center: tuple[float, float, float] | None
    axes: tuple[Line3, ...]
    planes: tuple[Plane3, ...]

    def elements(self) -> list[SymmetryElement]:
        found: list[SymmetryElement] = []
        if self.center is not None:
            found.append(Center(self.center))
        found.extend(Axis3D(line) for line in self.axes)
        found.extend(MirrorPlane(plane) for plane in self.planes)
        return found


def symmetry_elements(quadric: CanonicalQuadric) -> QuadricSymmetry:
    """Even-exponent rule.

    Each squared variable gives a mirror plane through its center offset.
    A line along variable v is a half-turn axis when the two other variables
    are squared. The center is a symmetry center only when all three are squared.
    """
    if quadric.detail == "empty":
        return QuadricSymmetry(None, (), ())
    squared = [i for i in range(3) if quadric.signs[i] != 0]
    planes = tuple(Plane3.coordinate(i, quadric.center[i]) for i in squared)
    axes = []
    for along in range(3):
        others = [i for i in range(3) if i != along]
        if not all(i in squared for i in others):
            continue
        origin = [0.0, 0.0, 0.0]
        for i in range(3):
            if quadric.center[i] is not None:
                origin[i] = quadric.center[i]
        direction = [0.0, 0.0, 0.0]
        direction[along] = 1.0
        axes.append(Line3(tuple(origin), tuple(direction)))
    center = tuple(quadric.center) if len(squared) == 3 else None
    return QuadricSymmetry(center, tuple(axes), planes)


def surface_samples(quadric: CanonicalQuadric, count: int = 48) -> NDArray[np.float64]:
    """Points on one of the six named surfaces from its canonical parametrization."""
    if quadric.kind is QuadricKind.DEGENERATE_OR_OTHER:
        raise NoSamples(f"no parametrization for degenerate quadric ({quadric.detail})")
    rings = 8
    per_ring = max(1, math.ceil(count / rings))
    theta = np.tile(2 * math.pi * (np.arange(rings) + 0.23) / rings, per_ring)[:count]
    step = np.repeat(np.arange(per_ring), rings)[:count]
    c = [0.0 if v is None else v for v in quadric.center]
    a = [0.0 if v is None else v for v in quadric.semi_axes]
    points = np.zeros((count, 3))

    if quadric.kind in (QuadricKind.SPHERE, QuadricKind.ELLIPSOID):
        phi = math.pi * (step + 0.5) / per_ring
        points[:, 0] = c[0] + a[0] * np.sin(phi) * np.cos(theta)
        points[:, 1] = c[1] + a[1] * np.sin(phi) * np.sin(theta)
        points[:, 2] = c[2] + a[2] * np.cos(phi)
        return points

    if quadric.kind in (QuadricKind.ELLIPTIC_PARABOLOID, QuadricKind.HYPERBOLIC_PARABOLOID):
        i, j = [k for k in range(3) if k != quadric.axis]
        r = 0.3 + 1.2 * step / max(1, per_ring - 1)
        weights = quadric.weights
        points[:, i] = c[i] + a[i] * r * np.cos(theta)
        points[:, j] = c[j] + a[j] * r * np.sin(theta)
        points[:, quadric.axis] = (
            c[quadric.axis]
            + weights[i] * (points[:, i] - c[i]) ** 2
            + weights[j] * (points[:, j] - c[j]) ** 2
        )
        return points

    s = -1.0 + 2.0 * (step + 0.5) / per_ring
    if quadric.kind is QuadricKind.HYPERBOLOID_ONE_SHEET:
        lone = quadric.signs.index(-1)
        i, j = [k for k in range(3) if k != lone]
        points[:, i] = c[i] + a[i] * np.cosh(s) * np.cos(theta)
        points[:, j] = c[j] + a[j] * np.cosh(s) * np.sin(theta)
        points[:, lone] = c[lone] + a[lone] * np.sinh(s)
        return points

    lone = quadric.signs.index(1)
    i, j = [k for k in range(3) if k != lone]
    sheet = np.where(np.arange(count) % 2 == 0, 1.0, -1.0)
    s = 0.2 + np.abs(s)
    points[:, i] = c[i] + a[i] * np.sinh(s) * np.cos(theta)
    points[:, j] = c[j] + a[j] * np.sinh(s) * np.sin(theta)
    points[:, lone] = c[lone] + sheet * a[lone] * np.cosh(s)
    return points
