"""Linear-elastic 2D pin-jointed trusses by the direct stiffness method.

DOFs are ordered node by node in input order, (x, y) per node. Supports are
applied by deleting the constrained rows and columns; reactions are
recovered afterwards as K u - F on the constrained rows.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable

import numpy as np
from fuzzywuzzy import process
from numpy.typing import NDArray

from .errors import InvalidOrder, Mechanism, MergeConflict, ModelError, ParseError, SingularMatrix
from .isometry import Isometry, rotation2
from .numcore import Matrix, matrix, residual_inf, solve_dense

logger = logging.getLogger(__name__)

LENGTH_TOLERANCE = 1e-12
MERGE_TOLERANCE = 1e-9
EQUILIBRIUM_TOLERANCE = 1e-6  # N, floor
EQUILIBRIUM_RELATIVE = 1e-12  # of the largest applied load component
AXIS_TOLERANCE = 1e-12

STEEL_E = 210e9  # Pa
BAR_AREA = 1e-4  # m^2 (1 cm^2)

# =============================================================================
# MODEL
# =============================================================================


@dataclass(frozen=True)
class Node:
    id: str
    x: float
    y: float


@dataclass(frozen=True)
class Element:
    id: str
    node_i: str
    node_j: str
    E: float = STEEL_E
    A: float = BAR_AREA


@dataclass(frozen=True)
class Support:
    node: str
    fix_x: bool = True
    fix_y: bool = True


@dataclass(frozen=True)
class NodalLoad:
    node: str
    Fx: float = 0.0
    Fy: float = 0.0


@dataclass(frozen=True)
class TrussModel:
    nodes: tuple[Node, ...]
    elements: tuple[Element, ...]
    supports: tuple[Support, ...] = ()
    loads: tuple[NodalLoad, ...] = ()
    name: str = "model"
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for name in ("nodes", "elements", "supports", "loads", "notes"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        self._validate()

    def _validate(self) -> None:
        if not self.nodes:
            raise ModelError(f"{self.name}: no nodes defined")
        if not self.elements:
            raise ModelError(f"{self.name}: no elements defined")
        ids = [node.id for node in self.nodes]
        duplicates = sorted({i for i in ids if ids.count(i) > 1})
        if duplicates:
            raise ModelError(f"{self.name}: duplicate node ids {duplicates}")
        for node in self.nodes:
            if not (math.isfinite(node.x) and math.isfinite(node.y)):
                raise ModelError(f"{self.name}: node {node.id} has non-finite coordinates")
        known = set(ids)
        element_ids: set[str] = set()
        for element in self.elements:
            if element.id in element_ids:
                raise ModelError(f"{self.name}: duplicate element id {element.id}")
            element_ids.add(element.id)
            for end in (element.node_i, element.node_j):
                if end not in known:
                    raise ModelError(f"{self.name}: element {element.id} references unknown node {end}")
            if element.node_i == element.node_j:
                raise ModelError(f"{self.name}: element {element.id} connects node {element.node_i} to itself")
            if not (element.E > 0 and element.A > 0):
                raise ModelError(f"{self.name}: element {element.id} needs E > 0 and A > 0")
            element_geometry(self, element)
        supported: set[str] = set()
        for support in self.supports:
            if support.node not in known:
                raise ModelError(f"{self.name}: support on unknown node {support.node}")
            if support.node in supported:
                raise ModelError(f"{self.name}: node {support.node} has more than one support")
            supported.add(support.node)
        for load in self.loads:
            if load.node not in known:
                raise ModelError(f"{self.name}: load on unknown node {load.node}")
            if not (math.isfinite(load.Fx) and math.isfinite(load.Fy)):
                raise ModelError(f"{self.name}: load on {load.node} is not finite")
        if not any(s.fix_x or s.fix_y for s in self.supports):
            raise ModelError(f"{self.name}: at least one degree of freedom must be constrained")

    @cached_property
    def node_index(self) -> dict[str, int]:
        return {node.id: index for index, node in enumerate(self.nodes)}

    def node(self, node_id: str) -> Node:
        return self.nodes[self.node_index[node_id]]

    def element(self, element_id: str) -> Element:
        for element in self.elements:
            if element.id == element_id:
                return element
        raise KeyError(element_id)

    @property
    def dof_count(self) -> int:
        return 2 * len(self.nodes)

    def dof_labels(self) -> list[str]:
        return [f"{node.id}{axis}" for node in self.nodes for axis in "xy"]

    def constrained_dofs(self) -> list[int]:
        index = self.node_index
        dofs = []
        for support in self.supports:
            base = 2 * index[support.node]
            if support.fix_x:
                dofs.append(base)
            if support.fix_y:
                dofs.append(base + 1)
        return sorted(dofs)

    def free_dofs(self) -> list[int]:
        constrained = set(self.constrained_dofs())
        return [dof for dof in range(self.dof_count) if dof not in constrained]

    def load_vector(self) -> NDArray[np.float64]:
        index = self.node_index
        forces = np.zeros(self.dof_count)
        for load in self.loads:
            forces[2 * index[load.node]] += load.Fx
            forces[2 * index[load.node] + 1] += load.Fy
        return forces

    def coordinates(self) -> NDArray[np.float64]:
        return np.array([(node.x, node.y) for node in self.nodes], dtype=float)

    def with_loads(self, loads: Iterable[NodalLoad]) -> "TrussModel":
        return replace(self, loads=tuple(loads))


@dataclass(frozen=True)
class ElementGeometry:
    length: float
    c: float
    s: float


def element_geometry(model: TrussModel, element: Element) -> ElementGeometry:
    start = model.node(element.node_i)
    end = model.node(element.node_j)
    dx, dy = end.x - start.x, end.y - start.y
    length = math.hypot(dx, dy)
    if length <= LENGTH_TOLERANCE:
        raise ModelError(f"element {element.id} has zero length")
    return ElementGeometry(length, dx / length, dy / length)


def element_stiffness(E: float, A: float, geometry: ElementGeometry) -> Matrix:
    """Global-coordinate 4x4 bar stiffness, DOFs (i_x, i_y, j_x, j_y)."""
    c, s = geometry.c, geometry.s
    block = np.array([[c * c, c * s], [c * s, s * s]])
    return matrix(E * A / geometry.length * np.block([[block, -block], [-block, block]]))


def _element_dofs(index: dict[str, int], element: Element) -> list[int]:
    i, j = index[element.node_i], index[element.node_j]
    return [2 * i, 2 * i + 1, 2 * j, 2 * j + 1]


def assemble(model: TrussModel) -> Matrix:
    index = model.node_index
    stiffness = np.zeros((model.dof_count, model.dof_count))
    for element in model.elements:
        ke = element_stiffness(element.E, element.A, element_geometry(model, element))
        dofs = _element_dofs(index, element)
        stiffness[np.ix_(dofs, dofs)] += ke
    logger.debug("[Assemble] %s: %d elements into %d DOFs", model.name, len(model.elements), model.dof_count)
    return matrix(stiffness)


@dataclass(frozen=True, eq=False)
class ReducedSystem:
    stiffness: Matrix
    loads: NDArray[np.float64]
    free: tuple[int, ...]
    labels: tuple[str, ...]


def reduced_system(model: TrussModel) -> ReducedSystem:
    """K and F with the constrained rows and columns removed."""
    stiffness = assemble(model)
    forces = model.load_vector()
    free = model.free_dofs()
    labels = model.dof_labels()
    return ReducedSystem(
        stiffness=matrix(stiffness[np.ix_(free, free)]) if free else np.zeros((0, 0)),
        loads=forces[free],
        free=tuple(free),
        labels=tuple(labels[dof] for dof in free),
    )


# =============================================================================
# SOLUTION
# =============================================================================


@dataclass(frozen=True)
class Reaction:
    node: str
    direction: str
    force: float


@dataclass(frozen=True, eq=False)
class SolveResult:
    """Displacements u (n x 2, m), reactions (N), axial forces (N, + tension) and ||u||_2 (m)."""

    model: TrussModel
    u: NDArray[np.float64]
    reactions: tuple[Reaction, ...]
    axial: dict[str, float]
    u_norm: float

    def __post_init__(self) -> None:
        loads = self.model.load_vector()
        applied = loads.reshape(-1, 2).sum(axis=0)
        supported = np.zeros(2)
        for reaction in self.reactions:
            supported["xy".index(reaction.direction)] += reaction.force
        imbalance = applied + supported
        largest = float(np.max(np.abs(loads))) if loads.size else 0.0
        allowed = max(EQUILIBRIUM_TOLERANCE, EQUILIBRIUM_RELATIVE * largest)
        if np.max(np.abs(imbalance)) > allowed:
            raise Mechanism(
                f"global equilibrium violated by ({imbalance[0]:.3e}, {imbalance[1]:.3e}) N; "
                "the structure is close to a mechanism"
            )

    def displacement(self, node_id: str) -> tuple[float, float]:
        row = self.u[self.model.node_index[node_id]]
        return float(row[0]), float(row[1])

    def reaction_totals(self) -> tuple[float, float]:
        totals = [0.0, 0.0]
        for reaction in self.reactions:
            totals["xy".index(reaction.direction)] += reaction.force
        return totals[0], totals[1]

    def peak(self) -> tuple[str, float]:
        """Element with the largest |N| (first one on ties)."""
        best = max(self.axial, key=lambda element_id: abs(self.axial[element_id]))
        return best, self.axial[best]


def _axial_forces(model: TrussModel, displacements: NDArray[np.float64]) -> dict[str, float]:
    index = model.node_index
    forces = {}
    for element in model.elements:
        g = element_geometry(model, element)
        ue = displacements[_element_dofs(index, element)]
        axial = element.E * element.A / g.length * float(np.array([-g.c, -g.s, g.c, g.s]) @ ue)
        forces[element.id] = axial + 0.0
    return forces


def solve(model: TrussModel) -> SolveResult:
    stiffness = assemble(model)
    forces = model.load_vector()
    free = model.free_dofs()
    displacements = np.zeros(model.dof_count)
    logger.info("[Solve] %s: %d free DOFs", model.name, len(free))

    if free:
        reduced = stiffness[np.ix_(free, free)]
        try:
            solution = solve_dense(reduced, forces[free])
        except SingularMatrix as exc:
            raise Mechanism(f"{model.name} is a mechanism: {exc}") from exc
        try:
            np.linalg.cholesky(reduced)
        except np.linalg.LinAlgError as exc:
            raise Mechanism(f"{model.name}: reduced stiffness is not positive definite") from exc
        logger.debug("[Solve] residual %.3e", residual_inf(reduced, solution, forces[free]))
        displacements[free] = solution

    recovered = stiffness @ displacements - forces
    reactions = tuple(
        Reaction(node=model.nodes[dof // 2].id, direction="xy"[dof % 2], force=float(recovered[dof]))
        for dof in model.constrained_dofs()
    )
    return SolveResult(
        model=model,
        u=displacements.reshape(-1, 2),
        reactions=reactions,
        axial=_axial_forces(model, displacements),
        u_norm=float(np.linalg.norm(displacements[free])) if free else 0.0,
    )


# =============================================================================
# BUILT-IN CASES
# =============================================================================


def _portal(name: str, left: float, braced: bool = True) -> TrussModel:
    nodes = (Node("A", left, 0.0), Node("B", left, 2.0), Node("C", 1.0, 2.0), Node("D", 1.0, 0.0))
    bars = [("AB", "A", "B"), ("BC", "B", "C"), ("CD", "C", "D"), ("DA", "D", "A")]
    if braced:
        bars += [("AC", "A", "C"), ("BD", "B", "D")]
    return TrussModel(
        nodes=nodes,
        elements=tuple(Element(bar, i, j) for bar, i, j in bars),
        supports=(Support("A"), Support("D")),
        loads=(
            NodalLoad("A", Fy=-500.0),
            NodalLoad("B", Fx=1000.0, Fy=-500.0),
            NodalLoad("C", Fy=-500.0),
            NodalLoad("D", Fy=-500.0),
        ),
        name=name,
    )


BUILTIN_CASES = {
    "d2": lambda: _portal("d2", -1.0),
    "asym": lambda: _portal("asym", -0.5),
    "unbraced": lambda: _portal("unbraced", -1.0, braced=False),
}


def builtin_case(name: str) -> TrussModel:
    """The symmetric (d2) and asymmetric (asym) braced frames, and the unbraced frame."""
    key = name.strip().lower()
    if key in BUILTIN_CASES:
        return BUILTIN_CASES[key]()
    message = f"unknown builtin case {name!r}"
    suggestion = process.extractOne(key, list(BUILTIN_CASES), score_cutoff=60)
    if suggestion:
        message += f"; did you mean {suggestion[0]!r}?"
    raise ParseError(message)


# =============================================================================
# COMPARISON
# =============================================================================


def _percent(before: float, after: float) -> float:
    if before == 0:
        return 0.0 if after == 0 else math.copysign(math.inf, after)
    return (after / before - 1.0) * 100.0


@dataclass(frozen=True)
class ComparisonRow:
    element: str
    first: float | None
    second: float | None


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    first: SolveResult
    second: SolveResult
    rows: tuple[ComparisonRow, ...]
    peak_first: tuple[str, float]
    peak_second: tuple[str, float]
    peak_delta_pct: float
    norm_delta_pct: float


def compare(first: TrussModel, second: TrussModel) -> ComparisonReport:
    a, b = solve(first), solve(second)
    order = list(a.axial) + [element_id for element_id in b.axial if element_id not in a.axial]
    rows = tuple(ComparisonRow(element_id, a.axial.get(element_id), b.axial.get(element_id)) for element_id in order)
    peak_a, peak_b = a.peak(), b.peak()
    return ComparisonReport(
        first=a,
        second=b,
        rows=rows,
        peak_first=peak_a,
        peak_second=peak_b,
        peak_delta_pct=_percent(abs(peak_a[1]), abs(peak_b[1])),
        norm_delta_pct=_percent(a.u_norm, b.u_norm),
    )


# =============================================================================
# ISOMETRIC COPIES AND RINGS
# =============================================================================


def _axis_permutation(m: NDArray[np.float64]) -> bool | None:
    """True if m swaps the x and y axes, False if it keeps them, None otherwise."""
    magnitudes = np.abs(m)
    if np.allclose(magnitudes, np.eye(2), atol=AXIS_TOLERANCE, rtol=0):
        return False
    if np.allclose(magnitudes, np.eye(2)[::-1], atol=AXIS_TOLERANCE, rtol=0):
        return True
    return None


def transform_model(model: TrussModel, isometry: Isometry, suffix: str = "", name: str | None = None) -> TrussModel:
    """Map coordinates, loads and supports through a planar isometry.

    Partial supports survive only maps that send coordinate axes onto
    coordinate axes; under any other map they become full pins.
    """
    if isometry.dim != 2:
        raise ModelError("truss models are planar; the isometry must be 2x2")
    m = isometry.matrix
    swaps = _axis_permutation(m)
    notes = list(model.notes)

    nodes = []
    for node in model.nodes:
        x, y = m @ np.array([node.x, node.y])
        nodes.append(Node(node.id + suffix, float(x), float(y)))
    loads = []
    for load in model.loads:
        fx, fy = m @ np.array([load.Fx, load.Fy])
        loads.append(NodalLoad(load.node + suffix, float(fx) + 0.0, float(fy) + 0.0))
    supports = []
    for support in model.supports:
        fix_x, fix_y = support.fix_x, support.fix_y
        if swaps is True:
            fix_x, fix_y = fix_y, fix_x
        elif swaps is None and fix_x != fix_y:
            notes.append(f"support at {support.node + suffix} converted to a pin under {isometry.label}")
            logger.warning("[Ring] support at %s converted to a full pin", support.node + suffix)
            fix_x = fix_y = True
        supports.append(Support(support.node + suffix, fix_x, fix_y))
    elements = [
        Element(element.id + suffix, element.node_i + suffix, element.node_j + suffix, element.E, element.A)
        for element in model.elements
    ]
    return TrussModel(
        nodes=tuple(nodes),
        elements=tuple(elements),
        supports=tuple(supports),
        loads=tuple(loads),
        name=name or f"{model.name}@{isometry.label}",
        notes=tuple(notes),
    )


@dataclass
class _RingBuilder:
    nodes: list[Node] = field(default_factory=list)
    elements: list[Element] = field(default_factory=list)
    supports: dict[str, Support] = field(default_factory=dict)
    loads: dict[str, list[float]] = field(default_factory=dict)
    alias: dict[str, str] = field(default_factory=dict)
    pairs: set[frozenset[str]] = field(default_factory=set)
    merged: int = 0
    collapsed: int = 0

    def add_node(self, node: Node) -> None:
        for known in self.nodes:
            if math.hypot(known.x - node.x, known.y - node.y) <= MERGE_TOLERANCE:
                self.alias[node.id] = known.id
                self.merged += 1
                return
        self.alias[node.id] = node.id
        self.nodes.append(node)

    def add_support(self, support: Support) -> None:
        target = self.alias[support.node]
        existing = self.supports.get(target)
        if existing and (existing.fix_x, existing.fix_y) != (support.fix_x, support.fix_y):
            raise MergeConflict(
                f"nodes {target} and {support.node} coincide but carry different support flags"
            )
        self.supports[target] = Support(target, support.fix_x, support.fix_y)

    def add_load(self, load: NodalLoad) -> None:
        totals = self.loads.setdefault(self.alias[load.node], [0.0, 0.0])
        totals[0] += load.Fx
        totals[1] += load.Fy

    def add_element(self, element: Element) -> None:
        i, j = self.alias[element.node_i], self.alias[element.node_j]
        pair = frozenset((i, j))
        if pair in self.pairs:
            self.collapsed += 1
            return
        self.pairs.add(pair)
        self.elements.append(Element(element.id, i, j, element.E, element.A))


def generate_ring(module: TrussModel, n: int) -> TrussModel:
    """Union of n copies of the module rotated by 2*pi*k/n about the origin.

    Coincident nodes (within 1e-9 m) merge, summing their loads; bars that
    end up between the same pair of merged nodes collapse into one.
    """
    if n < 2:
        raise InvalidOrder(f"a ring needs at least 2 sectors, got {n}")
    builder = _RingBuilder()
    notes: list[str] = list(module.notes)
    for k in range(n):
        copy = transform_model(module, rotation2(2 * math.pi * k / n), suffix=f"_{k}")
        notes.extend(note for note in copy.notes if note not in notes)
        for node in copy.nodes:
            builder.add_node(node)
        for support in copy.supports:
            builder.add_support(support)
        for load in copy.loads:
            builder.add_load(load)
        for element in copy.elements:
            builder.add_element(element)

    logger.info(
        "[Ring] %d sectors: %d nodes (%d merged), %d elements (%d collapsed)",
        n,
        len(builder.nodes),
        builder.merged,
        len(builder.elements),
        builder.collapsed,
    )
    return TrussModel(
        nodes=tuple(builder.nodes),
        elements=tuple(builder.elements),
        supports=tuple(builder.supports.values()),
        loads=tuple(NodalLoad(node, fx, fy) for node, (fx, fy) in builder.loads.items()),
        name=f"{module.name}-ring{n}",
        notes=tuple(notes),
    )


def sector_nodes(model: TrussModel, isometry: Isometry) -> dict[str, str]:
    """Node id -> id of the node at the image position (used for equivariance checks)."""
    coordinates = model.coordinates()
    images = isometry.apply(coordinates)
    mapping = {}
    for node, target in zip(model.nodes, images):
        distances = np.linalg.norm(coordinates - target, axis=1)
        best = int(np.argmin(distances))
        if distances[best] > MERGE_TOLERANCE * max(1.0, float(np.linalg.norm(target))):
            raise ModelError(f"{model.name} is not invariant under {isometry.label}: no image for {node.id}")
        mapping[node.id] = model.nodes[best].id
    return mapping


def scale_loads(model: TrussModel, factor: float) -> TrussModel:
    return model.with_loads(NodalLoad(load.node, factor * load.Fx, factor * load.Fy) for load in model.loads)

