"""JSON documents: truss models (plus the ``builtin:NAME`` shortcut) and matrix sets."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError

from .errors import ParseError
from .isometry import SymmetryGroup, group_from_matrices
from .trussfem import BAR_AREA, STEEL_E, Element, NodalLoad, Node, Support, TrussModel, builtin_case

BUILTIN_PREFIX = "builtin:"


class NodeDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    x: float
    y: float


class ElementDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    node_i: str
    node_j: str
    E: Optional[float] = None  # falls back to material_defaults
    A: Optional[float] = None


class SupportDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    node: str
    fix_x: bool = True
    fix_y: bool = True


class LoadDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    node: str
    Fx: float = 0.0
    Fy: float = 0.0


class MaterialDefaults(BaseModel):
    model_config = ConfigDict(extra="forbid")

    E: float = STEEL_E
    A: float = BAR_AREA


class ModelDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    nodes: list[NodeDoc]
    elements: list[ElementDoc]
    supports: list[SupportDoc] = []
    loads: list[LoadDoc] = []
    material_defaults: MaterialDefaults = MaterialDefaults()

    def to_model(self, fallback_name: str = "model") -> TrussModel:
        defaults = self.material_defaults
        return TrussModel(
            nodes=tuple(Node(n.id, n.x, n.y) for n in self.nodes),
            elements=tuple(
                Element(
                    e.id,
                    e.node_i,
                    e.node_j,
                    defaults.E if e.E is None else e.E,
                    defaults.A if e.A is None else e.A,
                )
                for e in self.elements
            ),
            supports=tuple(Support(s.node, s.fix_x, s.fix_y) for s in self.supports),
            loads=tuple(NodalLoad(load.node, load.Fx, load.Fy) for load in self.loads),
            name=self.name or fallback_name,
        )

    @classmethod
    def from_model(cls, model: TrussModel) -> "ModelDocument":
        return cls(
            name=model.name,
            nodes=[NodeDoc(id=n.id, x=n.x, y=n.y) for n in model.nodes],
            elements=[
                ElementDoc(id=e.id, node_i=e.node_i, node_j=e.node_j, E=e.E, A=e.A) for e in model.elements
            ],
            supports=[SupportDoc(node=s.node, fix_x=s.fix_x, fix_y=s.fix_y) for s in model.supports],
            loads=[LoadDoc(node=load.node, Fx=load.Fx, Fy=load.Fy) for load in model.loads],
        )


def _summarize(error: ValidationError) -> str:
    problems = []
    for item in error.errors()[:3]:
        location = ".".join(str(part) for part in item["loc"])
        problems.append(f"{location}: {item['msg']}" if location else item["msg"])
    if error.error_count() > 3:
        problems.append(f"... {error.error_count() - 3} more")
    return "; ".join(problems)


def load_model(path: Union[str, Path]) -> TrussModel:
    """Read and validate a model document; every file problem is a ParseError."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise ParseError(f"model file not found: {path}") from exc
    except OSError as exc:
        raise ParseError(f"cannot read model file {path}: {exc}") from exc
    try:
        document = ModelDocument.model_validate_json(text)
    except ValidationError as exc:
        raise ParseError(f"{path}: {_summarize(exc)}") from exc
    return document.to_model(fallback_name=path.stem)


def save_model(model: TrussModel, path: Union[str, Path]) -> Path:
    path = Path(path)
    payload = ModelDocument.from_model(model).model_dump()
    try:
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot write model file {path}: {exc}") from exc
    return path


def resolve_model(source: str) -> TrussModel:
    """``builtin:d2`` style names or a path to a model document."""
    if source.startswith(BUILTIN_PREFIX):
        return builtin_case(source[len(BUILTIN_PREFIX):])
    return load_model(source)


class MatrixSetDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    matrices: list[list[list[float]]]


def load_matrix_set(path: Union[str, Path]) -> SymmetryGroup:
    """A JSON list of square matrices (or {"name", "matrices"}) as an unclosed SymmetryGroup."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ParseError(f"matrix file not found: {path}") from exc
    except (OSError, ValueError) as exc:
        raise ParseError(f"cannot read matrix file {path}: {exc}") from exc
    if isinstance(raw, list):
        raw = {"matrices": raw}
    try:
        document = MatrixSetDoc.model_validate(raw)
    except ValidationError as exc:
        raise ParseError(f"{path}: {_summarize(exc)}") from exc
    if not document.matrices:
        raise ParseError(f"{path}: no matrices")
    return group_from_matrices(document.matrices, document.name or path.stem)
