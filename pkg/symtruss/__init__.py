"""Symmetry groups, second-degree surfaces and symmetric plane trusses."""

from .errors import (
    CrossTermsUnsupported,
    DegreeError,
    GroupAxiomFailure,
    InvalidOrder,
    Mechanism,
    MergeConflict,
    ModelError,
    NoSamples,
    NotQuadratic,
    ParseError,
    SingularMatrix,
    SymtrussError,
)
from .isometry import (
    Axis,
    Isometry,
    IsometryKind,
    SymmetryGroup,
    classify_isometry,
    cyclic,
    dihedral,
    generate,
    group_from_matrices,
    orbit,
    reflection2,
    rotation2,
    rotation3_z,
    sigma_h,
    verify_group,
)
from .modelfile import load_matrix_set, load_model, resolve_model, save_model
from .numcore import Line2, Line3, Plane3, solve_dense, vec2, vec3
from .quadform import (
    ConicCoeffs,
    QuadricCoeffs,
    classify_conic,
    classify_quadric,
    conic_symmetry,
    parse_quadratic,
    symmetry_elements,
)
from .symcheck import (
    Axis2D,
    Axis3D,
    Center,
    ImplicitFigure,
    MirrorPlane,
    PointFigure,
    check_definition,
    image,
    is_invariant,
    is_symmetric,
)
from .trussfem import (
    TrussModel,
    assemble,
    builtin_case,
    compare,
    element_geometry,
    element_stiffness,
    generate_ring,
    reduced_system,
    solve,
    transform_model,
)

__all__ = [
    "Axis",
    "Axis2D",
    "Axis3D",
    "Center",
    "ConicCoeffs",
    "CrossTermsUnsupported",
    "DegreeError",
    "GroupAxiomFailure",
    "ImplicitFigure",
    "InvalidOrder",
    "Isometry",
    "IsometryKind",
    "Line2",
    "Line3",
    "Mechanism",
    "MergeConflict",
    "MirrorPlane",
    "ModelError",
    "NoSamples",
    "NotQuadratic",
    "ParseError",
    "Plane3",
    "PointFigure",
    "QuadricCoeffs",
    "SingularMatrix",
    "SymmetryGroup",
    "SymtrussError",
    "TrussModel",
    "assemble",
    "builtin_case",
    "check_definition",
    "classify_conic",
    "classify_isometry",
    "classify_quadric",
    "compare",
    "conic_symmetry",
    "cyclic",
    "dihedral",
    "element_geometry",
    "element_stiffness",
    "generate",
    "generate_ring",
    "group_from_matrices",
    "image",
    "is_invariant",
    "is_symmetric",
    "load_matrix_set",
    "load_model",
    "orbit",
    "parse_quadratic",
    "reduced_system",
    "reflection2",
    "resolve_model",
    "rotation2",
    "rotation3_z",
    "save_model",
    "sigma_h",
    "solve",
    "solve_dense",
    "symmetry_elements",
    "transform_model",
    "vec2",
    "vec3",
    "verify_group",
]
