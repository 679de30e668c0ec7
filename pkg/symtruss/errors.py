"""Exception hierarchy shared by the library and the command line.

Library code raises these; only ``cli.main`` turns them into exit codes.
"""

from __future__ import annotations


class SymtrussError(Exception):
    """Base class. ``exit_code`` is what the CLI returns for this failure."""

    exit_code = 1


class GroupAxiomFailure(SymtrussError):
    exit_code = 2


class DegreeError(SymtrussError):
    """Monomial of total degree above two."""

    exit_code = 3


class NotQuadratic(SymtrussError):
    exit_code = 3


class CrossTermsUnsupported(SymtrussError):
    """Quadric with xy, xz or yz terms (would need a principal-axis rotation)."""

    exit_code = 3


class ParseError(SymtrussError):
    exit_code = 4

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SingularMatrix(SymtrussError):
    exit_code = 5


class Mechanism(SymtrussError):
    """Reduced stiffness matrix is singular: the structure can move without straining."""

    exit_code = 5


class ModelError(SymtrussError):
    exit_code = 6


class MergeConflict(ModelError):
    pass


class InvalidOrder(SymtrussError):
    exit_code = 6


class NoSamples(SymtrussError):
    exit_code = 6
