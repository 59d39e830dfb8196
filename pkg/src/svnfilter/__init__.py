"""Exact single valued neutrosophic set algebra, filters on it, and a claim verifier."""

from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .filters import *  # noqa: F401,F403
from .filters import __all__ as _filters_all
from .lattice import *  # noqa: F401,F403
from .lattice import __all__ as _lattice_all
from .maps import *  # noqa: F401,F403
from .maps import __all__ as _maps_all
from .expr import evaluate
from .errors import (
    SVNError,
    GradeOutOfRange,
    UniverseMismatch,
    EmptyFamily,
    EmptySet,
    NotASubbase,
    NotAFilterBase,
    NotMeeting,
    FamilyTooLarge,
    BudgetExceeded,
    GradeOutsideLattice,
    NotAFilter,
    UnknownProposition,
    ParseError,
    DuplicateName,
    UnknownElement,
    UnknownName,
    ExpressionSyntaxError,
)
from .tables import format_grade, render_set
from .workspace import Workspace, dump_workspace, load_workspace, loads_workspace, serialize

__version__ = "0.1.0"

__all__ = [
    *_core_all,
    *_filters_all,
    *_lattice_all,
    *_maps_all,
    "evaluate",
    "SVNError",
    "GradeOutOfRange",
    "UniverseMismatch",
    "EmptyFamily",
    "EmptySet",
    "NotASubbase",
    "NotAFilterBase",
    "NotMeeting",
    "FamilyTooLarge",
    "BudgetExceeded",
    "GradeOutsideLattice",
    "NotAFilter",
    "UnknownProposition",
    "ParseError",
    "DuplicateName",
    "UnknownElement",
    "UnknownName",
    "ExpressionSyntaxError",
    "format_grade",
    "render_set",
    "Workspace",
    "dump_workspace",
    "load_workspace",
    "loads_workspace",
    "serialize",
]
