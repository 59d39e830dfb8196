"""Exception hierarchy shared by every module of the package."""


class SVNError(Exception):
    """Base class for all errors raised by svnfilter."""


class GradeOutOfRange(SVNError, ValueError):
    pass


class UniverseMismatch(SVNError, ValueError):
    pass


class EmptyFamily(SVNError, ValueError):
    pass


class EmptySet(SVNError, ValueError):
    pass


class NotASubbase(SVNError, ValueError):
    pass


class NotAFilterBase(SVNError, ValueError):
    pass


class NotMeeting(SVNError, ValueError):
    pass


class FamilyTooLarge(SVNError, ValueError):
    pass


class BudgetExceeded(SVNError, RuntimeError):
    pass


class GradeOutsideLattice(SVNError, ValueError):
    pass


class NotAFilter(SVNError, ValueError):
    pass


class _LookupError(SVNError, KeyError):
    # KeyError would quote the message
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class UnknownProposition(_LookupError):
    pass


class ParseError(SVNError, ValueError):
    """Malformed workspace document; carries 1-based line/column when known."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class DuplicateName(SVNError, ValueError):
    pass


class UnknownElement(SVNError, ValueError):
    pass


class UnknownName(_LookupError):
    pass


class ExpressionSyntaxError(SVNError, SyntaxError):
    """Malformed expression; ``position`` is the 0-based offset of the offending token."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position
