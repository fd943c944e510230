"""Exception hierarchy shared by every module of the package."""


class KUError(ValueError):
    """Base class for all errors raised by kualgebra."""


class MalformedTable(KUError):
    pass


class NotKUAlgebra(KUError):
    """Raised when a table is well-formed but violates the axioms."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"not a KU-algebra: {report.summary()}")


class OutOfRange(KUError):
    pass


class EmptySubset(KUError):
    pass


class NotAPoset(KUError):
    pass


class NoLeastElement(KUError):
    pass


class BoundExceeded(KUError):
    pass


class RepresentationFailure(KUError):
    pass


class LengthMismatch(KUError):
    pass


class DuplicateWord(KUError):
    pass


class EmptyCode(KUError):
    pass


class ZeroColumn(KUError):
    pass


class ParseError(KUError):
    """Malformed input file; carries the offending path and 1-based line."""

    def __init__(self, kind, cause, path=None, line=None):
        self.kind = kind
        self.cause = cause
        self.path = path
        self.line = line
        where = path if path is not None else "<input>"
        if line is not None:
            where = f"{where}:{line}"
        super().__init__(f"{where}: malformed {kind}: {cause}")
