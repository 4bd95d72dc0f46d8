"""Exception types shared across the package."""


class SeppackError(Exception):
    """Base class for all library errors."""


class KindError(SeppackError, TypeError):
    """Mixed or unsupported scalar kinds (rational vs float)."""


class DomainError(SeppackError, ValueError):
    """A parameter is outside an operation's contract."""


class ParseError(SeppackError, ValueError):
    """Malformed input text or JSON; carries a line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PackingError(SeppackError, ValueError):
    """Two translates overlap; carries the offending index pair."""

    def __init__(self, i: int, j: int, detail: str = ""):
        msg = f"translates {i} and {j} overlap"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.pair = (i, j)


class ConstructionGapError(SeppackError, RuntimeError):
    """A generator failed to reach a count that is provably attainable."""
