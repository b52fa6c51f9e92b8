"""Exception types shared across the toolkit."""


class DwlabError(Exception):
    pass


class SizeCapError(DwlabError):
    """An exact solver was asked to exceed its configured size cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: instance size {n} exceeds cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap


class TournamentFormatError(DwlabError, ValueError):
    """Malformed tournament file; carries a line/column diagnostic."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.col = col


class NotSparseError(DwlabError):
    """Operation requires a sparse tournament or a sparse ordering."""


class NotNiceOrderingError(DwlabError):
    """Ordering does not respect the reduction-instance block layout."""
