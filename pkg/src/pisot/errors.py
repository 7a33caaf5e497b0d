"""Exception hierarchy shared by all pisot modules."""


class PisotError(Exception):
    """Base class for every error raised by this package."""


# --- algebraic ---------------------------------------------------------------

class UnsupportedConductor(PisotError):
    pass


class PrecisionError(PisotError):
    pass


class PrecisionExhausted(PisotError):
    pass


class ParseError(PisotError):
    pass


class DiscriminantMismatch(PisotError):
    pass


class RankDeficient(PisotError):
    pass


class AmbiguousRounding(PisotError):
    pass


class DuplicateConjugates(PisotError):
    pass


class NotPisot(PisotError):
    pass


class NotMonic(PisotError):
    pass


# Alias: CLI-facing name for the same condition.
NonMonic = NotMonic


# --- lattice -----------------------------------------------------------------

class DimensionTooLarge(PisotError):
    pass


# --- pisotsearch -------------------------------------------------------------

class NotPrimitive(PisotError):
    pass


class SearchFailed(PisotError):
    pass


# --- powtrace / slp ----------------------------------------------------------

class BadModulus(PisotError):
    pass


class MalformedProgram(PisotError):
    """Raised for structurally invalid SLPs; carries a line number for parsed text."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


# --- polynomial expression grammar (cli) -------------------------------------

class PolySyntaxError(PisotError):
    """Syntax error in a polynomial expression; `offset` is the byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


SyntaxError = PolySyntaxError
