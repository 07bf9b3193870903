"""Exception types shared across the package.

Separate classes (rather than bare ValueError) so callers and the CLI can
map failure modes to distinct exit codes.
"""


class FramerepError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(FramerepError):
    """Operands disagree on ambient dimensions or coefficient index sizes."""


class NotAFrame(FramerepError):
    """The vector family does not span its ambient space (lower bound A = 0)."""


class NotBijective(FramerepError):
    """An operator, or the restricted coefficient map, fails a bijectivity test."""


class FormulaMismatch(FramerepError):
    """Alternative inversion formulas disagree beyond tolerance.

    Signals a convention error or an input outside the regime where the
    equalities hold (e.g. cross-operator sandwiches with mismatched
    coefficient ranges).
    """


class XiIsRiesz(FramerepError):
    """No decomposition counterexample exists: the middle frame is a Riesz basis."""


class BadGeneratorParams(FramerepError):
    """Frame generator parameters are inconsistent or unsupported."""


class IllConditioned(FramerepError):
    """Frame conditioning is too poor for the requested tolerance guarantees."""


class ParseError(FramerepError):
    """An input file is missing, malformed, or fails schema validation."""
