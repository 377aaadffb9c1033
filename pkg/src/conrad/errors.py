"""Exception hierarchy shared by all conrad modules."""


class ConradError(Exception):
    """Base class for every error raised by this package."""


# -- structure construction / validation ------------------------------------

class SemanticError(ConradError):
    """A structurally well-formed input describes an invalid object."""


class MissingEmptyOrFull(SemanticError):
    pass


class NotClosedUnderUnion(SemanticError):
    pass


class NotClosedUnderIntersection(SemanticError):
    pass


class PolicyMismatch(ConradError):
    pass


class BoundExceeded(ConradError):
    pass


class EmptySubset(ConradError):
    pass


# -- congruence validation ----------------------------------------------------

class InvalidCongruence(ConradError):
    pass


class NotATopology(InvalidCongruence):
    pass


class NotSubTopology(InvalidCongruence):
    pass


class NotSaturated(InvalidCongruence):
    pass


class EdgeSetOutOfRange(InvalidCongruence):
    pass


class SubstitutionViolated(InvalidCongruence):
    pass


class IndependenceViolated(InvalidCongruence):
    pass


# -- maps ---------------------------------------------------------------------

class NotContinuous(ConradError):
    pass


class NotHomomorphism(ConradError):
    pass


class NotSurjective(ConradError):
    pass


# -- lattice / calculus -------------------------------------------------------

class EmptyList(ConradError):
    pass


class NotContained(ConradError):
    pass


class TrivialSpace(ConradError):
    pass


class SearchExhausted(ConradError):
    """A decomposition that must exist at desk scale was not found."""


# -- radical engine -----------------------------------------------------------

class KindMismatch(ConradError):
    pass


class KindUnsupported(ConradError):
    pass


class NoQualifyingCongruence(ConradError):
    pass


class LemmaConditionFailed(ConradError):
    """Not every structure admits a quotient inside the given class."""


class BadCatalogId(ConradError):
    pass


class CheckDefect(ConradError):
    """Two routes that must agree disagreed; indicates a defect, not a FAIL."""


# -- parsing / CLI ------------------------------------------------------------

class InputSyntaxError(ConradError):
    """Malformed input text; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UsageError(ConradError):
    pass
