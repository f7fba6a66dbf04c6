"""Exception types shared across the library.

Exit-code mapping used by the CLI: input problems (malformed words,
unrealizable input, bad predicates) exit 2; invariant violations
(BoundViolation and friends) exit 3.
"""


class SphcurvesError(Exception):
    """Base class for all library errors."""


class MalformedWord(SphcurvesError):
    """Input text is not a double-occurrence word."""


class UnknownLabel(SphcurvesError):
    """A crossing label is not present in the word."""


class InvalidPosition(SphcurvesError):
    """A cut or arc position is out of range."""


class DegenerateResult(SphcurvesError):
    """An operation would produce a curve with zero crossings."""


class NotRealizable(SphcurvesError):
    """The word admits no sphere embedding."""


class NotReduced(SphcurvesError):
    """The curve has a reducible crossing where a reduced one is required."""


class PatternMismatch(SphcurvesError):
    """A discharge rule was applied to a face it does not match."""


class PredicateSyntaxError(SphcurvesError):
    """Tangle-predicate text failed to parse.

    Carries the character position of the failure for CLI diagnostics.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BoundViolation(SphcurvesError):
    """Depth-4 splice search exhausted without reaching a reducible curve.

    Signals either an implementation bug or a counterexample to the
    four-move bound; callers must treat it as a red alert, never as a
    reductivity value.
    """
