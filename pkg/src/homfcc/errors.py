"""Exception hierarchy. Each class carries the CLI exit code it maps to.

Exit code 2 is left to argparse usage errors.
"""


class FCCError(Exception):
    exit_code = 1


class DomainError(FCCError, ValueError):
    """A symbol or parameter lies outside its admissible range."""
    exit_code = 3


class ShapeError(FCCError, ValueError):
    """Lengths, arities or ring parameters of the operands disagree."""
    exit_code = 4


class UndefinedDistanceError(FCCError, ValueError):
    exit_code = 5


class ResourceLimitError(FCCError):
    """An enumeration would exceed the configured cardinality cap."""
    exit_code = 6


class IntegrityError(FCCError):
    exit_code = 7


class HypothesisError(FCCError):
    """A construction was requested while one of its hypotheses fails.

    The message names the failing hypothesis.
    """
    exit_code = 8


class PreconditionError(FCCError, ValueError):
    exit_code = 9
