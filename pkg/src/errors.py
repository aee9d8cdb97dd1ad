"""
Exception hierarchy for the Berge-Turán toolkit

Every library function raises one of these. Only the CLI turns them into
exit codes (each class carries its `exit_code`); everything else lets them propagate.
"""


class BergeTuranError(Exception):
    """Base class for toolkit errors"""

    exit_code = 1


class InvalidParameterError(BergeTuranError, ValueError):
    """A numeric parameter is outside its domain (r = 0, k < 3, u in S, ...)"""

    exit_code = 1


class InvalidInputError(BergeTuranError, ValueError):
    """A graph, hypergraph or token could not be parsed or is malformed"""

    exit_code = 1


class CapExceededError(BergeTuranError):
    """The instance is larger than a configured search cap or guard"""

    exit_code = 2


class InvariantViolationError(BergeTuranError):
    """A proven inequality or a witness revalidation failed"""

    exit_code = 3

