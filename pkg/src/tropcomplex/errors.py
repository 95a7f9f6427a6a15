"""Exception types shared across the package.

Every error raised on invalid mathematical input derives from InputError so
the command line driver can map them to exit code 2 uniformly.
"""


class InputError(ValueError):
    """Base class for errors caused by invalid input data."""


class SimplicialIdentityViolation(InputError):
    def __init__(self, simplex, i, j):
        self.simplex = simplex
        self.i = i
        self.j = j
        super().__init__(
            "simplicial identity fails at %s: d_%d d_%d != d_%d d_%d"
            % (simplex, i, j, j - 1, i)
        )


class Disconnected(InputError):
    pass


class DimensionExceeded(InputError):
    pass


class MissingAlpha(InputError):
    pass


class WrongDimension(InputError):
    pass


class IndexMismatch(InputError):
    pass


class DegenerateCut(InputError):
    pass


class DiscontinuousInput(InputError):
    pass


class NotQCartierNearCurve(InputError):
    pass


class NotBalanced(InputError):
    pass


class UnsupportedDimension(InputError):
    pass


class InconsistentSheets(InputError):
    pass


class NonUnimodular(InputError):
    pass


class NoSolution(InputError):
    pass


class NotConstantOnUnbounded(InputError):
    pass


class InconsistentData(InputError):
    def __init__(self, message, ridge=None):
        self.ridge = ridge
        super().__init__(message)


class UnknownName(InputError):
    pass


class PreconditionFailed(InputError):
    def __init__(self, verdict, message):
        self.verdict = verdict
        super().__init__("%s: %s" % (verdict, message))
