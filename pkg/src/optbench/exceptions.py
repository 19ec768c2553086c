"""Exception hierarchy shared by every module of the package."""


class BenchmarkError(Exception):
    """Base class for all errors raised by optbench."""


class UnknownFunctionError(BenchmarkError, LookupError):
    pass


class DimensionNotAllowedError(BenchmarkError, ValueError):
    """The requested dimensionality is not permitted for this function."""


class UnknownParameterError(BenchmarkError, ValueError):
    pass


class DimensionMismatchError(BenchmarkError, ValueError):
    """A point (or optimum) does not have the instance's number of coordinates."""


class NonFiniteInputError(BenchmarkError, ValueError):
    pass


class NoKnownOptimumError(BenchmarkError, LookupError):
    pass


class MetadataError(BenchmarkError, ValueError):
    """A metadata document could not be parsed or violates the schema.

    ``problems`` lists every schema problem found, not only the first one.
    """

    def __init__(self, message, problems=()):
        super().__init__(message)
        self.problems = list(problems)


class SearchBudgetError(BenchmarkError, ValueError):
    """A grid search would evaluate more points than the configured cap."""


class UnsupportedDimensionError(BenchmarkError, ValueError):
    """Plotting is only available for one- and two-dimensional instances."""
