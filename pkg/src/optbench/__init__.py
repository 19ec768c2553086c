"""Multimodal continuous benchmark functions for testing optimisation methods.

Every function class can be instantiated directly::

    >>> import optbench as ob
    >>> f = ob.Schwefel(n_dimensions=4)
    >>> f([25, -34.6, -112.231, 242])
    -129.38197657025287

or by name with ``ob.instantiate("Schwefel", 4)``.
"""

from .core import BenchmarkFunction, Bounds, FunctionDescription, Optimum
from .exceptions import (
    BenchmarkError,
    DimensionMismatchError,
    DimensionNotAllowedError,
    MetadataError,
    NoKnownOptimumError,
    NonFiniteInputError,
    SearchBudgetError,
    UnknownFunctionError,
    UnknownParameterError,
    UnsupportedDimensionError,
)
from .functions import (
    Ackley,
    DeJong3,
    DeJong5,
    Easom,
    EggHolder,
    GoldsteinPrice,
    Griewank,
    Hyperellipsoid,
    Hypersphere,
    Keane,
    MartinGaddy,
    McCormick,
    Michalewicz,
    PichenyGoldsteinPrice,
    Rana,
    Rastrigin,
    Rosenbrock,
    SchafferN2,
    Schwefel,
    StyblinskiTang,
    catalog_list,
    get_function_class,
    instantiate,
)
from .metadata import (
    FunctionMetadata,
    dump_metadata,
    load_metadata,
    load_metadata_file,
    optima_for_dimension,
    validate_metadata,
)
from .plotting import export_surface_grid, render
from .search import SearchResult, minimum_grid_search, minimum_random_search
from .verify import VerificationReport, VerifierConfig, verify_all, verify_optimum

__version__ = "0.1.0"
