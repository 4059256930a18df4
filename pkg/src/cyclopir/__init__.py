"""cyclopir: cyclic-code toolkit and PIR-over-coded-storage laboratory."""

from .cyclic import CyclicCode, code_from_cosets, coset_representatives, cyclotomic_coset, parse_code_spec
from .distance import (
    DEEP_BUDGET,
    DEFAULT_BUDGET,
    DistanceReport,
    WeightDistribution,
    macwilliams_transform,
    min_distance,
    random_minweight_search,
    weight_distribution_exhaustive,
)
from .gf import GF, field_build, field_for_root_of_unity, minimal_polynomial
from .kernels import HAVE_COMPILED
from .pir import PirParameters, evaluate_scheme, compare_schemes
from .protocol import (
    Database,
    encode_storage,
    plan_rounds,
    privacy_check,
    random_database,
    run_full_retrieval,
)
from .reed_muller import (
    punctured_rm_as_cyclic,
    puncture_at_zero,
    rm_generator_matrix,
    rm_parameters,
    shorten_at_zero,
    star_identity_holds,
)
from .search import SearchSpec, search_pir_codes
from .tables import REFERENCE_TABLES, reproduce_table

__version__ = "0.1.0"
