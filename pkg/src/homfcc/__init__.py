"""Function-correcting codes for the homogeneous metric over Z_{2^s}."""
from .ring import (Code, RingParams, Word, ball, hom_distance, hom_weight, hom_weight_symbol,
                   min_distance, sphere)
from .functions import (FunctionSpec, Kind, analyze_linear, evaluate, hom_weight_function, image,
                        linear, modular_sum, modular_sum_as_linear, table_function, weight_distribution)
from .locality import (build_tau, check_locally_bounded, contiguous_block_check, function_ball, lambda0,
                       theoretical_locality_bounds)
from .bounds import (RequirementMatrix, linear_plotkin_bound, modular_sum_lower_bound, plotkin_bound_generic,
                     plotkin_bound_z4, redundancy_lower_bound, requirement_matrix, upper_bound_from_lambda)
from .search import SearchResult, exact_Nh
from .encoders import (SystematicEncoder, code_from_generator, encoder_lambda4, encoder_linear,
                       encoder_modular_sum, encoder_via_tau, explicit_code)
from .verify import VerificationReport, exact_optimal_redundancy, simulate_channel, verify_fcc

__version__ = "0.1.0"
