"""Exact symbolic engine for localized equivariant classes of configuration
spaces, their generating series, and limit stability checks."""

from .laurent import (LaurentPoly, RatFunc, UniverseMismatchError, VarUniverse,
                      ZeroDenominatorError, rf_eq)
from .partitions import (OrderedPartition, SetPartition, coefficient_a,
                         coefficient_a_graph_oracle, connected_sum_b,
                         enumerate_ordered_partitions, enumerate_partitions,
                         enumerate_refinements)
from .classes import (LocalClassData, ProjFixedPoint, TorusData, euler_point,
                      lambda_y_proj, mc_conf_affine, mc_conf_generic,
                      mc_conf_proj_at, mc_conf_proj_recursion, mc_line_classes,
                      mc_orbit_conf, mc_orbit_full, psi, standard_universe)
from .series import (PoleOrderError, TruncSeries, check_orbit_full_series,
                     check_orbit_series, check_partition_exp_identity,
                     check_point_series, check_point_series_ambient,
                     check_residue_form, orbit_full_series, orbit_series_sides,
                     residue_at, residue_form_factor)
from .limits import (LimitSpec, LimitUndefinedError, WeightedBundleSummand,
                     check_bb_stability, lambda_quotient, limit_lambda_quotient,
                     limit_map)

__version__ = "0.1.0"
