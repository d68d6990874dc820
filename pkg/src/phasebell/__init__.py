"""Bell tests with discrete phase measurements on correlated photon-number pairs."""

from .bell import (AngleSet, BellEvaluation, Functional, ZeroMarginalError, bell_ch_factorized,
                   bell_ch_general, bell_s_factorized, bell_s_general, correlation_e, evaluate,
                   optimize_psi)
from .binning import (BinaryJointTable, BinningScheme, SchemeKind, bin_distribution,
                      binned_curves, make_scheme, p_up_marginal, parse_scheme)
from .fock import (CoefficientVector, Source, bessel_i0, circle_coeffs, custom_coeffs,
                   equal_coeffs, read_coeff_file, tms_coeffs)
from .lhv import enumerate_lhv_bounds, mixture_check
from .phase import (RAW, RENORM, JointPhaseDistribution, Normalization, PhaseGrid,
                    joint_distribution, joint_prob, marginal_prob, oracle_joint_prob)

__version__ = "0.1.0"
