from optowork import define
from optowork import errors
from optowork.core.check import CheckReport
from optowork.core.check import CheckResult
from optowork.core.check import random_standard_forms
from optowork.core.check import self_check
from optowork.core.config import config
from optowork.core.errors import ConfigError
from optowork.core.errors import DomainError
from optowork.core.errors import IndexOutOfRange
from optowork.core.errors import IoError
from optowork.core.errors import MaxWorkUndefined
from optowork.core.errors import NotPositiveDefinite
from optowork.core.errors import PatternMismatch
from optowork.core.errors import SingularSystem
from optowork.core.errors import UnknownPreset
from optowork.core.errors import UnstableSystem
from optowork.core.gaussian import CovarianceMatrix
from optowork.core.gaussian import TwoModeStandardForm
from optowork.core.gaussian import check_covariance
from optowork.core.gaussian import check_standard_form
from optowork.core.gaussian import direct_sum
from optowork.core.gaussian import is_physical
from optowork.core.gaussian import logarithmic_negativity
from optowork.core.gaussian import lyapunov_residual
from optowork.core.gaussian import min_pt_symplectic_eigenvalue
from optowork.core.gaussian import partial_transpose
from optowork.core.gaussian import reduce
from optowork.core.gaussian import renyi2_entropy
from optowork.core.gaussian import solve_lyapunov
from optowork.core.gaussian import standard_form
from optowork.core.gaussian import symplectic_eigenvalues
from optowork.core.gaussian import symplectic_form
from optowork.core.gaussian import thermal_state
from optowork.core.gaussian import two_mode_squeezed_vacuum
from optowork.core.gaussian import vacuum
from optowork.core.parameter import Parameter
from optowork.core.parameter import Parameters
from optowork.core.parameter import system1_parameters
from optowork.core.parameter import system2_parameters
from optowork.core.preset import ALIASES
from optowork.core.preset import available_presets
from optowork.core.preset import preset_config
from optowork.core.preset import run_figure_preset
from optowork.core.sweep import Dataset
from optowork.core.sweep import SweepConfig
from optowork.core.sweep import emit_csv
from optowork.core.sweep import evaluate_point
from optowork.core.sweep import metadata_path
from optowork.core.sweep import parse_config_file
from optowork.core.sweep import sweep
from optowork.core.system1 import ClosedFormBlocks
from optowork.core.system1 import PhysicalCavitySpec
from optowork.core.system1 import StabilityReport
from optowork.core.system1 import System1Params
from optowork.core.system1 import closed_form_blocks
from optowork.core.system1 import cooperativity_from_physical
from optowork.core.system1 import drift_matrix
from optowork.core.system1 import effective_coupling_from_physical
from optowork.core.system1 import mirror_optic_block
from optowork.core.system1 import noise_matrix
from optowork.core.system1 import stability_check
from optowork.core.system1 import steady_state_cm
from optowork.core.system1 import subsystem_cm
from optowork.core.system2 import EvolutionCoefficients
from optowork.core.system2 import System2Params
from optowork.core.system2 import evolution_coefficients
from optowork.core.system2 import evolution_matrices
from optowork.core.system2 import optic_optic_cm
from optowork.core.system2 import printed_tripartite_cm
from optowork.core.system2 import tripartite_cm
from optowork.core.thermo import DoubleMeasurementSpec
from optowork.core.thermo import MeasurementSpec
from optowork.core.thermo import WorkReport
from optowork.core.thermo import conditional_cm
from optowork.core.thermo import detector_cm
from optowork.core.thermo import outcome_mutual_information
from optowork.core.thermo import work_double
from optowork.core.thermo import work_max
from optowork.core.thermo import work_report
from optowork.core.thermo import work_separable_bound
from optowork.core.thermo import work_single


# Disencourage from optowork import *
__all__ = []


# Dynamically get the version of the installed module
try:
    import importlib.metadata

    __version__ = importlib.metadata.version(__name__)
except Exception:  # pragma: no cover
    importlib = None  # pragma: no cover
finally:
    del importlib
