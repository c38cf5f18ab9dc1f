"""Regular graph construction, degree-preserving randomization and coupled
simulated annealing for small normalized second eigenvalues."""

from .anneal import AnnealChain, acceptance_probability, make_chain, partial_anneal
from .bounds import (
    BoundSet,
    Classification,
    bound_set,
    classify,
    expected_cycle_count,
    log_graph_count,
    ramanujan_threshold,
    strict_lower_bound,
    weak_lower_bound,
    weak_optimal_threshold,
)
from .estimator import CoupledAnnealingSearch, NormalizedSpectrum
from .exceptions import (
    ConvergenceFailure,
    DegenerateBase,
    DegreeTooLarge,
    GraphConfigError,
    InvalidCooling,
    MalformedGraph,
    ParityViolation,
    UnsupportedLength,
)
from .graph import (
    RegularGraph,
    check_parity,
    diameter,
    diameter_lower_bound,
    edges,
    generate_regular_graph,
    has_loops,
    is_regular,
)
from .mcsa import McsaConfig, RunRecord, coupled_annealing, define_coupling, perform_one_step
from .randomize import SwitchOutcome, count_cycles, n_switch_neighbor, random_regular_graph, switch_edges
from .spectrum import SpectrumReport, eigen_histogram, lambda2, normalized_spectrum

__version__ = "0.1.0"
