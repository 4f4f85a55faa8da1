"""Pseudospectral gap functions, spectral localizers and joint approximate
eigenvectors for tuples of Hermitian and non-Hermitian matrices."""

from .bounds import (
    BoundReport,
    check_linear_vs_quadratic,
    check_linear_vs_radial,
    check_locality,
    check_radial_vs_quadratic,
)
from .clifford import CliffordRep, build_rep, verify_rep
from .errors import ConfigError, InputError
from .gaps import (
    ResidualCertificate,
    clifford_linear_gap,
    clifford_radial_gap,
    extract_approx_eigvec,
    gap_record,
    reverse_membership_eps,
    single_matrix_pseudospectrum_eps,
)
from .kernels import (
    NormalityDeparture,
    SpectralSummary,
    departure_from_normality,
    eigenvalues,
    hermiticity_defect,
    opnorm,
    sigma_min,
    summarize,
)
from .localizer import (
    MatrixTuple,
    ProbeSite,
    commutator_sum_norm,
    f_term,
    f_term_norm,
    hermitian_localizer,
    nh_localizer,
)
from .models import (
    HaldaneParams,
    LatticeModel,
    RegionParams,
    TwoLevelParams,
    build_haldane_heterostructure,
    build_tls,
    exceptional_point_locus,
    export_model,
    load_interchange,
    scaled_tuple,
)
from .quadratic import (
    GapRecord,
    QuadraticOperators,
    build_quadratic,
    expectation_variance,
    quadratic_epsilon_membership,
    quadratic_gaps,
    rm_stack,
)
from .sweep import (
    Axis,
    SweepConfig,
    SweepResult,
    check_suite,
    diff_maps,
    load_config,
    parse_config,
    read_sweep_csv,
    run_sweep,
    write_sweep_csv,
)

__version__ = "0.1.0"
