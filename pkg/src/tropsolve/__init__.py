"""Exact linear algebra over idempotent semifields and direct solvers for
the catalog of tropical optimization problems, with brute-force oracles.

Quick start::

    >>> from tropsolve import MAX_PLUS, Matrix, vector, solve
    >>> a = Matrix.from_rows(MAX_PLUS, [[1, 2], [3, 4]])
    >>> report = solve("rayleigh", A=a)
    >>> report.optimum
    Scalar(4, max-plus)
"""

from .errors import (
    CarrierDomainError,
    DegenerateInputError,
    DocumentError,
    GridOverflowError,
    PreconditionError,
    ShapeError,
    TagMismatchError,
    TropsolveError,
    ZeroInversionError,
)
from .semifield import (
    MAX_PLUS,
    MAX_TIMES,
    MIN_PLUS,
    MIN_TIMES,
    SEMIFIELDS,
    Scalar,
    Semifield,
    inverse,
    leq,
    oplus,
    otimes,
    power,
)
from .linalg import (
    Matrix,
    StarClosure,
    conj_transpose,
    format_matrix,
    is_regular_vector,
    kleene_star,
    mat_add,
    mat_mul,
    mat_power,
    norm,
    ones_vector,
    parse_matrix,
    scal_mul,
    spectral_radius,
    trace,
    tr_functional,
    vector,
)
from .systems import (
    INFEASIBLE_BOX,
    NO_REGULAR_SOLUTION,
    BoxSolutionSet,
    EmptySolutionSet,
    GeneratedSolutionSet,
    principal_solution_leq,
    solve_sub_fixpoint,
)
from .solvers import (
    INFEASIBLE,
    OPTIMAL,
    SOLVERS,
    ComponentwiseFamily,
    OptimumReport,
    RaySolution,
    solve,
    solve_cheb_box,
    solve_cheb_image_lower,
    solve_cheb_kleene,
    solve_cheb_kleene_box,
    solve_new_boxed_spectral,
    solve_rayleigh,
    solve_rayleigh_affine,
    solve_rayleigh_box,
    solve_rayleigh_lower,
    solve_rayleigh_p_lower,
    solve_rayleigh_two_constraints,
    solve_span_max,
    solve_span_max_constrained,
    solve_span_max_norm,
    solve_span_min,
    solve_span_min_constrained,
    solve_span_min_special,
)
from .problems import PROBLEM_KINDS, ProblemKind
from .oracle import (
    DEFAULT_WINDOW,
    NO_FEASIBLE_POINT,
    GridResult,
    GridSpec,
    VerificationReport,
    anchor_member,
    cycle_mean_radius,
    default_grid,
    default_step,
    grid_search,
    sample_solution_set,
    verify_report,
)

__version__ = "0.1.0"
