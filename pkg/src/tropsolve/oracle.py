"""Independent brute-force verifiers.

Nothing in this module reuses a closed-form solver's algebra: the grid
search evaluates objectives and constraints pointwise from the problem-kind
registry, and the cycle-mean spectral radius enumerates simple cycles
directly.  Determinism contract: identical (instance, grid, seed) inputs
produce identical results, and grid ties resolve to the lexicographically
smallest point in carrier order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DegenerateInputError, GridOverflowError, ShapeError
from .linalg import Matrix, is_regular_vector
from .problems import PROBLEM_KINDS
from .semifield import Scalar, Semifield
from .solvers import (
    INFEASIBLE,
    ComponentwiseFamily,
    OptimumReport,
    RaySolution,
)
from .systems import BoxSolutionSet, EmptySolutionSet, GeneratedSolutionSet

NO_FEASIBLE_POINT = "NO_FEASIBLE_POINT"

DEFAULT_GRID_CAP = 10_000_000

#: Sampling window magnitude in carrier units (one-sided extent).
DEFAULT_WINDOW = 10

_SAMPLE_DENOM = 16  # denominator of the random interpolation parameters


@dataclass(frozen=True)
class GridSpec:
    """Per-coordinate carrier intervals [lo, hi] walked with one step.

    Intervals are in the natural carrier order (lo <= hi as numbers);
    additive carriers advance by ``+ step`` and multiplicative carriers by
    ``* step`` (step > 1).  The point count is capped.
    """

    intervals: tuple[tuple[Scalar, Scalar], ...]
    step: Scalar
    cap: int = DEFAULT_GRID_CAP


@dataclass(frozen=True)
class GridResult:
    found: bool
    value: Scalar | None
    argbest: Matrix | None
    points_total: int
    points_feasible: int

    @property
    def reason(self) -> str | None:
        return None if self.found else NO_FEASIBLE_POINT


def _axis(sf: Semifield, lo: Scalar, hi: Scalar, step: Scalar) -> list[Scalar]:
    if lo.is_zero or hi.is_zero or step.is_zero:
        raise DegenerateInputError("grid bounds and step must be nonzero")
    lov, hiv, sv = lo.v, hi.v, step.v
    if lov > hiv:
        raise DegenerateInputError("grid interval must have lo <= hi")
    if sf.additive:
        if sv <= 0:
            raise DegenerateInputError("additive grid step must be positive")
        count = int((hiv - lov) / sv) + 1
        return [sf._wrap(lov + sv * i) for i in range(count)]
    if sv <= 1.0:
        raise DegenerateInputError("multiplicative grid step must exceed 1")
    out = []
    v = lov
    while v <= hiv * (1.0 + 1e-12):
        out.append(sf._wrap(v))
        v *= sv
    return out


def grid_search(kind: str, data: dict, grid: GridSpec) -> GridResult:
    """Exhaustive search of the kind's objective over a finite grid.

    Every grid point is regular by construction; the best feasible value
    and its first (lexicographically smallest) attaining point come back,
    or a not-found result when the grid holds no feasible point.
    """
    pk = PROBLEM_KINDS[kind]
    n = pk.dim(data)
    if len(grid.intervals) != n:
        raise ShapeError(
            f"grid has {len(grid.intervals)} intervals for dimension {n}")
    sf = grid.step.sf
    axes = [_axis(sf, lo, hi, grid.step) for lo, hi in grid.intervals]
    total = 1
    for ax in axes:
        total *= len(ax)
    if total > grid.cap:
        raise GridOverflowError(f"{total} grid points exceed the cap {grid.cap}")

    minimizing = pk.sense == "min"
    feasible = pk.feasible
    objective = pk.objective
    best: Scalar | None = None
    argbest: Matrix | None = None
    n_feasible = 0
    for combo in itertools.product(*axes):
        x = Matrix(sf, tuple((s,) for s in combo))
        if not feasible(data, x):
            continue
        n_feasible += 1
        val = objective(data, x)
        if best is None or (val < best if minimizing else best < val):
            best, argbest = val, x
    return GridResult(best is not None, best, argbest, total, n_feasible)


def cycle_mean_radius(a: Matrix, max_order: int = 8) -> Scalar:
    """Spectral radius by direct enumeration of simple cycles.

    Joins weight^(1/k) over every simple cycle of length k <= n; the zero
    scalar means the digraph of A has no nonzero cycle.  Exhaustive, so
    the order is capped (default 8).
    """
    a._require_square("cycle_mean_radius")
    n = a.rows
    if n > max_order:
        raise DegenerateInputError(
            f"cycle enumeration capped at order {max_order}, got {n}")
    sf = a.sf
    best = sf.zero
    for size in range(1, n + 1):
        root = Fraction(1, size)
        for subset in itertools.combinations(range(n), size):
            first, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                cycle = (first,) + perm
                weight = sf.one
                for idx in range(size):
                    edge = a[cycle[idx], cycle[(idx + 1) % size]]
                    if edge.is_zero:
                        weight = None
                        break
                    weight = weight * edge
                if weight is not None:
                    best = best + weight ** root
    return best


# ----------------------------------------------------------------------
# solution-set sampling

def _window_scalar(sf: Semifield, window) -> Scalar:
    w = sf.scalar(window)
    if not sf.one <= w:
        w = w.inv()
    return w if sf.one <= w else sf.one


def _coord_sample(lo: Scalar | None, hi: Scalar | None, t: Fraction,
                  w: Scalar, sf: Semifield) -> Scalar:
    lo_ok = lo is not None and not lo.is_zero
    hi_ok = hi is not None and not hi.is_zero
    if lo_ok and hi_ok:
        return lo * (lo.inv() * hi) ** t
    if hi_ok:
        return hi * (w ** t).inv()
    if lo_ok:
        return lo * w ** t
    return sf.one * w ** (2 * t - 1)


def sample_solution_set(solution, count: int, seed: int,
                        window=DEFAULT_WINDOW) -> list[Matrix]:
    """Deterministic members of a solution set.

    Boundary vectors come first when they are regular; the rest are random
    points, interpolated with exact rational parameters so that additive
    carriers stay in the rationals.  Unbounded directions are explored
    within a window of ``window`` carrier units.
    """
    if isinstance(solution, EmptySolutionSet) or getattr(solution, "is_empty", False):
        raise DegenerateInputError("cannot sample an empty solution set")
    rng = random.Random(seed)
    t_rand = lambda: Fraction(rng.randint(0, _SAMPLE_DENOM), _SAMPLE_DENOM)

    if isinstance(solution, BoxSolutionSet):
        sf = (solution.lower or solution.upper).sf
        w = _window_scalar(sf, window)
        out = []
        for bound in (solution.lower, solution.upper):
            if bound is not None and is_regular_vector(bound) and len(out) < count:
                out.append(bound)
        n = (solution.lower or solution.upper).dim
        while len(out) < count:
            out.append(Matrix(sf, tuple(
                (_coord_sample(
                    solution.lower[i] if solution.lower is not None else None,
                    solution.upper[i] if solution.upper is not None else None,
                    t_rand(), w, sf),)
                for i in range(n))))
        return out

    if isinstance(solution, GeneratedSolutionSet):
        sf = solution.generator.sf
        w = _window_scalar(sf, window)
        n = solution.generator.cols
        us = []
        for bound in (solution.lower, solution.upper):
            if bound is not None and is_regular_vector(bound) and len(us) < count:
                us.append(bound)
        while len(us) < count:
            us.append(Matrix(sf, tuple(
                (_coord_sample(
                    solution.lower[i] if solution.lower is not None else None,
                    solution.upper[i] if solution.upper is not None else None,
                    t_rand(), w, sf),)
                for i in range(n))))
        return [solution.generator @ u for u in us]

    if isinstance(solution, RaySolution):
        sf = solution.direction.sf
        w = _window_scalar(sf, window)
        alphas = [sf.one]
        while len(alphas) < count:
            alphas.append(sf.one * w ** (2 * t_rand() - 1))
        return [alpha * solution.direction for alpha in alphas]

    if isinstance(solution, ComponentwiseFamily):
        if any(b is None for i, b in enumerate(solution.upper_bounds)
               if i != solution.pinned_index):
            raise DegenerateInputError(
                "family has unbounded coordinates; cannot sample")
        sf = solution.pinned_value.sf
        w = _window_scalar(sf, window)
        k = solution.pinned_index
        out = []
        first = True
        while len(out) < count:
            alpha = sf.one if first else sf.one * w ** (2 * t_rand() - 1)
            entries = []
            for j, b in enumerate(solution.upper_bounds):
                if j == k:
                    entries.append(alpha * solution.pinned_value)
                else:
                    cap = alpha * b
                    entries.append(cap if first else cap * (w ** t_rand()).inv())
            first = False
            u = Matrix(sf, tuple((e,) for e in entries))
            out.append(u if solution.generator is None
                       else solution.generator @ u)
        return out

    raise TypeError(f"cannot sample {solution!r}")


# ----------------------------------------------------------------------
# end-to-end verification of solver reports

@dataclass(frozen=True)
class VerificationReport:
    kind: str
    solver_status: str
    solver_optimum: Scalar | None
    grid_optimum: Scalar | None
    gap: Fraction | float | None
    grid_beats_solver: bool
    samples_checked: int
    feasibility_failures: tuple[int, ...]
    attainment_failures: tuple[int, ...]
    grid_points: int
    passed: bool


def anchor_member(report: OptimumReport) -> Matrix:
    """One exact, regular, optimum-attaining member of the reported set."""
    sol = report.solution
    if isinstance(sol, BoxSolutionSet):
        for bound in (sol.lower, sol.upper):
            if bound is not None and is_regular_vector(bound):
                return bound
        raise DegenerateInputError("box has no regular bound to anchor on")
    if isinstance(sol, GeneratedSolutionSet):
        if sol.upper is not None and is_regular_vector(sol.upper):
            u = sol.upper
        else:
            ones = Matrix.ones(sol.generator.sf, sol.generator.cols, 1)
            u = ones if sol.lower is None else sol.lower + ones
        return sol.generator @ u
    if isinstance(sol, RaySolution):
        return sol.direction
    if isinstance(sol, ComponentwiseFamily):
        sf = sol.pinned_value.sf
        entries = [sol.pinned_value if j == sol.pinned_index else b
                   for j, b in enumerate(sol.upper_bounds)]
        if any(e is None for e in entries):
            raise DegenerateInputError("family has unbounded coordinates")
        u = Matrix(sf, tuple((e,) for e in entries))
        return u if sol.generator is None else sol.generator @ u
    raise TypeError(f"no anchor for {sol!r}")


def default_step(n: int) -> Fraction:
    """Lattice that contains every optimum of integer-data instances of
    dimension n: denominators of the optima divide lcm(1..n+1)."""
    return Fraction(1, lcm(*range(1, n + 2)))


def default_grid(kind: str, data: dict, report: OptimumReport,
                 step: Fraction | None = None,
                 margin: Fraction | None = None,
                 cap: int = DEFAULT_GRID_CAP) -> GridSpec:
    """Grid centered on an exact attaining member of the reported set.

    Margins shrink with the dimension to keep the point count small; the
    anchor lies on the grid, so the grid optimum can match the reported
    one exactly.  Additive carriers only.
    """
    pk = PROBLEM_KINDS[kind]
    n = pk.dim(data)
    anchor = anchor_member(report)
    sf = anchor.sf
    if not sf.additive:
        raise DegenerateInputError(
            "default grids are defined for additive carriers only")
    if step is None:
        step = default_step(n)
    if margin is None:
        margin = Fraction(1) if n <= 2 else Fraction(1, 3)
    margin = step * max(1, round(margin / step))  # keep the anchor on-grid
    intervals = tuple(
        (sf.scalar(anchor[i].v - margin), sf.scalar(anchor[i].v + margin))
        for i in range(n))
    return GridSpec(intervals, sf.scalar(step), cap)


def data_span_grid(kind: str, data: dict, step: Fraction | None = None,
                   margin: Fraction = Fraction(1),
                   cap: int = DEFAULT_GRID_CAP) -> GridSpec:
    """Grid spanning the range of all carrier values in the instance data.

    Used when there is no attaining anchor to center on, e.g. to confirm
    an infeasibility verdict.  Additive carriers only.
    """
    pk = PROBLEM_KINDS[kind]
    n = pk.dim(data)
    payloads = []
    for value in data.values():
        if isinstance(value, Matrix):
            payloads.extend(s.v for r in value.data for s in r if s.v is not None)
        elif isinstance(value, Scalar) and value.v is not None:
            payloads.append(value.v)
    if not payloads:
        payloads = [Fraction(0)]
    sf = next(iter(data.values())).sf
    if not sf.additive:
        raise DegenerateInputError(
            "data-span grids are defined for additive carriers only")
    if step is None:
        step = default_step(n)
    lo, hi = min(payloads) - margin, max(payloads) + margin
    intervals = tuple((sf.scalar(lo), sf.scalar(hi)) for _ in range(n))
    return GridSpec(intervals, sf.scalar(step), cap)


def _carrier_gap(a: Scalar, b: Scalar):
    if a.is_zero and b.is_zero:
        return Fraction(0) if a.sf.additive else 1.0
    if a.sf.additive:
        return abs(a.v - b.v)
    hi, lo = (a.v, b.v) if a.v >= b.v else (b.v, a.v)
    return hi / lo


def verify_report(kind: str, data: dict, report: OptimumReport,
                  grid: GridSpec | None = None, samples: int = 20,
                  seed: int = 0, window=DEFAULT_WINDOW,
                  tol=None) -> VerificationReport:
    """Cross-check a solver report against sampling and grid search.

    Checks: (a) sampled members are feasible, (b) they attain the reported
    optimum exactly, (c) the grid optimum never beats the reported one and
    matches it within ``tol`` (exact match when ``tol`` is None).
    """
    pk = PROBLEM_KINDS[kind]

    if report.status == INFEASIBLE:
        if grid is None:
            raise DegenerateInputError(
                "verifying an infeasible report needs an explicit grid")
        res = grid_search(kind, data, grid)
        return VerificationReport(
            kind, report.status, None, res.value,
            None, grid_beats_solver=res.found, samples_checked=0,
            feasibility_failures=(), attainment_failures=(),
            grid_points=res.points_total, passed=not res.found)

    members = sample_solution_set(report.solution, samples, seed, window)
    bad_feas = tuple(i for i, x in enumerate(members)
                     if not pk.feasible(data, x))
    bad_att = tuple(i for i, x in enumerate(members)
                    if pk.objective(data, x) != report.optimum)

    if grid is None:
        grid = default_grid(kind, data, report)
    res = grid_search(kind, data, grid)
    minimizing = pk.sense == "min"
    beats = False
    gap = None
    grid_ok = False
    if res.found:
        gap = _carrier_gap(res.value, report.optimum)
        beats = (res.value < report.optimum if minimizing
                 else report.optimum < res.value)
        if tol is None:
            grid_ok = res.value == report.optimum
        else:
            grid_ok = not beats and gap <= tol
    passed = not bad_feas and not bad_att and res.found and grid_ok and not beats
    return VerificationReport(
        kind, report.status, report.optimum, res.value, gap, beats,
        len(members), bad_feas, bad_att, res.points_total, passed)
