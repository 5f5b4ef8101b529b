"""Direct closed-form solvers for the catalog of tropical optimization problems.

Every solver validates its stated preconditions eagerly.  Structural defects
(wrong regularity of the data, a zero spectral radius) raise
:class:`PreconditionError`; data-dependent emptiness (a trace gate above one,
incompatible bounds) produces an infeasible report with a machine-readable
reason.  An optimal report carries the exact optimum and an object describing
the complete solution set, except where a solver is documented to return a
single attaining point.

Solvers are addressed by stable kind identifiers through :data:`SOLVERS` and
:func:`solve`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import PreconditionError, ShapeError
from .linalg import (
    Matrix,
    is_regular_vector,
    ones_vector,
    spectral_radius,
    tr_functional,
)
from .semifield import Scalar
from .systems import (
    INFEASIBLE_BOX,
    NO_REGULAR_SOLUTION,
    BoxSolutionSet,
    GeneratedSolutionSet,
)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RaySolution:
    """All positive multiples of one regular direction vector."""

    direction: Matrix


@dataclass(frozen=True)
class ComponentwiseFamily:
    """Solutions with one pinned coordinate and per-coordinate caps.

    Members are ``x`` with ``x[k] = alpha * pinned_value`` and
    ``x[j] <= alpha * upper_bounds[j]`` for ``j != k``, over all scales
    ``alpha > zero``.  ``tied_pinned_indices`` lists every index achieving
    the pin criterion (the family is reported for the first; completeness
    under ties is not claimed).  When ``generator`` is present the family
    lives in an auxiliary variable ``u`` and members are ``x = generator @ u``.
    """

    pinned_index: int
    pinned_value: Scalar
    upper_bounds: tuple[Scalar | None, ...]
    support_index: int
    tied_pinned_indices: tuple[int, ...]
    generator: Matrix | None = None


@dataclass(frozen=True)
class OptimumReport:
    kind: str
    status: str
    optimum: Scalar | None
    solution: object | None
    reason: str | None
    diagnostics: tuple[tuple[str, bool], ...]


# ----------------------------------------------------------------------
# shared plumbing

def _val(m: Matrix) -> Scalar:
    return m.item()


def _require(cond: bool, name: str, diags: list) -> None:
    diags.append((name, bool(cond)))
    if not cond:
        raise PreconditionError(name)


def _gate(cond: bool, name: str, diags: list) -> bool:
    diags.append((name, bool(cond)))
    return bool(cond)


def _optimal(kind: str, optimum: Scalar, solution, diags: list) -> OptimumReport:
    return OptimumReport(kind, OPTIMAL, optimum, solution, None, tuple(diags))


def _infeasible(kind: str, reason: str, diags: list) -> OptimumReport:
    return OptimumReport(kind, INFEASIBLE, None, None, reason, tuple(diags))


def _expect_vec(x: Matrix, n: int, name: str) -> None:
    if x.cols != 1 or x.rows != n:
        raise ShapeError(f"{name} must be a column vector of dim {n}, got {x.shape}")


def _expect_square(a: Matrix, name: str) -> int:
    if a.rows != a.cols:
        raise ShapeError(f"{name} must be square, got {a.shape}")
    return a.rows


def _argbest(values: list[Scalar]) -> tuple[int, tuple[int, ...]]:
    """First index attaining the idempotent sum of `values`, plus all ties."""
    best = values[0].sf.sum(values)
    ties = tuple(i for i, v in enumerate(values) if v == best)
    return ties[0], ties


def _weak_compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _weak_compositions(total - head, parts - 1):
            yield (head,) + tail


def _matrix_powers(a: Matrix, top: int) -> list[Matrix]:
    """[I, A, ..., A^top]."""
    out = [Matrix.identity(a.sf, a.rows)]
    for _ in range(top):
        out.append(out[-1] @ a)
    return out


# ----------------------------------------------------------------------
# Chebyshev-like approximation under boundary and recursion constraints

def solve_cheb_box(p: Matrix, q: Matrix, g: Matrix, h: Matrix) -> OptimumReport:
    """Minimize ``q- x + x- p`` over the box ``g <= x <= h``.

    The optimum is ``(q- p)^(1/2) + q- g + h- p`` and the solutions fill
    a box whose bounds are returned exactly.
    """
    kind = "cheb_box"
    n = p.dim
    _expect_vec(q, n, "q")
    _expect_vec(g, n, "g")
    _expect_vec(h, n, "h")
    diags: list = []
    _require(is_regular_vector(p), "p regular", diags)
    _require(is_regular_vector(q), "q regular", diags)
    _require(is_regular_vector(h), "h regular", diags)
    if not _gate(g <= h, "g <= h", diags):
        return _infeasible(kind, INFEASIBLE_BOX, diags)
    mu = (_val(q.conj() @ p) ** _HALF) + _val(q.conj() @ g) + _val(h.conj() @ p)
    lower = (mu.inv() * p) + g
    upper = ((mu.inv() * q.conj()) + h.conj()).conj()
    sol = BoxSolutionSet(lower, upper)
    assert not sol.is_empty
    return _optimal(kind, mu, sol, diags)


def solve_cheb_image_lower(a: Matrix, p: Matrix, q: Matrix, g: Matrix) -> OptimumReport:
    """Minimize ``q- A x + (A x)- p`` subject to ``x >= g``.

    Returns one attaining point (as a degenerate box); the full minimizer
    set may be larger, which the diagnostics flag.
    """
    kind = "cheb_image_lower"
    m, n = a.shape
    _expect_vec(p, m, "p")
    _expect_vec(q, m, "q")
    _expect_vec(g, n, "g")
    diags: list = []
    _require(a.is_regular(), "A regular", diags)
    _require(is_regular_vector(p), "p regular", diags)
    _require(is_regular_vector(q), "q regular", diags)
    wc = (q.conj() @ a).conj()
    mu = (_val((a @ wc).conj() @ p) ** _HALF) + _val(q.conj() @ (a @ g))
    x = mu * wc
    diags.append(("solution reported as single point; set may be larger", True))
    return _optimal(kind, mu, BoxSolutionSet(x, x), diags)


def solve_cheb_kleene_box(b: Matrix, p: Matrix, q: Matrix,
                          g: Matrix, h: Matrix) -> OptimumReport:
    """Minimize ``x- p + q- x`` subject to ``B x + g <= x`` and ``x <= h``."""
    kind = "cheb_kleene_box"
    n = _expect_square(b, "B")
    for v, name in ((p, "p"), (q, "q"), (g, "g"), (h, "h")):
        _expect_vec(v, n, name)
    diags: list = []
    _require(not p.is_zero, "p nonzero", diags)
    _require(is_regular_vector(q), "q regular", diags)
    _require(is_regular_vector(h), "h regular", diags)
    if not _gate(tr_functional(b) <= b.sf.one, "Tr(B) <= one", diags):
        return _infeasible(kind, NO_REGULAR_SOLUTION, diags)
    bs = b.star()
    if not _gate(_val(h.conj() @ (bs @ g)) <= b.sf.one, "h- B* g <= one", diags):
        return _infeasible(kind, INFEASIBLE_BOX, diags)
    theta = ((_val(q.conj() @ (bs @ p)) ** _HALF)
             + _val(h.conj() @ (bs @ p))
             + _val(q.conj() @ (bs @ g)))
    lower = g + theta.inv() * p
    upper = ((h.conj() + theta.inv() * q.conj()) @ bs).conj()
    sol = GeneratedSolutionSet(bs, lower, upper)
    assert not sol.is_empty
    return _optimal(kind, theta, sol, diags)


def solve_cheb_kleene(b: Matrix, p: Matrix, q: Matrix) -> OptimumReport:
    """Minimize ``x- p + q- x`` subject to ``B x <= x``."""
    kind = "cheb_kleene"
    n = _expect_square(b, "B")
    _expect_vec(p, n, "p")
    _expect_vec(q, n, "q")
    diags: list = []
    _require(not p.is_zero, "p nonzero", diags)
    _require(is_regular_vector(q), "q regular", diags)
    if not _gate(tr_functional(b) <= b.sf.one, "Tr(B) <= one", diags):
        return _infeasible(kind, NO_REGULAR_SOLUTION, diags)
    bs = b.star()
    theta = _val(q.conj() @ (bs @ p)) ** _HALF
    lower = theta.inv() * p
    upper = theta * (q.conj() @ bs).conj()
    sol = GeneratedSolutionSet(bs, lower, upper)
    assert not sol.is_empty
    return _optimal(kind, theta, sol, diags)


# ----------------------------------------------------------------------
# span-seminorm problems

def solve_span_min(a: Matrix, b: Matrix, p: Matrix, q: Matrix) -> OptimumReport:
    """Minimize ``q- B x (A x)- p``; the minimizers form a single ray."""
    kind = "span_min"
    m, n = a.shape
    if b.shape != (m, n):
        raise ShapeError(f"B must match A's shape {(m, n)}, got {b.shape}")
    _expect_vec(p, m, "p")
    _expect_vec(q, m, "q")
    diags: list = []
    _require(a.is_row_regular(), "A row-regular", diags)
    _require(b.is_col_regular(), "B column-regular", diags)
    _require(not p.is_zero, "p nonzero", diags)
    _require(is_regular_vector(q), "q regular", diags)
    d = (q.conj() @ b).conj()
    delta = _val((a @ d).conj() @ p)
    return _optimal(kind, delta, RaySolution(d), diags)


def solve_span_min_special(a: Matrix) -> OptimumReport:
    """Minimize the span of ``A x`` (largest component over smallest)."""
    diags: list = []
    _require(a.is_regular(), "A regular", diags)
    ones = ones_vector(a.sf, a.rows)
    inner = solve_span_min(a, a, ones, ones)
    return replace(inner, kind="span_min_special",
                   diagnostics=tuple(diags) + inner.diagnostics)


def solve_span_min_constrained(c: Matrix, d: Matrix) -> OptimumReport:
    """Minimize the span of ``C x`` subject to ``D x <= x``."""
    kind = "span_min_constrained"
    n = _expect_square(c, "C")
    if d.shape != (n, n):
        raise ShapeError(f"D must be {n}x{n}, got {d.shape}")
    diags: list = []
    _require(c.is_regular(), "C regular", diags)
    if not _gate(tr_functional(d) <= d.sf.one, "Tr(D) <= one", diags):
        return _infeasible(kind, NO_REGULAR_SOLUTION, diags)
    ds = d.star()
    m = c @ ds
    w = (Matrix.ones(c.sf, 1, n) @ m).conj()
    delta = _val((m @ w).conj() @ ones_vector(c.sf, n))
    return _optimal(kind, delta, RaySolution(ds @ w), diags)


def solve_span_max(a: Matrix, b: Matrix, p: Matrix, q: Matrix) -> OptimumReport:
    """Maximize ``q- B x (A x)- p``.

    Requires every column of A to be regular, i.e. A free of zeros;
    with zero entries in A the objective is unbounded above and the
    closed form does not apply.
    """
    kind = "span_max"
    m, n = a.shape
    if b.cols != n:
        raise ShapeError(f"B must have {n} columns, got {b.shape}")
    _expect_vec(p, m, "p")
    _expect_vec(q, b.rows, "q")
    diags: list = []
    _require(a.has_regular_columns(), "A has regular columns", diags)
    _require(b.is_col_regular(), "B column-regular", diags)
    _require(is_regular_vector(p), "p regular", diags)
    _require(is_regular_vector(q), "q regular", diags)
    qc = q.conj()
    col_scores = [_val(qc @ b.column(i)) * _val(a.column(i).conj() @ p)
                  for i in range(n)]
    k, ties = _argbest(col_scores)
    delta = _val(qc @ b @ a.conj() @ p)
    assert delta == col_scores[k]
    s, _ = _argbest([a[i, k].inv() * p[i] for i in range(m)])
    pinned = _val(a.column(k).conj() @ p)
    bounds = tuple(None if j == k else a[s, j].inv() * p[s] for j in range(n))
    family = ComponentwiseFamily(k, pinned, bounds, s, ties)
    return _optimal(kind, delta, family, diags)


def solve_span_max_norm(a: Matrix, b: Matrix) -> OptimumReport:
    """Maximize ``norm(B x) * norm((A x)-)``; the optimum is ``norm(B A-)``."""
    inner = solve_span_max(a, b, ones_vector(a.sf, a.rows),
                           ones_vector(b.sf, b.rows))
    return replace(inner, kind="span_max_norm")


def solve_span_max_constrained(a: Matrix, b: Matrix, c: Matrix,
                               p: Matrix, q: Matrix) -> OptimumReport:
    """Maximize ``q- B x (A x)- p`` subject to ``C x <= x``.

    Substitutes the complete constraint solution ``x = star(C) u`` and
    solves the unconstrained problem in ``u``; the family is reported in
    ``u`` together with the generator mapping back to ``x``.
    """
    kind = "span_max_constrained"
    n = a.cols
    if c.shape != (n, n):
        raise ShapeError(f"C must be {n}x{n}, got {c.shape}")
    diags: list = []
    if not _gate(tr_functional(c) <= c.sf.one, "Tr(C) <= one", diags):
        return _infeasible(kind, NO_REGULAR_SOLUTION, diags)
    cs = c.star()
    inner = solve_span_max(a @ cs, b @ cs, p, q)
    family = replace(inner.solution, generator=cs)
    return OptimumReport(kind, OPTIMAL, inner.optimum, family, None,
                         tuple(diags) + inner.diagnostics)


# ----------------------------------------------------------------------
# quadratic-form problems built on the spectral radius

def solve_rayleigh(a: Matrix) -> OptimumReport:
    """Minimize ``x- A x`` over regular x; the optimum is the spectral radius."""
    kind = "rayleigh"
    _expect_square(a, "A")
    diags: list = []
    lam = spectral_radius(a)
    _require(not lam.is_zero, "spectral radius > zero", diags)
    gen = (lam.inv() * a).star()
    return _optimal(kind, lam, GeneratedSolutionSet(gen, None, None), diags)


def solve_rayleigh_affine(a: Matrix, p: Matrix, q: Matrix, r: Scalar) -> OptimumReport:
    """Minimize ``x- A x + x- p + q- x + r`` over regular x."""
    kind = "rayleigh_affine"
    n = _expect_square(a, "A")
    _expect_vec(p, n, "p")
    _expect_vec(q, n, "q")
    diags: list = []
    lam = spectral_radius(a)
    _require(not lam.is_zero, "spectral radius > zero", diags)
    _require(is_regular_vector(q), "q regular", diags)
    mu = lam + r
    qc = q.conj()
    pw = Matrix.identity(a.sf, n)
    for m in range(1, n + 1):
        mu = mu + _val(qc @ (pw @ p)) ** Fraction(1, m + 1)
        pw = pw @ a
    gen = (mu.inv() * a).star()
    lower = mu.inv() * p
    upper = mu * (qc @ gen).conj()
    sol = GeneratedSolutionSet(gen, lower, upper)
    assert not sol.is_empty
    return _optimal(kind, mu, sol, diags)


def _span_products_trace_sum(a: Matrix, b: Matrix, k_max: int, min_total: int,
                             tail: Matrix | None = None) -> Scalar:
    """Sum over k = 1..k_max and exponent tuples of tr^(1/k) of the chained
    products of A with powers of B, optionally right-multiplied by `tail`.

    For `tail` None the tuples are (i_1..i_k) with min_total <= sum <= n-k;
    otherwise they are (i_0..i_k) with a leading B^(i_0) factor and
    0 <= sum <= n-k.  Exponential in n; meant for the n <= 8 range.
    """
    n = a.rows
    bp = _matrix_powers(b, n)
    acc = a.sf.zero
    for k in range(1, k_max + 1):
        root = Fraction(1, k)
        for total in range(min_total, n - k + 1):
            if tail is not None:
                for comp in _weak_compositions(total, k + 1):
                    m = bp[comp[0]]
                    for t in comp[1:]:
                        m = m @ a @ bp[t]
                    acc = acc + (m @ tail).trace() ** root
            else:
                for comp in _weak_compositions(total, k):
                    m = Matrix.identity(a.sf, n)
                    for t in comp:
                        m = m @ a @ bp[t]
                    acc = acc + m.trace() ** root
    return acc


def _theta_lower(a: Matrix, b: Matrix) -> Scalar:
    """Optimum of the spectral problem under ``B x + g <= x``: the spectral
    radius joined with trace roots of all A/B interleavings."""
    return spectral_radius(a) + _span_products_trace_sum(
        a, b, k_max=a.rows - 1, min_total=1)


def solve_rayleigh_two_constraints(a: Matrix, b: Matrix, c: Matrix,
                                   g: Matrix, h: Matrix) -> OptimumReport:
    """Minimize ``x- A x`` subject to ``B x + g <= x`` and ``C x <= h``.

    The optimum enumerates trace roots of every interleaving of A with
    powers of B, capped by a rank-one correction for the box side.  The
    enumeration is exponential in n; n <= 8 is the supported range.
    An all-zero C (vacuous cap) is accepted and drops the upper bound.
    """
    kind = "rayleigh_two_constraints"
    n = _expect_square(a, "A")
    if b.shape != (n, n):
        raise ShapeError(f"B must be {n}x{n}, got {b.shape}")
    if c.cols != n:
        raise ShapeError(f"C must have {n} columns, got {c.shape}")
    _expect_vec(g, n, "g")
    _expect_vec(h, c.rows, "h")
    diags: list = []
    lam = spectral_radius(a)
    _require(not lam.is_zero, "spectral radius > zero", diags)
    c_vacuous = c.is_zero
    if not c_vacuous:
        _require(c.is_col_regular(), "C column-regular", diags)
    _require(is_regular_vector(h), "h regular", diags)
    if not _gate(tr_functional(b) <= b.sf.one, "Tr(B) <= one", diags):
        return _infeasible(kind, NO_REGULAR_SOLUTION, diags)
    bs = b.star()
    compat = _val(h.conj() @ (c @ (bs @ g)))
    if not _gate(compat <= a.sf.one, "h- C B* g <= one", diags):
        return _infeasible(kind, INFEASIBLE_BOX, diags)
    cap = Matrix.identity(a.sf, n) + (g @ (h.conj() @ c))
    theta = _span_products_trace_sum(a, b, k_max=n, min_total=0, tail=cap)
    gen = ((theta.inv() * a) + b).star()
    diags.append(("Tr(theta^-1 A + B) <= one",
                  tr_functional((theta.inv() * a) + b) <= a.sf.one))
    upper = None if c_vacuous else ((h.conj() @ c) @ gen).conj()
    sol = GeneratedSolutionSet(gen, g, upper)
    assert not sol.is_empty
    return _optimal(kind, theta, sol, diags)


def solve_rayleigh_lower(a: Matrix, b: Matrix, g: Matrix) -> OptimumReport:
    """Minimize ``x- A x`` subject to ``B x + g <= x``."""
    kind = "rayleigh_lower"
    n = _expect_square(a, "A")
    if b.shape != (n, n):
        raise ShapeError(f"B must be {n}x{n}, got {b.shape}")
    _expect_vec(g, n, "g")
    diags: list = []
    lam = spectral_radius(a)
    _require(not lam.is_zero, "spectral radius > zero", diags)
    if not _gate(tr_functional(b) <= b.sf.one, "Tr(B) <= one", diags):
        return _infeasible(kind, NO_REGULAR_SOLUTION, diags)
    theta = _theta_lower(a, b)
    gen = ((theta.inv() * a) + b).star()
    return _optimal(kind, theta, GeneratedSolutionSet(gen, g, None), diags)


def solve_rayleigh_box(a: Matrix, g: Matrix, h: Matrix) -> OptimumReport:
    """Minimize ``x- A x`` over the box ``g <= x <= h``."""
    kind = "rayleigh_box"
    n = _expect_square(a, "A")
    _expect_vec(g, n, "g")
    _expect_vec(h, n, "h")
    diags: list = []
    lam = spectral_radius(a)
    _require(not lam.is_zero, "spectral radius > zero", diags)
    _require(is_regular_vector(h), "h regular", diags)
    if not _gate(_val(h.conj() @ g) <= a.sf.one, "h- g <= one", diags):
        return _infeasible(kind, INFEASIBLE_BOX, diags)
    theta = lam
    pw = Matrix.identity(a.sf, n)
    for k in range(1, n + 1):
        pw = pw @ a
        theta = theta + _val(h.conj() @ (pw @ g)) ** Fraction(1, k)
    gen = (theta.inv() * a).star()
    upper = (h.conj() @ gen).conj()
    sol = GeneratedSolutionSet(gen, g, upper)
    assert not sol.is_empty
    return _optimal(kind, theta, sol, diags)


def solve_rayleigh_p_lower(a: Matrix, b: Matrix, p: Matrix, g: Matrix) -> OptimumReport:
    """Minimize ``x- A x + x- p`` subject to ``B x + g <= x``."""
    kind = "rayleigh_p_lower"
    n = _expect_square(a, "A")
    if b.shape != (n, n):
        raise ShapeError(f"B must be {n}x{n}, got {b.shape}")
    _expect_vec(p, n, "p")
    _expect_vec(g, n, "g")
    diags: list = []
    lam = spectral_radius(a)
    _require(not lam.is_zero, "spectral radius > zero", diags)
    if not _gate(tr_functional(b) <= b.sf.one, "Tr(B) <= one", diags):
        return _infeasible(kind, NO_REGULAR_SOLUTION, diags)
    theta = _theta_lower(a, b)
    gen = ((theta.inv() * a) + b).star()
    lower = (theta.inv() * p) + g
    return _optimal(kind, theta, GeneratedSolutionSet(gen, lower, None), diags)


def solve_new_boxed_spectral(a: Matrix, p: Matrix, q: Matrix, g: Matrix,
                             h: Matrix, r: Scalar) -> OptimumReport:
    """Minimize ``x- A x + x- p + q- x + r`` over the box ``g <= x <= h``."""
    kind = "new_boxed_spectral"
    n = _expect_square(a, "A")
    for v, name in ((p, "p"), (q, "q"), (g, "g"), (h, "h")):
        _expect_vec(v, n, name)
    diags: list = []
    lam = spectral_radius(a)
    _require(not lam.is_zero, "spectral radius > zero", diags)
    _require(is_regular_vector(q), "q regular", diags)
    _require(is_regular_vector(h), "h regular", diags)
    if not _gate(_val(h.conj() @ g) <= a.sf.one, "h- g <= one", diags):
        return _infeasible(kind, INFEASIBLE_BOX, diags)
    qc, hc = q.conj(), h.conj()
    powers = _matrix_powers(a, n - 1)
    mu = lam + r
    for m in range(n):
        pw = powers[m]
        mu = mu + _val(qc @ (pw @ p)) ** Fraction(1, m + 2)
        mu = mu + (_val(qc @ (pw @ g)) + _val(hc @ (pw @ p))) ** Fraction(1, m + 1)
        if m >= 1:
            mu = mu + _val(hc @ (pw @ g)) ** Fraction(1, m)
    gen = (mu.inv() * a).star()
    diags.append(("Tr(mu^-1 A) <= one",
                  tr_functional(mu.inv() * a) <= a.sf.one))
    lower = (mu.inv() * p) + g
    upper = (((mu.inv() * qc) + hc) @ gen).conj()
    sol = GeneratedSolutionSet(gen, lower, upper)
    assert not sol.is_empty
    return _optimal(kind, mu, sol, diags)


# ----------------------------------------------------------------------
# dispatch by stable kind identifier

SOLVERS = {
    "cheb_box": (solve_cheb_box, ("p", "q", "g", "h")),
    "cheb_image_lower": (solve_cheb_image_lower, ("A", "p", "q", "g")),
    "cheb_kleene_box": (solve_cheb_kleene_box, ("B", "p", "q", "g", "h")),
    "cheb_kleene": (solve_cheb_kleene, ("B", "p", "q")),
    "span_min": (solve_span_min, ("A", "B", "p", "q")),
    "span_min_special": (solve_span_min_special, ("A",)),
    "span_min_constrained": (solve_span_min_constrained, ("C", "D")),
    "span_max": (solve_span_max, ("A", "B", "p", "q")),
    "span_max_norm": (solve_span_max_norm, ("A", "B")),
    "span_max_constrained": (solve_span_max_constrained, ("A", "B", "C", "p", "q")),
    "rayleigh": (solve_rayleigh, ("A",)),
    "rayleigh_affine": (solve_rayleigh_affine, ("A", "p", "q", "r")),
    "rayleigh_two_constraints": (
        solve_rayleigh_two_constraints, ("A", "B", "C", "g", "h")),
    "rayleigh_lower": (solve_rayleigh_lower, ("A", "B", "g")),
    "rayleigh_box": (solve_rayleigh_box, ("A", "g", "h")),
    "rayleigh_p_lower": (solve_rayleigh_p_lower, ("A", "B", "p", "g")),
    "new_boxed_spectral": (
        solve_new_boxed_spectral, ("A", "p", "q", "g", "h", "r")),
}


def solve(kind: str, **data) -> OptimumReport:
    """Dispatch to a solver by its kind identifier."""
    if kind not in SOLVERS:
        raise KeyError(f"unknown problem kind {kind!r}")
    fn, fields = SOLVERS[kind]
    missing = [f for f in fields if f not in data]
    if missing:
        raise TypeError(f"{kind} needs fields {missing}")
    return fn(*(data[f] for f in fields))
