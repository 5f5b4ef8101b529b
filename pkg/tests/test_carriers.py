"""End-to-end behavior on the non-default carriers.

``v -> 2**v`` maps the additive carriers onto the multiplicative ones and
preserves every order and product relation, so a solved instance must map
to a solved instance with the image optimum.  The min-carriers reverse
the order; the same solver code must keep working through the semifield
comparisons alone.
"""

import math
import random

import pytest

from tropsolve import (
    MAX_PLUS,
    MAX_TIMES,
    MIN_PLUS,
    MIN_TIMES,
    GridSpec,
    Matrix,
    cycle_mean_radius,
    grid_search,
    sample_solution_set,
    solve,
    spectral_radius,
    verify_report,
)
from tropsolve.gen import generate
from tropsolve.problems import PROBLEM_KINDS

EXP_PAIRS = ((MAX_PLUS, MAX_TIMES), (MIN_PLUS, MIN_TIMES))


@pytest.mark.parametrize("kind", ["cheb_box", "rayleigh", "rayleigh_box",
                                  "span_min", "cheb_kleene"])
def test_exponential_isomorphism_transports_optima(kind):
    rng = random.Random(51)
    for trial in range(15):
        n = rng.randint(1, 3)
        seed = 7000 + trial
        add_data = generate(kind, n, seed=seed, sf=MAX_PLUS)
        mul_data = generate(kind, n, seed=seed, sf=MAX_TIMES)
        add_rep = solve(kind, **add_data)
        mul_rep = solve(kind, **mul_data)
        assert mul_rep.optimum == MAX_TIMES.scalar(2.0 ** float(add_rep.optimum.v))


def test_min_plus_rayleigh_is_min_cycle_mean():
    rng = random.Random(52)
    for trial in range(30):
        n = rng.randint(1, 4)
        data = generate("rayleigh", n, seed=7100 + trial, sf=MIN_PLUS)
        rep = solve("rayleigh", **data)
        lam = spectral_radius(data["A"])
        assert rep.optimum == lam == cycle_mean_radius(data["A"])
        pk = PROBLEM_KINDS["rayleigh"]
        for x in sample_solution_set(rep.solution, 8, seed=trial):
            assert pk.objective(data, x) == lam


def test_min_plus_solver_beats_nothing_on_grid():
    data = generate("rayleigh_box", 2, seed=53, sf=MIN_PLUS)
    rep = solve("rayleigh_box", **data)
    vr = verify_report("rayleigh_box", data, rep, seed=1)
    assert vr.passed and vr.gap == 0


@pytest.mark.parametrize("kind", ["cheb_box", "rayleigh"])
def test_multiplicative_grid_never_beats_solver(kind):
    rng = random.Random(54)
    for trial in range(5):
        n = rng.randint(1, 2)
        data = generate(kind, n, seed=7200 + trial, sf=MAX_TIMES)
        rep = solve(kind, **data)
        pk = PROBLEM_KINDS[kind]
        dim = pk.dim(data)
        from tropsolve import anchor_member
        anchor = anchor_member(rep)
        intervals = tuple(
            (anchor[i] * MAX_TIMES.scalar(0.25), anchor[i] * MAX_TIMES.scalar(4.0))
            for i in range(dim))
        res = grid_search(kind, data, GridSpec(intervals, MAX_TIMES.scalar(2.0)))
        assert res.found
        assert not (res.value < rep.optimum)
        for x in sample_solution_set(rep.solution, 10, seed=trial):
            assert pk.feasible(data, x)
            assert pk.objective(data, x) == rep.optimum


def test_min_times_shortest_path_flavor():
    # star closure over (min, x): multiplicative path costs
    w = Matrix.from_rows(MIN_TIMES, [[None, 2.0], [4.0, None]])
    s = w.star()
    assert s[0, 1].v == pytest.approx(2.0)
    assert s[0, 0] == MIN_TIMES.one
    lam = spectral_radius(Matrix.from_rows(MIN_TIMES, [[None, 2.0], [4.0, None]]))
    assert lam.v == pytest.approx(math.sqrt(8.0))


def test_exponential_map_members_transport():
    add_data = generate("rayleigh_lower", 2, seed=55, sf=MAX_PLUS)
    mul_data = generate("rayleigh_lower", 2, seed=55, sf=MAX_TIMES)
    add_rep = solve("rayleigh_lower", **add_data)
    mul_rep = solve("rayleigh_lower", **mul_data)
    pk = PROBLEM_KINDS["rayleigh_lower"]
    for x in sample_solution_set(mul_rep.solution, 6, seed=2):
        assert pk.feasible(mul_data, x)
        assert pk.objective(mul_data, x) == mul_rep.optimum
    assert mul_rep.optimum == MAX_TIMES.scalar(2.0 ** float(add_rep.optimum.v))
