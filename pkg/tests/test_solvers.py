"""Closed-form solvers: frozen spec examples, reductions between kinds,
and targeted oracle cross-checks (the acceptance suite sweeps more widely)."""

import random
from fractions import Fraction as F

import pytest

from tropsolve import (
    INFEASIBLE,
    INFEASIBLE_BOX,
    MAX_PLUS,
    NO_REGULAR_SOLUTION,
    OPTIMAL,
    PROBLEM_KINDS,
    ComponentwiseFamily,
    Matrix,
    PreconditionError,
    RaySolution,
    SOLVERS,
    ones_vector,
    sample_solution_set,
    solve,
    spectral_radius,
    tr_functional,
    vector,
    verify_report,
)
from tropsolve.gen import generate


def mp(rows):
    return Matrix.from_rows(MAX_PLUS, rows)


def vec(*entries):
    return vector(MAX_PLUS, entries)


def _attained(kind, data, report, samples=12, seed=0):
    pk = PROBLEM_KINDS[kind]
    for x in sample_solution_set(report.solution, samples, seed):
        assert pk.feasible(data, x)
        assert pk.objective(data, x) == report.optimum


# ----------------------------------------------------------------------
# Chebyshev-like kinds

def test_cheb_box_examples():
    rep = solve("cheb_box", p=vec(4), q=vec(0), g=vec(1), h=vec(3))
    assert rep.optimum.v == 2
    assert rep.solution.lower.to_payloads() == [[2]]
    assert rep.solution.upper.to_payloads() == [[2]]

    rep = solve("cheb_box", p=vec(0), q=vec(0), g=vec(0), h=vec(0))
    assert rep.optimum.v == 0
    assert rep.solution.lower == rep.solution.upper == vec(0)


def test_cheb_box_pinned_box_equals_objective_at_g():
    rng = random.Random(31)
    pk = PROBLEM_KINDS["cheb_box"]
    for _ in range(50):
        n = rng.randint(1, 4)
        g = vector(MAX_PLUS, [rng.randint(-5, 5) for _ in range(n)])
        data = {"p": vector(MAX_PLUS, [rng.randint(-5, 5) for _ in range(n)]),
                "q": vector(MAX_PLUS, [rng.randint(-5, 5) for _ in range(n)]),
                "g": g, "h": g}
        rep = solve("cheb_box", **data)
        assert rep.solution.lower == g and rep.solution.upper == g
        assert rep.optimum == pk.objective(data, g)


def test_cheb_box_infeasible_when_bounds_cross():
    rep = solve("cheb_box", p=vec(0), q=vec(0), g=vec(3), h=vec(1))
    assert rep.status == INFEASIBLE and rep.reason == INFEASIBLE_BOX


def test_cheb_image_lower_examples():
    rep = solve("cheb_image_lower", A=mp([[0]]), p=vec(4), q=vec(0), g=vec(0))
    assert rep.optimum.v == 2
    assert rep.solution.lower.to_payloads() == [[2]]

    eye = Matrix.identity(MAX_PLUS, 2)
    rep = solve("cheb_image_lower", A=eye, p=vec(0, 0), q=vec(0, 0), g=vec(0, 0))
    assert rep.optimum.v == 0 and rep.solution.lower == vec(0, 0)


def test_cheb_image_lower_reduces_to_unconstrained():
    # a very low floor makes the problem unconstrained; with A = I the
    # optimum coincides with the loose-box variant
    rng = random.Random(32)
    for _ in range(30):
        n = rng.randint(1, 4)
        eye = Matrix.identity(MAX_PLUS, n)
        p = vector(MAX_PLUS, [rng.randint(-5, 5) for _ in range(n)])
        q = vector(MAX_PLUS, [rng.randint(-5, 5) for _ in range(n)])
        low = vector(MAX_PLUS, [-100] * n)
        high = vector(MAX_PLUS, [100] * n)
        a = solve("cheb_image_lower", A=eye, p=p, q=q, g=low)
        b = solve("cheb_box", p=p, q=q, g=low, h=high)
        assert a.optimum == b.optimum


def test_cheb_kleene_box_examples():
    zero1 = Matrix.zeros(MAX_PLUS, 1, 1)
    same = solve("cheb_kleene_box", B=zero1, p=vec(4), q=vec(0), g=vec(1), h=vec(3))
    box = solve("cheb_box", p=vec(4), q=vec(0), g=vec(1), h=vec(3))
    assert same.optimum == box.optimum

    rep = solve("cheb_kleene_box", B=mp([[-1]]), p=vec(4), q=vec(0),
                g=vec(1), h=vec(3))
    assert rep.optimum.v == 2

    hot = solve("cheb_kleene_box", B=mp([[1]]), p=vec(4), q=vec(0),
                g=vec(1), h=vec(3))
    assert hot.status == INFEASIBLE and hot.reason == NO_REGULAR_SOLUTION


def test_cheb_kleene_examples():
    zero2 = Matrix.zeros(MAX_PLUS, 2, 2)
    rep = solve("cheb_kleene", B=zero2, p=vec(0, 0), q=vec(0, 0))
    assert rep.optimum.v == 0
    assert rep.solution.lower == vec(0, 0) and rep.solution.upper == vec(0, 0)

    rep = solve("cheb_kleene", B=mp([[-1]]), p=vec(4), q=vec(0))
    assert rep.optimum.v == 2
    assert rep.solution.lower == vec(2) and rep.solution.upper == vec(2)


def test_cheb_kleene_agrees_with_loose_box():
    rng = random.Random(33)
    for trial in range(40):
        n = rng.randint(1, 3)
        data = generate("cheb_kleene", n, seed=500 + trial)
        zero_g = vector(MAX_PLUS, [None] * n)
        huge_h = vector(MAX_PLUS, [200] * n)
        a = solve("cheb_kleene", **data)
        b = solve("cheb_kleene_box", B=data["B"], p=data["p"], q=data["q"],
                  g=zero_g, h=huge_h)
        assert a.optimum == b.optimum


# ----------------------------------------------------------------------
# span-seminorm kinds

def test_span_min_paper_value():
    eye = Matrix.identity(MAX_PLUS, 2)
    ones = ones_vector(MAX_PLUS, 2)
    rep = solve("span_min", A=eye, B=eye, p=ones, q=ones)
    assert rep.optimum == MAX_PLUS.one
    assert isinstance(rep.solution, RaySolution)
    assert rep.solution.direction == ones


def test_span_min_scale_invariance():
    data = generate("span_min", 3, seed=77)
    rep = solve("span_min", **data)
    pk = PROBLEM_KINDS["span_min"]
    x = rep.solution.direction
    for alpha in (-7, 2, 13):
        assert pk.objective(data, MAX_PLUS.scalar(alpha) * x) == rep.optimum


def test_span_min_grid():
    a = mp([[0, 1], [2, 0]])
    data = {"A": a, "B": a, "p": vec(0, 0), "q": vec(0, 0)}
    rep = solve("span_min", **data)
    assert verify_report("span_min", data, rep, seed=3).passed


def test_span_min_special_delegates():
    rng = random.Random(34)
    for trial in range(30):
        data = generate("span_min_special", rng.randint(1, 3), seed=600 + trial)
        rep = solve("span_min_special", **data)
        ones = ones_vector(MAX_PLUS, data["A"].rows)
        direct = solve("span_min", A=data["A"], B=data["A"], p=ones, q=ones)
        assert rep.optimum == direct.optimum
    eye = Matrix.identity(MAX_PLUS, 3)
    rep = solve("span_min_special", A=eye)
    assert rep.optimum == MAX_PLUS.one


def test_span_min_special_grid():
    data = {"A": mp([[0, 1], [2, 0]])}
    rep = solve("span_min_special", **data)
    assert verify_report("span_min_special", data, rep, seed=4).passed


def test_span_min_constrained():
    c = mp([[0, 1], [2, 0]])
    d = mp([[-1, -3], [-2, -1]])
    data = {"C": c, "D": d}
    rep = solve("span_min_constrained", **data)
    assert verify_report("span_min_constrained", data, rep, seed=5).passed
    _attained("span_min_constrained", data, rep)

    # a vacuous recursion cap leaves the unconstrained special case
    zero2 = Matrix.zeros(MAX_PLUS, 2, 2)
    rep0 = solve("span_min_constrained", C=c, D=zero2)
    assert rep0.optimum == solve("span_min_special", A=c).optimum

    hot = solve("span_min_constrained", C=c, D=mp([[1, None], [None, None]]))
    assert hot.status == INFEASIBLE and hot.reason == NO_REGULAR_SOLUTION


def test_span_max_requires_zero_free_columns():
    # with zeros in A the objective is unbounded and the closed form
    # does not apply; the identity matrix is rejected
    eye = Matrix.identity(MAX_PLUS, 2)
    with pytest.raises(PreconditionError):
        solve("span_max", A=eye, B=eye, p=vec(0, 0), q=vec(0, 0))
    with pytest.raises(PreconditionError):
        solve("span_max_norm", A=eye, B=eye)
    # and indeed a feasible point beats the formula value on identity data
    pk = PROBLEM_KINDS["span_max"]
    data = {"A": eye, "B": eye, "p": vec(0, 0), "q": vec(0, 0)}
    stretched = vec(10, 0)
    assert pk.objective(data, stretched).v == 10


def test_span_max_family():
    a = mp([[0, 1], [2, 0]])
    eye = Matrix.identity(MAX_PLUS, 2)
    data = {"A": a, "B": eye, "p": vec(0, 0), "q": vec(0, 0)}
    rep = solve("span_max", **data)
    fam = rep.solution
    assert isinstance(fam, ComponentwiseFamily)
    assert fam.tied_pinned_indices == (0, 1)  # symmetric scores
    _attained("span_max", data, rep)
    assert verify_report("span_max", data, rep, seed=6).passed

    # scaling a member leaves the objective unchanged
    pk = PROBLEM_KINDS["span_max"]
    member = sample_solution_set(fam, 1, seed=0)[0]
    assert pk.objective(data, MAX_PLUS.scalar(5) * member) == rep.optimum


def test_span_max_norm_delegates():
    rng = random.Random(35)
    for trial in range(30):
        data = generate("span_max_norm", rng.randint(1, 3), seed=700 + trial)
        rep = solve("span_max_norm", **data)
        ones_m = ones_vector(MAX_PLUS, data["A"].rows)
        ones_l = ones_vector(MAX_PLUS, data["B"].rows)
        direct = solve("span_max", A=data["A"], B=data["B"], p=ones_m, q=ones_l)
        assert rep.optimum == direct.optimum
        assert rep.optimum == (data["B"] @ data["A"].conj()).norm()


def test_span_max_constrained():
    data = generate("span_max_constrained", 2, seed=88)
    rep = solve("span_max_constrained", **data)
    assert rep.status == OPTIMAL
    _attained("span_max_constrained", data, rep)

    plain = dict(data)
    plain["C"] = Matrix.zeros(MAX_PLUS, 2, 2)
    rep0 = solve("span_max_constrained", **plain)
    unc = solve("span_max", A=data["A"], B=data["B"], p=data["p"], q=data["q"])
    assert rep0.optimum == unc.optimum

    hot = dict(data)
    hot["C"] = mp([[1, None], [None, None]])
    bad = solve("span_max_constrained", **hot)
    assert bad.status == INFEASIBLE and bad.reason == NO_REGULAR_SOLUTION


# ----------------------------------------------------------------------
# spectral kinds

def test_rayleigh_examples():
    a = mp([[1, 2], [3, 4]])
    rep = solve("rayleigh", A=a)
    assert rep.optimum.v == 4
    _attained("rayleigh", {"A": a}, rep)
    assert verify_report("rayleigh", {"A": a}, rep, seed=7).passed

    eye = Matrix.identity(MAX_PLUS, 3)
    rep = solve("rayleigh", A=eye)
    assert rep.optimum == MAX_PLUS.one
    pk = PROBLEM_KINDS["rayleigh"]
    for x in ([0, 1, 2], [-3, 5, 0]):
        assert pk.objective({"A": eye}, vector(MAX_PLUS, x)) == MAX_PLUS.one

    with pytest.raises(PreconditionError):
        solve("rayleigh", A=mp([[None, 1], [None, None]]))


def test_rayleigh_affine_examples():
    rep = solve("rayleigh_affine", A=mp([[0]]), p=vec(4), q=vec(0),
                r=MAX_PLUS.zero)
    assert rep.optimum.v == 2

    big = MAX_PLUS.scalar(50)
    rep = solve("rayleigh_affine", A=mp([[0]]), p=vec(4), q=vec(0), r=big)
    assert rep.optimum == big and not rep.solution.is_empty

    # zero p drops the corresponding term entirely
    a = mp([[1, 2], [3, 4]])
    zp = vector(MAX_PLUS, [None, None])
    rep = solve("rayleigh_affine", A=a, p=zp, q=vec(0, 0), r=MAX_PLUS.scalar(-8))
    lam = spectral_radius(a)
    assert rep.optimum == lam
    data = {"A": a, "p": zp, "q": vec(0, 0), "r": MAX_PLUS.scalar(-8)}
    _attained("rayleigh_affine", data, rep)


def test_rayleigh_two_constraints_reductions():
    rng = random.Random(36)
    for trial in range(30):
        n = rng.randint(1, 3)
        base = generate("rayleigh_lower", n, seed=800 + trial)
        zero = Matrix.zeros(MAX_PLUS, n, n)
        h = vector(MAX_PLUS, [rng.randint(-5, 5) for _ in range(n)])
        two = solve("rayleigh_two_constraints", A=base["A"], B=base["B"],
                    C=zero, g=base["g"], h=h)
        ref = solve("rayleigh_lower", **base)
        assert two.optimum == ref.optimum
        assert two.solution.upper is None

        box = generate("rayleigh_box", n, seed=900 + trial)
        eye = Matrix.identity(MAX_PLUS, n)
        two = solve("rayleigh_two_constraints", A=box["A"], B=zero, C=eye,
                    g=box["g"], h=box["h"])
        ref = solve("rayleigh_box", **box)
        assert two.optimum == ref.optimum


def test_rayleigh_two_constraints_oracle():
    data = generate("rayleigh_two_constraints", 2, seed=99)
    rep = solve("rayleigh_two_constraints", **data)
    assert rep.status == OPTIMAL
    _attained("rayleigh_two_constraints", data, rep)
    assert verify_report("rayleigh_two_constraints", data, rep, seed=8).passed


def test_rayleigh_lower_examples():
    a = mp([[1, 2], [3, 4]])
    zero = Matrix.zeros(MAX_PLUS, 2, 2)
    g = vec(-2, 0)
    rep = solve("rayleigh_lower", A=a, B=zero, g=g)
    assert rep.optimum == spectral_radius(a)
    _attained("rayleigh_lower", {"A": a, "B": zero, "g": g}, rep)

    data = generate("rayleigh_lower", 2, seed=101)
    rep = solve("rayleigh_lower", **data)
    assert verify_report("rayleigh_lower", data, rep, seed=9).passed
    with_p = solve("rayleigh_p_lower", A=data["A"], B=data["B"],
                   p=vector(MAX_PLUS, [None, None]), g=data["g"])
    assert with_p.optimum == rep.optimum


def test_rayleigh_box_examples():
    rng = random.Random(37)
    for trial in range(20):
        n = rng.randint(1, 3)
        data = generate("rayleigh_box", n, seed=1000 + trial)
        g = data["g"]
        if not all(not g[i].is_zero for i in range(n)):
            continue
        pinned = solve("rayleigh_box", A=data["A"], g=g, h=g)
        pk = PROBLEM_KINDS["rayleigh_box"]
        assert pinned.optimum == pk.objective({"A": data["A"]}, g)

    data = generate("rayleigh_box", 2, seed=102)
    loose = solve("rayleigh_box", A=data["A"],
                  g=vector(MAX_PLUS, [-100, -100]),
                  h=vector(MAX_PLUS, [100, 100]))
    assert loose.optimum == spectral_radius(data["A"])
    rep = solve("rayleigh_box", **data)
    assert verify_report("rayleigh_box", data, rep, seed=10).passed


def test_rayleigh_p_lower_examples():
    rep = solve("rayleigh_p_lower", A=mp([[2]]), B=mp([[-1]]), p=vec(0), g=vec(0))
    assert rep.optimum.v == 2
    assert rep.solution.lower == vec(0)
    data = {"A": mp([[2]]), "B": mp([[-1]]), "p": vec(0), "g": vec(0)}
    _attained("rayleigh_p_lower", data, rep)


def test_new_boxed_spectral_examples():
    rep = solve("new_boxed_spectral", A=mp([[0]]), p=vec(4), q=vec(0),
                g=vec(1), h=vec(3), r=MAX_PLUS.scalar(-10))
    assert rep.optimum.v == 2
    members = sample_solution_set(rep.solution, 5, seed=0)
    assert all(x == vec(2) for x in members)

    # a pinned box forces x = g and the optimum is the objective there
    rng = random.Random(38)
    pk = PROBLEM_KINDS["new_boxed_spectral"]
    for trial in range(20):
        n = rng.randint(1, 3)
        data = generate("new_boxed_spectral", n, seed=1100 + trial)
        g = data["g"]
        if not all(not g[i].is_zero for i in range(n)):
            continue
        data = dict(data, h=g)
        rep = solve("new_boxed_spectral", **data)
        assert rep.optimum == pk.objective(data, g)
        for x in sample_solution_set(rep.solution, 4, seed=trial):
            assert x == g


def test_new_boxed_spectral_loose_box_matches_affine():
    rng = random.Random(39)
    for trial in range(40):
        n = rng.randint(1, 3)
        data = generate("rayleigh_affine", n, seed=1200 + trial)
        boxed = solve("new_boxed_spectral", A=data["A"], p=data["p"],
                      q=data["q"], g=vector(MAX_PLUS, [-100] * n),
                      h=vector(MAX_PLUS, [100] * n), r=data["r"])
        affine = solve("rayleigh_affine", **data)
        assert boxed.optimum == affine.optimum


def test_new_boxed_spectral_lower_bound_chain():
    rng = random.Random(40)
    for trial in range(60):
        n = rng.randint(1, 4)
        data = generate("new_boxed_spectral", n, seed=1300 + trial)
        rep = solve("new_boxed_spectral", **data)
        lam = spectral_radius(data["A"])
        qp = (data["q"].conj() @ data["p"]).item() ** F(1, 2)
        assert lam + qp + data["r"] <= rep.optimum
        scaled = rep.optimum.inv() * data["A"]
        assert tr_functional(scaled) <= MAX_PLUS.one


def test_new_boxed_spectral_infeasible_box():
    rep = solve("new_boxed_spectral", A=mp([[0]]), p=vec(0), q=vec(0),
                g=vec(5), h=vec(1), r=MAX_PLUS.zero)
    assert rep.status == INFEASIBLE and rep.reason == INFEASIBLE_BOX


# ----------------------------------------------------------------------
# dispatcher and registry

def test_registry_covers_all_kinds():
    assert set(SOLVERS) == set(PROBLEM_KINDS)
    assert len(SOLVERS) == 17


def test_dispatch_errors():
    with pytest.raises(KeyError):
        solve("no_such_kind")
    with pytest.raises(TypeError):
        solve("rayleigh")  # missing A
