"""Deterministic random problem instances satisfying each kind's preconditions.

Instances are drawn with integer carrier entries in [-5, 5] (zeros with
probability 0.2) and then repaired until the preconditions of the kind's
closed form hold: zero rows/columns get patched, cycle weights are shifted
down until the trace gate passes, box tops are lifted over their floors.
All repairs preserve integrality so that downstream grid checks stay exact.

Multiplicative-carrier instances are produced by generating on the additive
sibling and mapping entries through ``v -> 2**v``, which preserves every
order and trace relation.
"""

from __future__ import annotations

import math
import random

from .linalg import Matrix, spectral_radius
from .problems import PROBLEM_KINDS
from .semifield import MAX_PLUS, MIN_PLUS, Scalar, Semifield

DEFAULT_LO = -5
DEFAULT_HI = 5
DEFAULT_ZERO_PROB = 0.2


class _Draw:
    """Integer entry sampler over one additive semifield."""

    def __init__(self, sf: Semifield, rng: random.Random,
                 lo: int, hi: int, zero_prob: float):
        self.sf = sf
        self.rng = rng
        self.lo = lo
        self.hi = hi
        self.zero_prob = zero_prob

    def entry(self, allow_zero: bool = True):
        if allow_zero and self.rng.random() < self.zero_prob:
            return None
        return self.rng.randint(self.lo, self.hi)

    def matrix(self, rows: int, cols: int, allow_zero: bool = True) -> Matrix:
        return Matrix.from_rows(self.sf, [
            [self.entry(allow_zero) for _ in range(cols)] for _ in range(rows)])

    def vec(self, n: int, regular: bool = False) -> Matrix:
        return Matrix.from_rows(self.sf, [
            [self.entry(allow_zero=not regular)] for _ in range(n)])

    def nonzero_vec(self, n: int) -> Matrix:
        v = self.vec(n)
        if v.is_zero:
            rows = v.to_payloads()
            rows[self.rng.randrange(n)][0] = self.rng.randint(self.lo, self.hi)
            v = Matrix.from_rows(self.sf, rows)
        return v

    def patch_rows(self, m: Matrix) -> Matrix:
        rows = m.to_payloads()
        for i, r in enumerate(rows):
            if all(v is None for v in r):
                r[self.rng.randrange(len(r))] = self.rng.randint(self.lo, self.hi)
        return Matrix.from_rows(self.sf, rows)

    def patch_cols(self, m: Matrix) -> Matrix:
        rows = m.to_payloads()
        for j in range(m.cols):
            if all(rows[i][j] is None for i in range(m.rows)):
                rows[self.rng.randrange(m.rows)][j] = self.rng.randint(self.lo, self.hi)
        return Matrix.from_rows(self.sf, rows)

    def ensure_positive_radius(self, m: Matrix) -> Matrix:
        if not spectral_radius(m).is_zero:
            return m
        rows = m.to_payloads()
        i = self.rng.randrange(m.rows)
        rows[i][i] = self.rng.randint(self.lo, self.hi)
        return Matrix.from_rows(self.sf, rows)

    def cap_cycles(self, m: Matrix) -> Matrix:
        """Shift entries by a whole unit amount until tr_functional(m) <= one.

        Equivalent to pushing the spectral radius at or below one; the
        integer shift keeps entries integral.
        """
        lam = spectral_radius(m)
        if lam <= m.sf.one:
            return m
        # nearest integer c with lam*c <= one in the semifield order
        shift = -math.ceil(lam.v) if m.sf.maximizing else -math.floor(lam.v)
        return m.sf.scalar(shift) * m


def _lift(h: Matrix, floor: Matrix) -> Matrix:
    """Raise h entrywise until floor <= h (keeps h regular)."""
    return h + floor


def _build_cheb_box(d: _Draw, n: int) -> dict:
    g = d.vec(n)
    return {"p": d.vec(n, regular=True), "q": d.vec(n, regular=True),
            "g": g, "h": _lift(d.vec(n, regular=True), g)}


def _build_cheb_image_lower(d: _Draw, n: int) -> dict:
    a = d.patch_cols(d.patch_rows(d.matrix(n, n)))
    return {"A": a, "p": d.vec(n, regular=True), "q": d.vec(n, regular=True),
            "g": d.vec(n)}


def _build_cheb_kleene_box(d: _Draw, n: int) -> dict:
    b = d.cap_cycles(d.matrix(n, n))
    g = d.vec(n)
    h = _lift(d.vec(n, regular=True), b.star() @ g)
    return {"B": b, "p": d.nonzero_vec(n), "q": d.vec(n, regular=True),
            "g": g, "h": h}


def _build_cheb_kleene(d: _Draw, n: int) -> dict:
    return {"B": d.cap_cycles(d.matrix(n, n)), "p": d.nonzero_vec(n),
            "q": d.vec(n, regular=True)}


def _build_span_min(d: _Draw, n: int) -> dict:
    return {"A": d.patch_rows(d.matrix(n, n)),
            "B": d.patch_cols(d.matrix(n, n)),
            "p": d.nonzero_vec(n), "q": d.vec(n, regular=True)}


def _build_span_min_special(d: _Draw, n: int) -> dict:
    return {"A": d.patch_cols(d.patch_rows(d.matrix(n, n)))}


def _build_span_min_constrained(d: _Draw, n: int) -> dict:
    return {"C": d.patch_cols(d.patch_rows(d.matrix(n, n))),
            "D": d.cap_cycles(d.matrix(n, n))}


def _build_span_max(d: _Draw, n: int) -> dict:
    return {"A": d.matrix(n, n, allow_zero=False),
            "B": d.patch_cols(d.matrix(n, n)),
            "p": d.vec(n, regular=True), "q": d.vec(n, regular=True)}


def _build_span_max_norm(d: _Draw, n: int) -> dict:
    return {"A": d.matrix(n, n, allow_zero=False),
            "B": d.patch_cols(d.matrix(n, n))}


def _build_span_max_constrained(d: _Draw, n: int) -> dict:
    data = _build_span_max(d, n)
    data["C"] = d.cap_cycles(d.matrix(n, n))
    return data


def _build_rayleigh(d: _Draw, n: int) -> dict:
    return {"A": d.ensure_positive_radius(d.matrix(n, n))}


def _build_rayleigh_affine(d: _Draw, n: int) -> dict:
    return {"A": d.ensure_positive_radius(d.matrix(n, n)),
            "p": d.vec(n), "q": d.vec(n, regular=True),
            "r": d.sf.scalar(d.entry())}


def _build_rayleigh_two_constraints(d: _Draw, n: int) -> dict:
    a = d.ensure_positive_radius(d.matrix(n, n))
    b = d.cap_cycles(d.matrix(n, n))
    c = d.patch_cols(d.matrix(n, n))
    g = d.vec(n)
    h = _lift(d.vec(n, regular=True), c @ (b.star() @ g))
    return {"A": a, "B": b, "C": c, "g": g, "h": h}


def _build_rayleigh_lower(d: _Draw, n: int) -> dict:
    return {"A": d.ensure_positive_radius(d.matrix(n, n)),
            "B": d.cap_cycles(d.matrix(n, n)), "g": d.vec(n)}


def _build_rayleigh_box(d: _Draw, n: int) -> dict:
    g = d.vec(n)
    return {"A": d.ensure_positive_radius(d.matrix(n, n)),
            "g": g, "h": _lift(d.vec(n, regular=True), g)}


def _build_rayleigh_p_lower(d: _Draw, n: int) -> dict:
    return {"A": d.ensure_positive_radius(d.matrix(n, n)),
            "B": d.cap_cycles(d.matrix(n, n)),
            "p": d.vec(n), "g": d.vec(n)}


def _build_new_boxed_spectral(d: _Draw, n: int) -> dict:
    g = d.vec(n)
    return {"A": d.ensure_positive_radius(d.matrix(n, n)),
            "p": d.vec(n), "q": d.vec(n, regular=True),
            "g": g, "h": _lift(d.vec(n, regular=True), g),
            "r": d.sf.scalar(d.entry())}


BUILDERS = {
    "cheb_box": _build_cheb_box,
    "cheb_image_lower": _build_cheb_image_lower,
    "cheb_kleene_box": _build_cheb_kleene_box,
    "cheb_kleene": _build_cheb_kleene,
    "span_min": _build_span_min,
    "span_min_special": _build_span_min_special,
    "span_min_constrained": _build_span_min_constrained,
    "span_max": _build_span_max,
    "span_max_norm": _build_span_max_norm,
    "span_max_constrained": _build_span_max_constrained,
    "rayleigh": _build_rayleigh,
    "rayleigh_affine": _build_rayleigh_affine,
    "rayleigh_two_constraints": _build_rayleigh_two_constraints,
    "rayleigh_lower": _build_rayleigh_lower,
    "rayleigh_box": _build_rayleigh_box,
    "rayleigh_p_lower": _build_rayleigh_p_lower,
    "new_boxed_spectral": _build_new_boxed_spectral,
}


def _exp_map(data: dict, target: Semifield) -> dict:
    def remap(value):
        if isinstance(value, Matrix):
            return Matrix.from_rows(target, [
                [None if v is None else 2.0 ** int(v) for v in row]
                for row in value.to_payloads()])
        if isinstance(value, Scalar):
            return target.scalar(None if value.v is None else 2.0 ** int(value.v))
        return value
    return {k: remap(v) for k, v in data.items()}


def generate(kind: str, n: int, seed: int, sf: Semifield = MAX_PLUS,
             lo: int = DEFAULT_LO, hi: int = DEFAULT_HI,
             zero_prob: float = DEFAULT_ZERO_PROB) -> dict:
    """Feasible random instance of `kind` with dimension n, seeded."""
    if kind not in PROBLEM_KINDS:
        raise KeyError(f"unknown problem kind {kind!r}")
    rng = random.Random(seed)
    base = sf if sf.additive else (MAX_PLUS if sf.maximizing else MIN_PLUS)
    data = BUILDERS[kind](_Draw(base, rng, lo, hi, zero_prob), n)
    if not sf.additive:
        data = _exp_map(data, sf)
    return data
