"""Problem-kind registry: the objective and feasibility semantics of each
solver kind, stated independently of the closed forms.

The oracle evaluates these definitions pointwise during grid search and when
re-checking sampled solution-set members, so a bug in a solver formula cannot
hide behind itself.  The CLI uses the field lists for document validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .linalg import Matrix, ones_vector
from .semifield import Scalar


@dataclass(frozen=True)
class ProblemKind:
    kind: str
    sense: str  # "min" | "max"
    matrix_fields: tuple[str, ...]
    vector_fields: tuple[str, ...]
    scalar_fields: tuple[str, ...]
    dim: Callable[[dict], int]
    objective: Callable[[dict, Matrix], Scalar]
    feasible: Callable[[dict, Matrix], bool]

    @property
    def fields(self) -> tuple[str, ...]:
        return self.matrix_fields + self.vector_fields + self.scalar_fields


def _val(m: Matrix) -> Scalar:
    return m.item()


def _unconstrained(data: dict, x: Matrix) -> bool:
    return True


def _cheb_objective(data, x):
    return _val(data["q"].conj() @ x) + _val(x.conj() @ data["p"])


def _cheb_image_objective(data, x):
    ax = data["A"] @ x
    return _val(data["q"].conj() @ ax) + _val(ax.conj() @ data["p"])


def _span_objective(data, x):
    return (_val(data["q"].conj() @ (data["B"] @ x))
            * _val((data["A"] @ x).conj() @ data["p"]))


def _span_of(y: Matrix) -> Scalar:
    ones = ones_vector(y.sf, y.rows)
    return _val(ones.conj() @ y) * _val(y.conj() @ ones)


def _rayleigh_objective(data, x):
    return _val(x.conj() @ (data["A"] @ x))


def _rayleigh_affine_objective(data, x):
    return (_rayleigh_objective(data, x)
            + _val(x.conj() @ data["p"])
            + _val(data["q"].conj() @ x)
            + data["r"])


def _rayleigh_p_objective(data, x):
    return _rayleigh_objective(data, x) + _val(x.conj() @ data["p"])


def _box_feasible(data, x):
    return data["g"] <= x and x <= data["h"]


def _sub_fixpoint_feasible(key_matrix: str):
    def check(data, x):
        return (data[key_matrix] @ x) + data["g"] <= x
    return check


def _recursion_cap_feasible(key_matrix: str):
    def check(data, x):
        return (data[key_matrix] @ x) <= x
    return check


def _two_constraints_feasible(data, x):
    return ((data["B"] @ x) + data["g"] <= x
            and (data["C"] @ x) <= data["h"])


PROBLEM_KINDS: dict[str, ProblemKind] = {}


def _register(pk: ProblemKind) -> None:
    PROBLEM_KINDS[pk.kind] = pk


_register(ProblemKind(
    "cheb_box", "min", (), ("p", "q", "g", "h"), (),
    dim=lambda d: d["p"].dim,
    objective=_cheb_objective,
    feasible=_box_feasible))

_register(ProblemKind(
    "cheb_image_lower", "min", ("A",), ("p", "q", "g"), (),
    dim=lambda d: d["A"].cols,
    objective=_cheb_image_objective,
    feasible=lambda d, x: d["g"] <= x))

_register(ProblemKind(
    "cheb_kleene_box", "min", ("B",), ("p", "q", "g", "h"), (),
    dim=lambda d: d["B"].cols,
    objective=_cheb_objective,
    feasible=lambda d, x: (d["B"] @ x) + d["g"] <= x and x <= d["h"]))

_register(ProblemKind(
    "cheb_kleene", "min", ("B",), ("p", "q"), (),
    dim=lambda d: d["B"].cols,
    objective=_cheb_objective,
    feasible=_recursion_cap_feasible("B")))

_register(ProblemKind(
    "span_min", "min", ("A", "B"), ("p", "q"), (),
    dim=lambda d: d["A"].cols,
    objective=_span_objective,
    feasible=_unconstrained))

_register(ProblemKind(
    "span_min_special", "min", ("A",), (), (),
    dim=lambda d: d["A"].cols,
    objective=lambda d, x: _span_of(d["A"] @ x),
    feasible=_unconstrained))

_register(ProblemKind(
    "span_min_constrained", "min", ("C", "D"), (), (),
    dim=lambda d: d["C"].cols,
    objective=lambda d, x: _span_of(d["C"] @ x),
    feasible=_recursion_cap_feasible("D")))

_register(ProblemKind(
    "span_max", "max", ("A", "B"), ("p", "q"), (),
    dim=lambda d: d["A"].cols,
    objective=_span_objective,
    feasible=_unconstrained))

_register(ProblemKind(
    "span_max_norm", "max", ("A", "B"), (), (),
    dim=lambda d: d["A"].cols,
    objective=lambda d, x: (d["B"] @ x).norm() * (d["A"] @ x).conj().norm(),
    feasible=_unconstrained))

_register(ProblemKind(
    "span_max_constrained", "max", ("A", "B", "C"), ("p", "q"), (),
    dim=lambda d: d["A"].cols,
    objective=_span_objective,
    feasible=_recursion_cap_feasible("C")))

_register(ProblemKind(
    "rayleigh", "min", ("A",), (), (),
    dim=lambda d: d["A"].cols,
    objective=_rayleigh_objective,
    feasible=_unconstrained))

_register(ProblemKind(
    "rayleigh_affine", "min", ("A",), ("p", "q"), ("r",),
    dim=lambda d: d["A"].cols,
    objective=_rayleigh_affine_objective,
    feasible=_unconstrained))

_register(ProblemKind(
    "rayleigh_two_constraints", "min", ("A", "B", "C"), ("g", "h"), (),
    dim=lambda d: d["A"].cols,
    objective=_rayleigh_objective,
    feasible=_two_constraints_feasible))

_register(ProblemKind(
    "rayleigh_lower", "min", ("A", "B"), ("g",), (),
    dim=lambda d: d["A"].cols,
    objective=_rayleigh_objective,
    feasible=_sub_fixpoint_feasible("B")))

_register(ProblemKind(
    "rayleigh_box", "min", ("A",), ("g", "h"), (),
    dim=lambda d: d["A"].cols,
    objective=_rayleigh_objective,
    feasible=_box_feasible))

_register(ProblemKind(
    "rayleigh_p_lower", "min", ("A", "B"), ("p", "g"), (),
    dim=lambda d: d["A"].cols,
    objective=_rayleigh_p_objective,
    feasible=_sub_fixpoint_feasible("B")))

_register(ProblemKind(
    "new_boxed_spectral", "min", ("A",), ("p", "q", "g", "h"), ("r",),
    dim=lambda d: d["A"].cols,
    objective=_rayleigh_affine_objective,
    feasible=_box_feasible))
