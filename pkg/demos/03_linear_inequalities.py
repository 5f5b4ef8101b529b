"""The two linear inequalities whose complete solution sets have closed forms.

``A x <= d`` is solved by a single principal vector: everything regular
below it is a solution, nothing above it is.  ``A x + b <= x`` is solved
by the star image of a half-open box, when the trace gate allows regular
solutions at all.
"""

from tropsolve import (
    MAX_PLUS,
    EmptySolutionSet,
    Matrix,
    format_matrix,
    principal_solution_leq,
    sample_solution_set,
    solve_sub_fixpoint,
    vector,
)

a = Matrix.from_rows(MAX_PLUS, [[0, 1], [2, 0]])
d = vector(MAX_PLUS, [3, 4])
box = principal_solution_leq(a, d)
xhat = box.upper
print("A x <= d with d = [3 4]^T")
print("principal (greatest) solution:", [s.literal() for s in (xhat[0], xhat[1])])
print("feasible there:", a @ xhat <= d)
bump = Matrix(MAX_PLUS, ((xhat[0] * MAX_PLUS.scalar(1),), (xhat[1],)))
print("bumping one coordinate breaks it:", not a @ bump <= d)

print("\nA x + b <= x:")
n = Matrix.from_rows(MAX_PLUS, [[-1, -3], [-2, -1]])
b = vector(MAX_PLUS, [0, 0])
sol = solve_sub_fixpoint(n, b)
print("generator (star of A):")
print(format_matrix(sol.generator))
print("members x = G u for any regular u >= b; a few samples:")
for x in sample_solution_set(sol, 4, seed=0):
    print("  x =", [x[i].literal() for i in range(2)],
          "satisfies:", (n @ x) + b <= x)

hot = Matrix.from_rows(MAX_PLUS, [[1]])
refused = solve_sub_fixpoint(hot, vector(MAX_PLUS, [0]))
assert isinstance(refused, EmptySolutionSet)
print("\npositive-trace matrix has no regular solution:", refused.reason)
