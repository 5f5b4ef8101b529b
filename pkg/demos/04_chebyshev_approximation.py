"""Best-approximation solvers: minimize ``q- x + x- p`` style objectives.

On the max-plus carrier this objective is the Chebyshev distance between
x and a target, up to an additive normalization, so these solvers place a
point as close as possible to p (from below) and q (from above) under
box or recursion constraints.  Every report is cross-checked against a
brute-force grid.
"""

from tropsolve import (
    MAX_PLUS,
    Matrix,
    sample_solution_set,
    solve,
    vector,
    verify_report,
)

vec = lambda *entries: vector(MAX_PLUS, entries)

# one-dimensional warm-up: squeeze x between 1 and 3 while approaching 4 and 0
data = {"p": vec(4), "q": vec(0), "g": vec(1), "h": vec(3)}
rep = solve("cheb_box", **data)
print("cheb_box optimum:", rep.optimum.literal())
print("solution box:", rep.solution.lower[0].literal(),
      "..", rep.solution.upper[0].literal())
print("grid agrees exactly:", verify_report("cheb_box", data, rep).passed)

# the same objective under a recursion floor B x + g <= x and a cap x <= h
data = {
    "B": Matrix.from_rows(MAX_PLUS, [[-1, -3], [-2, -1]]),
    "p": vec(4, 3), "q": vec(0, 0), "g": vec(-2, -1), "h": vec(5, 5),
}
rep = solve("cheb_kleene_box", **data)
print("\ncheb_kleene_box optimum:", rep.optimum.literal())
print("members are star-images of a box; samples all attain the optimum:")
pk_obj = lambda x: (data["q"].conj() @ x).item() + (x.conj() @ data["p"]).item()
for x in sample_solution_set(rep.solution, 3, seed=1):
    print("  x =", [x[i].literal() for i in range(2)],
          "objective =", pk_obj(x).literal())
print("grid agrees exactly:", verify_report("cheb_kleene_box", data, rep).passed)

# image approximation: fit A x to p from below while q caps from above
data = {"A": Matrix.from_rows(MAX_PLUS, [[0, -1], [1, 0]]),
        "p": vec(4, 3), "q": vec(0, 0), "g": vec(-3, -3)}
rep = solve("cheb_image_lower", **data)
print("\ncheb_image_lower optimum:", rep.optimum.literal())
print("attaining point:", [rep.solution.lower[i].literal() for i in range(2)])
for name, ok in rep.diagnostics:
    print(f"  [{'ok' if ok else 'FAIL'}] {name}")
