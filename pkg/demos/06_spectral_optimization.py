"""Spectral-quotient problems: minimize ``x- A x`` and its decorated forms.

The unconstrained minimum is the spectral radius; adding affine terms or
box/recursion constraints keeps a closed form whose value joins the
radius with trace roots of constraint interleavings.  The last example is
the boxed affine problem solved end to end with oracle verification.
"""

from tropsolve import (
    MAX_PLUS,
    Matrix,
    anchor_member,
    sample_solution_set,
    solve,
    spectral_radius,
    vector,
    verify_report,
)

a = Matrix.from_rows(MAX_PLUS, [[1, 2], [3, 4]])
print("spectral radius of A:", spectral_radius(a).literal())

rep = solve("rayleigh", A=a)
print("rayleigh optimum:", rep.optimum.literal())
members = sample_solution_set(rep.solution, 3, seed=3)
for x in members:
    val = (x.conj() @ (a @ x)).item()
    print("  member", [x[i].literal() for i in range(2)],
          "quotient =", val.literal())

# recursion floor B x + g <= x shifts the optimum above the radius
b = Matrix.from_rows(MAX_PLUS, [[-1, 0], [-2, -1]])
g = vector(MAX_PLUS, [0, -1])
rep = solve("rayleigh_lower", A=a, B=b, g=g)
print("\nrayleigh_lower optimum:", rep.optimum.literal())
print("grid agrees:",
      verify_report("rayleigh_lower", {"A": a, "B": b, "g": g}, rep).passed)

# the boxed affine problem: x- A x + x- p + q- x + r over g <= x <= h
data = {
    "A": a,
    "p": vector(MAX_PLUS, [6, None]),
    "q": vector(MAX_PLUS, [0, 1]),
    "g": vector(MAX_PLUS, [-2, -2]),
    "h": vector(MAX_PLUS, [4, 5]),
    "r": MAX_PLUS.scalar(-3),
}
rep = solve("new_boxed_spectral", **data)
print("\nnew_boxed_spectral optimum:", rep.optimum.literal())
print("diagnostics:")
for name, ok in rep.diagnostics:
    print(f"  [{'ok' if ok else 'FAIL'}] {name}")
anchor = anchor_member(rep)
print("one attaining point:", [anchor[i].literal() for i in range(2)])
vr = verify_report("new_boxed_spectral", data, rep, seed=4)
print(f"oracle verdict: {'PASS' if vr.passed else 'FAIL'} "
      f"(grid {vr.grid_points} points, gap {vr.gap})")
