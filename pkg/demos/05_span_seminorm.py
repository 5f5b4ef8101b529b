"""Span-seminorm problems: flatten or stretch the spread of a vector image.

The span of y is its largest component minus its smallest (in max-plus
terms).  Minimizers form a single ray; maximizers form a family with one
pinned coordinate and caps on the others.
"""

from tropsolve import (
    MAX_PLUS,
    Matrix,
    sample_solution_set,
    solve,
    vector,
    verify_report,
)

a = Matrix.from_rows(MAX_PLUS, [[0, 1], [2, 0]])

# minimize the span of A x: a single direction, scale-invariant
rep = solve("span_min_special", A=a)
print("span_min_special optimum:", rep.optimum.literal())
d = rep.solution.direction
print("ray direction:", [d[i].literal() for i in range(2)])
y = a @ d
print("image A d:", [y[i].literal() for i in range(2)], "(flat, as expected)")

# the constrained variant pushes the ray through a star generator
dmat = Matrix.from_rows(MAX_PLUS, [[-1, -3], [-2, -1]])
rep = solve("span_min_constrained", C=a, D=dmat)
print("\nspan_min_constrained optimum:", rep.optimum.literal())
print("grid agrees:", verify_report("span_min_constrained",
                                    {"C": a, "D": dmat}, rep).passed)

# maximize instead: requires A free of zeros, otherwise the spread is
# unbounded; the solution pins coordinate k and caps the rest
data = {"A": a, "B": Matrix.identity(MAX_PLUS, 2),
        "p": vector(MAX_PLUS, [0, 0]), "q": vector(MAX_PLUS, [0, 0])}
rep = solve("span_max", **data)
fam = rep.solution
print("\nspan_max optimum:", rep.optimum.literal())
print(f"pinned index {fam.pinned_index} at value "
      f"{fam.pinned_value.literal()} (ties: {list(fam.tied_pinned_indices)})")
print("sampled family members all attain the optimum:")
obj = lambda x: ((data["q"].conj() @ (data["B"] @ x)).item()
                 * ((data["A"] @ x).conj() @ data["p"]).item())
for x in sample_solution_set(fam, 3, seed=2):
    print("  x =", [x[i].literal() for i in range(2)],
          "objective =", obj(x).literal())

# with p = q = ones the optimum is the norm of B A-
rep = solve("span_max_norm", A=a, B=a)
print("\nspan_max_norm optimum:", rep.optimum.literal())
print("equals norm(B A-):",
      rep.optimum == (a @ a.conj()).norm())
