"""Matrix algebra over a semifield: products, conjugates, closure, spectra.

The star closure over the (min, +) carrier is the classic all-pairs
shortest-path matrix; over (max, +) the spectral radius is the maximum
cycle mean of the weighted digraph.
"""

from tropsolve import (
    MAX_PLUS,
    MIN_PLUS,
    Matrix,
    cycle_mean_radius,
    format_matrix,
    kleene_star,
    spectral_radius,
    tr_functional,
    vector,
)

a = Matrix.from_rows(MAX_PLUS, [[0, 1], [2, 0]])
x = vector(MAX_PLUS, [2, 2])
ax = a @ x
print("A =")
print(format_matrix(a))
print("A @ [2 2]^T =", " ".join(ax[i].literal() for i in range(ax.dim)))

m = Matrix.from_rows(MAX_PLUS, [[1, 2], [3, 4]])
print("\nM squared (max-plus):")
print(format_matrix(m ** 2))
print("trace(M) =", m.trace().literal())
print("spectral radius =", spectral_radius(m).literal())
print("cycle-mean oracle agrees:", cycle_mean_radius(m) == spectral_radius(m))

# conjugate transpose inverts nonzero entries and transposes
c = Matrix.from_rows(MAX_PLUS, [[1, None], [2, 3]])
print("\nC and its conjugate transpose:")
print(format_matrix(c))
print(format_matrix(c.conj()))

# star closure with its validity flag
n = Matrix.from_rows(MAX_PLUS, [[-1, -3], [-2, -1]])
closure = kleene_star(n)
print("\nstar of a trace-safe matrix (valid:", closure.closure_valid, ")")
print(format_matrix(closure.matrix))
print("Tr =", tr_functional(n).literal())

# min-plus closure = shortest paths
w = Matrix.from_rows(MIN_PLUS, [[None, 1, 5], [None, None, 1], [1, None, None]])
print("\nedge weights (min-plus):")
print(format_matrix(w))
print("shortest-path closure:")
print(format_matrix(w.star()))
