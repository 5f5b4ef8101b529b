"""Dense matrix and vector algebra over an idempotent semifield.

Vectors are column matrices (shape n x 1); row vectors are 1 x n matrices.
``A + B`` is the entrywise idempotent sum, ``A @ B`` the semifield matrix
product, ``x * A`` scaling by a scalar, and ``A <= B`` the entrywise order.
Everything is immutable; target sizes are small (a few hundred at most),
so the O(n^4) trace sums behind the spectral radius stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInputError, ShapeError, TagMismatchError
from .semifield import Scalar, Semifield


class Matrix:
    """Rectangular array of same-semifield scalars."""

    __slots__ = ("sf", "rows", "cols", "data")

    def __init__(self, sf: Semifield, data: tuple[tuple[Scalar, ...], ...]):
        rows = len(data)
        if rows == 0 or len(data[0]) == 0:
            raise ShapeError("matrices must have at least one row and column")
        cols = len(data[0])
        for r in data:
            if len(r) != cols:
                raise ShapeError("ragged rows")
            for s in r:
                if s.sf is not sf:
                    raise TagMismatchError(
                        f"entry from {s.sf.tag} in a {sf.tag} matrix")
        self.sf = sf
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, sf: Semifield, rows) -> Matrix:
        """Build from nested payloads; ``None`` marks the semifield zero."""
        return cls(sf, tuple(tuple(sf.scalar(v) for v in r) for r in rows))

    @classmethod
    def identity(cls, sf: Semifield, n: int) -> Matrix:
        one, zero = sf.one, sf.zero
        return cls(sf, tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, sf: Semifield, rows: int, cols: int) -> Matrix:
        zero = sf.zero
        return cls(sf, tuple(tuple(zero for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def ones(cls, sf: Semifield, rows: int, cols: int) -> Matrix:
        one = sf.one
        return cls(sf, tuple(tuple(one for _ in range(cols)) for _ in range(rows)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_vector(self) -> bool:
        return self.cols == 1

    @property
    def dim(self) -> int:
        """Length of a column vector."""
        if self.cols != 1:
            raise ShapeError(f"shape {self.shape} is not a column vector")
        return self.rows

    def __getitem__(self, key) -> Scalar:
        if isinstance(key, tuple):
            i, j = key
            return self.data[i][j]
        if self.cols == 1:
            return self.data[key][0]
        raise TypeError("single-index access is reserved for column vectors")

    def column(self, j: int) -> Matrix:
        return Matrix(self.sf, tuple((r[j],) for r in self.data))

    def row_vector(self, i: int) -> Matrix:
        return Matrix(self.sf, (self.data[i],))

    def to_payloads(self):
        """Nested lists of carrier values with ``None`` for zeros."""
        return [[s.v for s in r] for r in self.data]

    # ------------------------------------------------------------------
    # algebra

    def _check_same(self, other: Matrix, op: str) -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected a Matrix for {op}, got {other!r}")
        if other.sf is not self.sf:
            raise TagMismatchError(
                f"mixed semifields in {op}: {self.sf.tag} and {other.sf.tag}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same(other, "+")
        if self.shape != other.shape:
            raise ShapeError(f"cannot add shapes {self.shape} and {other.shape}")
        return Matrix(self.sf, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.data, other.data)))

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check_same(other, "@")
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply shapes {self.shape} and {other.shape}")
        sf = self.sf
        additive, maximizing = sf.additive, sf.maximizing
        # other in column-major order so the inner loop walks one column
        ocols = [[other.data[k][j] for k in range(other.rows)]
                 for j in range(other.cols)]
        out = []
        for arow in self.data:
            row_out = []
            for col in ocols:
                best = None
                for a, b in zip(arow, col):
                    av, bv = a.v, b.v
                    if av is None or bv is None:
                        continue
                    t = av + bv if additive else av * bv
                    if best is None:
                        best = t
                    elif maximizing:
                        if t > best:
                            best = t
                    elif t < best:
                        best = t
                row_out.append(sf._wrap(best) if best is not None else sf.zero)
            out.append(tuple(row_out))
        return Matrix(sf, tuple(out))

    def __rmul__(self, x: Scalar) -> Matrix:
        if not isinstance(x, Scalar):
            return NotImplemented
        if x.sf is not self.sf:
            raise TagMismatchError(
                f"mixed semifields in scaling: {x.sf.tag} and {self.sf.tag}")
        return Matrix(self.sf, tuple(
            tuple(x * a for a in r) for r in self.data))

    def transpose(self) -> Matrix:
        return Matrix(self.sf, tuple(
            tuple(self.data[i][j] for i in range(self.rows))
            for j in range(self.cols)))

    def conj(self) -> Matrix:
        """Multiplicative conjugate transpose: invert nonzero entries and
        transpose; zeros stay in place.  Undefined on all-zero input."""
        if self.is_zero:
            raise DegenerateInputError(
                "conjugate transposition of an all-zero matrix")
        zero = self.sf.zero
        return Matrix(self.sf, tuple(
            tuple(zero if self.data[i][j].is_zero else self.data[i][j].inv()
                  for i in range(self.rows))
            for j in range(self.cols)))

    def trace(self) -> Scalar:
        self._require_square("trace")
        return self.sf.sum(self.data[i][i] for i in range(self.rows))

    def norm(self) -> Scalar:
        """Idempotent sum of all entries."""
        return self.sf.sum(s for r in self.data for s in r)

    def power(self, p: int) -> Matrix:
        self._require_square("power")
        if p < 0:
            raise ValueError("matrix powers are defined for p >= 0")
        acc = Matrix.identity(self.sf, self.rows)
        for _ in range(p):
            acc = acc @ self
        return acc

    __pow__ = power

    def star(self) -> Matrix:
        """Truncated power sum I + A + ... + A^(n-1).

        Well-defined for any square matrix; it is the closure of the
        "at most x" recursion only when ``tr_functional(A) <= one``
        (see :func:`kleene_star` for the flagged variant).
        """
        self._require_square("star")
        acc = Matrix.identity(self.sf, self.rows)
        p = acc
        for _ in range(self.rows - 1):
            p = p @ self
            acc = acc + p
        return acc

    def item(self) -> Scalar:
        if self.shape != (1, 1):
            raise ShapeError(f"item() needs a 1x1 matrix, got {self.shape}")
        return self.data[0][0]

    def _require_square(self, op: str) -> None:
        if self.rows != self.cols:
            raise ShapeError(f"{op} needs a square matrix, got {self.shape}")

    # ------------------------------------------------------------------
    # predicates and order

    @property
    def is_zero(self) -> bool:
        return all(s.is_zero for r in self.data for s in r)

    def is_row_regular(self) -> bool:
        return all(any(not s.is_zero for s in r) for r in self.data)

    def is_col_regular(self) -> bool:
        return all(any(not self.data[i][j].is_zero for i in range(self.rows))
                   for j in range(self.cols))

    def is_regular(self) -> bool:
        return self.is_row_regular() and self.is_col_regular()

    def has_regular_columns(self) -> bool:
        """Every column is a regular vector, i.e. the matrix has no zeros."""
        return all(not s.is_zero for r in self.data for s in r)

    def __le__(self, other: Matrix) -> bool:
        self._check_same(other, "<=")
        if self.shape != other.shape:
            raise ShapeError(f"cannot compare shapes {self.shape} and {other.shape}")
        return all(a <= b for ra, rb in zip(self.data, other.data)
                   for a, b in zip(ra, rb))

    def __ge__(self, other: Matrix) -> bool:
        return other <= self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix) or other.sf is not self.sf:
            return False
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.data, other.data)
            for a, b in zip(ra, rb))

    __hash__ = None

    def __repr__(self) -> str:
        body = "; ".join(" ".join(s.literal(".") for s in r) for r in self.data)
        return f"Matrix({self.sf.tag}, [{body}])"


def vector(sf: Semifield, entries) -> Matrix:
    """Column vector from an iterable of payloads (``None`` = zero)."""
    return Matrix.from_rows(sf, [[v] for v in entries])


def ones_vector(sf: Semifield, n: int) -> Matrix:
    return Matrix.ones(sf, n, 1)


def is_regular_vector(x: Matrix) -> bool:
    """No zero entries (the vector sense of regularity)."""
    return all(not s.is_zero for r in x.data for s in r)


# ----------------------------------------------------------------------
# named operations

def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def scal_mul(x: Scalar, a: Matrix) -> Matrix:
    return x * a


def conj_transpose(a: Matrix) -> Matrix:
    return a.conj()


def trace(a: Matrix) -> Scalar:
    return a.trace()


def mat_power(a: Matrix, p: int) -> Matrix:
    return a.power(p)


def norm(a: Matrix) -> Scalar:
    return a.norm()


def _power_traces(a: Matrix) -> list[Scalar]:
    """Traces of A^1 .. A^n for square A of order n."""
    a._require_square("power traces")
    out = []
    p = a
    for _ in range(a.rows):
        out.append(p.trace())
        p = p @ a
    return out


def tr_functional(a: Matrix) -> Scalar:
    """Idempotent sum of the traces of A^1 .. A^n.

    At most ``one`` exactly when every cycle weight in A is at most ``one``;
    this gates the existence of regular solutions to ``A x + b <= x``.
    """
    return a.sf.sum(_power_traces(a))


def spectral_radius(a: Matrix) -> Scalar:
    """Largest eigenvalue: the sum of tr(A^m)^(1/m) over m = 1..n.

    Equals the extremal cycle mean of the weighted digraph of A; the zero
    scalar signals a matrix without nonzero cycles.
    """
    traces = _power_traces(a)
    return a.sf.sum(t ** Fraction(1, m + 1) for m, t in enumerate(traces))


@dataclass(frozen=True)
class StarClosure:
    """Truncated power sum plus the flag telling whether it is a closure."""
    matrix: Matrix
    closure_valid: bool


def kleene_star(a: Matrix) -> StarClosure:
    """Star with the validity flag: the truncated sum is always returned,
    and ``closure_valid`` records whether ``tr_functional(a) <= one``."""
    valid = tr_functional(a) <= a.sf.one
    return StarClosure(a.star(), valid)


# ----------------------------------------------------------------------
# text form: rows of whitespace-separated literals, '.' or 'null' for zero

def format_matrix(a: Matrix, zero_token: str = ".") -> str:
    cells = [[s.literal(zero_token) for s in r] for r in a.data]
    widths = [max(len(cells[i][j]) for i in range(a.rows)) for j in range(a.cols)]
    return "\n".join(
        "  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


def parse_matrix(sf: Semifield, text: str) -> Matrix:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([sf.from_literal(tok) for tok in line.split()])
    if not rows:
        raise ShapeError("no matrix rows found")
    width = len(rows[0])
    for r in rows:
        if len(r) != width:
            raise ShapeError("ragged matrix rows")
    return Matrix(sf, tuple(tuple(r) for r in rows))
