"""Exact dense linear algebra over Q(zeta_m)."""

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from src.field.scalar import Scalar, as_scalar
from src.utils.errors import ShapeMismatchError, SingularMatrixError

Entry = Union[int, Fraction, Scalar]


class Matrix:
    """Immutable rows x cols matrix of Scalars stored row-major.

    0 x k and k x 0 matrices are legal.
    """

    __slots__ = ("rows", "cols", "entries", "m")

    def __init__(self, rows: int, cols: int, entries: Sequence[Entry], m: Optional[int] = None):
        if len(entries) != rows * cols:
            raise ShapeMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        if m is None:
            m = next((e.m for e in entries if isinstance(e, Scalar)), 1)
        self.rows = rows
        self.cols = cols
        self.m = m
        self.entries = tuple(as_scalar(e, m) for e in entries)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]], m: Optional[int] = None,
                  cols: Optional[int] = None) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else (cols or 0)
        if any(len(row) != c for row in rows):
            raise ShapeMismatchError("ragged rows")
        return cls(r, c, [e for row in rows for e in row], m)

    @classmethod
    def zeros(cls, rows: int, cols: int, m: int = 1) -> "Matrix":
        return cls(rows, cols, [Scalar.zero(m)] * (rows * cols), m)

    @classmethod
    def identity(cls, n: int, m: int = 1) -> "Matrix":
        zero, one = Scalar.zero(m), Scalar.one(m)
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)], m)

    @classmethod
    def diag(cls, values: Sequence[Entry], m: int = 1) -> "Matrix":
        n = len(values)
        zero = Scalar.zero(m)
        return cls(n, n, [as_scalar(values[i], m) if i == j else zero
                          for i in range(n) for j in range(n)], m)

    @classmethod
    def column(cls, values: Sequence[Entry], m: int = 1) -> "Matrix":
        return cls(len(values), 1, list(values), m)

    @classmethod
    def row(cls, values: Sequence[Entry], m: int = 1) -> "Matrix":
        return cls(1, len(values), list(values), m)

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def column_vector(self, j: int) -> "Matrix":
        return Matrix(self.rows, 1, [self[i, j] for i in range(self.rows)], self.m)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic -------------------------------------------------------

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ShapeMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)], self.m)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)], self.m)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries], self.m)

    def __mul__(self, scalar: Entry) -> "Matrix":
        if isinstance(scalar, Matrix):
            return NotImplemented
        s = as_scalar(scalar, self.m)
        return Matrix(self.rows, self.cols, [s * a for a in self.entries], self.m)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        zero = Scalar.zero(self.m)
        a_rows = self.to_rows()
        b_cols = [[other[k, j] for k in range(other.rows)] for j in range(other.cols)]
        out = []
        for row in a_rows:
            for col in b_cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
        return Matrix(self.rows, other.cols, out, self.m)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)], self.m)

    def trace(self) -> Scalar:
        if not self.is_square():
            raise ShapeMismatchError("trace of a non-square matrix")
        total = Scalar.zero(self.m)
        for i in range(self.rows):
            total = total + self[i, i]
        return total

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ShapeMismatchError("hstack needs equal row counts")
        a, b = self.to_rows(), other.to_rows()
        return Matrix.from_rows([ra + rb for ra, rb in zip(a, b)], self.m,
                                cols=self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ShapeMismatchError("vstack needs equal column counts")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries, self.m)

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """
        Reduced row echelon form by exact Gaussian elimination.

        Returns:
            The reduced matrix and the list of pivot columns
        """
        rows = self.to_rows()
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            if r >= self.rows:
                break
            pivot = next((i for i in range(r, self.rows) if rows[i][c]), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [inv * e if e else e for e in rows[r]]
            for i in range(self.rows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Matrix.from_rows(rows, self.m, cols=self.cols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list["Matrix"]:
        """Basis of the right null space as cols x 1 column vectors."""
        reduced, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        zero, one = Scalar.zero(self.m), Scalar.one(self.m)
        basis = []
        for f in free:
            vec = [zero] * self.cols
            vec[f] = one
            for i, p in enumerate(pivots):
                vec[p] = -reduced[i, f]
            basis.append(Matrix.column(vec, self.m))
        return basis

    def image_basis(self) -> list["Matrix"]:
        """Column-echelon basis of the column space."""
        reduced, pivots = self.transpose().rref()
        return [Matrix.column(reduced.to_rows()[i], self.m) for i in range(len(pivots))]

    def solve(self, rhs: "Matrix") -> Optional["Matrix"]:
        """
        Solve self @ X = rhs.

        Returns:
            One solution (free variables set to zero) or None if inconsistent
        """
        if rhs.rows != self.rows:
            raise ShapeMismatchError("right-hand side has the wrong number of rows")
        reduced, pivots = self.hstack(rhs).rref()
        if any(p >= self.cols for p in pivots):
            return None
        zero = Scalar.zero(self.m)
        out = [[zero] * rhs.cols for _ in range(self.cols)]
        for i, p in enumerate(pivots):
            for j in range(rhs.cols):
                out[p][j] = reduced[i, self.cols + j]
        return Matrix.from_rows(out, self.m, cols=rhs.cols)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ShapeMismatchError("inverse of a non-square matrix")
        n = self.rows
        reduced, pivots = self.hstack(Matrix.identity(n, self.m)).rref()
        if pivots[:n] != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return Matrix.from_rows([row[n:] for row in reduced.to_rows()], self.m, cols=n)

    def restrict(self, basis: Sequence["Matrix"]) -> "Matrix":
        """
        Matrix of this operator on the invariant subspace spanned by basis.

        Args:
            basis: Linearly independent column vectors spanning an invariant subspace

        Returns:
            k x k matrix R with self @ B = B @ R
        """
        B = stack_columns(basis, self.rows, self.m)
        R = B.solve(self @ B)
        if R is None:
            raise ShapeMismatchError("subspace is not invariant under the operator")
        return R

    # -- misc -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.to_rows())
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [e.to_dict() for e in self.entries]}

    @classmethod
    def from_dict(cls, data: dict, m: int = 1) -> "Matrix":
        entries = [Scalar.from_dict(e) for e in data["entries"]]
        return cls(int(data["rows"]), int(data["cols"]), entries, entries[0].m if entries else m)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def stack_columns(columns: Sequence[Matrix], rows: int, m: int = 1) -> Matrix:
    """Assemble column vectors into a rows x len(columns) matrix."""
    if not columns:
        return Matrix.zeros(rows, 0, m)
    out = columns[0]
    for col in columns[1:]:
        out = out.hstack(col)
    return out


def block_diag(blocks: Iterable[Matrix], m: int = 1) -> Matrix:
    blocks = list(blocks)
    n = sum(b.rows for b in blocks)
    k = sum(b.cols for b in blocks)
    zero = Scalar.zero(m)
    rows = [[zero] * k for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return Matrix.from_rows(rows, m, cols=k)


def intertwiner_space(act_a: Sequence[Matrix], act_b: Sequence[Matrix]) -> list[Matrix]:
    """
    Basis of {g : g @ A_k = B_k @ g for all k} by one linear solve.

    Args:
        act_a: Generator actions on a space of dimension a
        act_b: Generator actions on a space of dimension b (same length)

    Returns:
        Basis of the intertwiner space as b x a matrices
    """
    if len(act_a) != len(act_b):
        raise ShapeMismatchError("action lists have different lengths")
    if any(not A.is_square() for A in act_a) or any(not B.is_square() for B in act_b):
        raise ShapeMismatchError("generator actions must be square")
    m = (act_a[0].m if act_a else 1)
    a = act_a[0].rows if act_a else 0
    b = act_b[0].rows if act_b else 0
    if any(A.rows != a for A in act_a) or any(B.rows != b for B in act_b):
        raise ShapeMismatchError("generator actions have inconsistent sizes")
    unknowns = a * b
    zero = Scalar.zero(m)
    equations: list[list[Scalar]] = []
    for A, B in zip(act_a, act_b):
        for i in range(b):
            for j in range(a):
                eq = [zero] * unknowns
                for l in range(a):
                    if A[l, j]:
                        eq[i * a + l] = eq[i * a + l] + A[l, j]
                for l in range(b):
                    if B[i, l]:
                        eq[l * a + j] = eq[l * a + j] - B[i, l]
                equations.append(eq)
    system = Matrix.from_rows(equations, m, cols=unknowns) if equations else Matrix.zeros(0, unknowns, m)
    return [Matrix(b, a, list(v.entries), m) for v in system.kernel_basis()]
