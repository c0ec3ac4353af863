import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.field.scalar import Scalar, make_root_of_unity
from src.linalg.matrix import Matrix, block_diag, commutator, intertwiner_space, stack_columns
from src.utils.errors import ShapeMismatchError, SingularMatrixError

small_ints = st.integers(-4, 4)


@st.composite
def int_matrices(draw, rows: int, cols: int):
    return Matrix.from_rows([[draw(small_ints) for _ in range(cols)] for _ in range(rows)], cols=cols)


@given(int_matrices(3, 4))
@hsettings(max_examples=40, deadline=None)
def test_kernel_is_annihilated(A):
    kernel = A.kernel_basis()
    assert len(kernel) + A.rank() == 4
    for k in kernel:
        assert (A @ k).is_zero()


@given(int_matrices(3, 3))
@hsettings(max_examples=40, deadline=None)
def test_inverse_or_singular(A):
    if A.rank() == 3:
        assert A @ A.inverse() == Matrix.identity(3)
    else:
        with pytest.raises(SingularMatrixError):
            A.inverse()


def test_rref_pivots():
    A = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    reduced, pivots = A.rref()
    assert pivots == [0, 1]
    assert reduced == Matrix.from_rows([[1, 0, 1], [0, 1, 1], [0, 0, 0]])


def test_solve():
    A = Matrix.from_rows([[1, 1], [1, -1]])
    x = A.solve(Matrix.column([3, 1]))
    assert x == Matrix.column([2, 1])
    assert Matrix.from_rows([[1, 1], [1, 1]]).solve(Matrix.column([0, 1])) is None


def test_empty_shapes():
    v = Matrix.zeros(0, 1)
    w = Matrix.zeros(1, 0)
    assert (w @ v).shape == (1, 1)
    assert (w @ v).is_zero()
    assert (v @ w).shape == (0, 0)


def test_shape_errors():
    with pytest.raises(ShapeMismatchError):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(ShapeMismatchError):
        Matrix.identity(2) + Matrix.identity(3)
    with pytest.raises(ShapeMismatchError):
        Matrix(2, 2, [1, 2, 3])


def test_cyclotomic_entries():
    z = make_root_of_unity(3, 1)
    A = Matrix.diag([z, z], m=3)
    assert (A @ A @ A) == Matrix.identity(2, 3)
    assert A.trace() == z * 2


def test_restrict_to_invariant_subspace():
    A = Matrix.from_rows([[2, 0, 0], [0, 3, 1], [0, 0, 3]])
    basis = [Matrix.column([0, 1, 0])]
    assert A.restrict(basis) == Matrix.from_rows([[3]])
    with pytest.raises(ShapeMismatchError):
        A.restrict([Matrix.column([0, 0, 1])])


def test_intertwiners():
    A = Matrix.from_rows([[0, 1], [-1, 0]])
    B = Matrix.diag([1, 2])
    # a pair with no common invariant line has only scalar self-intertwiners
    assert len(intertwiner_space([A, B], [A, B])) == 1
    assert len(intertwiner_space([B], [B])) == 2


def test_helpers():
    cols = [Matrix.column([1, 0]), Matrix.column([0, 1])]
    assert stack_columns(cols, 2) == Matrix.identity(2)
    assert stack_columns([], 2).shape == (2, 0)
    assert block_diag([Matrix.identity(1), Matrix.identity(2)]) == Matrix.identity(3)
    assert commutator(Matrix.diag([1, 2]), Matrix.diag([3, 4])).is_zero()


def test_dict_form():
    A = Matrix.from_rows([[1, Scalar.parse("1/2")]])
    assert Matrix.from_dict(A.to_dict()) == A
    assert Matrix.from_dict({"rows": 0, "cols": 2, "entries": []}).shape == (0, 2)
