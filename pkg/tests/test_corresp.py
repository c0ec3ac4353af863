import pytest

from src.algebra.ncalg import FREE_ALPHABET, NCElement, enumerate_words, evaluate_element
from src.correspondence.corresp import (
    a_module_check,
    cm_word,
    codim_profile,
    distinct,
    distinctness_matrix,
    echelon_basis,
    echelon_remainder,
    epsilon,
    eval_map_kernel,
    in_span,
    j_basis,
    omega,
    omega_tau,
    weight_functional,
    well_definedness_residuals,
)
from src.linalg.matrix import Matrix
from src.quiver.repvar import CMPoint, conjugate_point, generate_cm, random_cm_points
from src.utils.errors import AssertionFailure, InputError, NonClosedPathError, ValidationError


def test_epsilon_on_point_a(point_a):
    assert epsilon(point_a, ()) == -2
    assert epsilon(point_a, ("x",)) == -1
    assert epsilon(point_a, ("y",)) == 0
    assert epsilon(point_a, ("x", "y")) == 1
    assert epsilon(point_a, ("y", "x")) == -1


def test_weight_functional_table(point_a):
    table = weight_functional(point_a, 2)
    assert table[("x", "y")] == 1
    assert len(table.values) == 7


def test_epsilon_rejects_open_paths(nakajima_m2):
    with pytest.raises(NonClosedPathError):
        epsilon(nakajima_m2, ("X0",))
    assert epsilon(nakajima_m2, ("e0",)) == -2


def test_ideal_model_n1(point_n1):
    model = omega(point_n1, 2)
    assert len(model.K_basis) == 6
    assert len(model.J_basis) == 1
    assert model.codim_profile == [1, 1, 1]
    assert model.quotient_dim == 5
    assert a_module_check(model)


def test_ideal_model_point_a(point_a):
    model = omega(point_a, 4)
    assert model.codim_profile == [1, 2, 2, 2, 2]
    assert len(model.K_basis) == 31 - 2
    assert len(model.fingerprint) == 31
    for element in model.J_basis:
        assert evaluate_element(element, point_a, point_a.v).is_zero()
    assert a_module_check(model)


def test_j_inside_k(point_a):
    words = enumerate_words(FREE_ALPHABET, 4)
    K = eval_map_kernel(point_a, 4, words)
    for element in j_basis(point_a, 4):
        assert in_span(element, K, words)


def test_ideal_model_empty_point():
    model = omega(generate_cm(0, []))
    assert model.d == 4
    assert set(model.codim_profile) == {0}


def test_default_degree_grows_with_n():
    model = omega(generate_cm(3, [0, 1, 2]))
    assert model.d == 5
    assert model.codim_profile[2:] == [3, 3, 3, 3]


@pytest.mark.parametrize("n", [1, 2])
def test_well_definedness(n):
    for point in random_cm_points(n, 3, seed=11):
        assert all(r.is_zero() for r in well_definedness_residuals(point, 4).values())


def test_ten_distinct_points_of_c2():
    models = [omega(generate_cm(2, [s, s + 1]), 4) for s in range(10)]
    matrix = distinctness_matrix(models)
    for i in range(10):
        for j in range(10):
            assert matrix[i][j] is (i != j)


def test_conjugate_points_are_not_distinct(point_a):
    g = Matrix.from_rows([[2, 1], [1, 1]])
    assert not distinct(omega(point_a, 4), omega(conjugate_point(point_a, g), 4))


def test_omega_rejections(nakajima_m2):
    bad = CMPoint(1, Matrix.zeros(1, 1), Matrix.zeros(1, 1), Matrix.column([1]), Matrix.row([1]))
    with pytest.raises(ValidationError):
        omega(bad, 2)
    with pytest.raises(InputError):
        omega(nakajima_m2, 2)
    with pytest.raises(InputError):
        j_basis(generate_cm(1, [0]), 1)


def test_echelon_basis_dedupes():
    words = enumerate_words(FREE_ALPHABET, 1)
    x, y = NCElement.from_word("x"), NCElement.from_word("y")
    basis = echelon_basis([x, y, x + y], words)
    assert len(basis) == 2
    assert in_span(x - y, basis, words)
    assert not in_span(NCElement.one(), basis, words)


def test_codim_profile_matches_rank(point_a):
    words = enumerate_words(FREE_ALPHABET, 2)
    assert codim_profile(point_a, words, 2) == [1, 2, 2]


def test_cyclic_model(nakajima_m2):
    model = omega_tau(nakajima_m2, 4)
    assert model.paths[0] == ("e0",)
    assert model.fingerprint[0] == -2
    assert model.codim_profile[0] == 1
    assert len(model.fingerprint) == len(model.paths)


def test_cyclic_model_from_cm_point(point_a):
    model = omega_tau(point_a, 2)
    assert model.codim_profile == [1, 2, 2]


def test_echelon_remainder():
    words = enumerate_words(FREE_ALPHABET, 2)
    x, y = NCElement.from_word("x"), NCElement.from_word("y")
    xy = NCElement.from_word("xy")
    basis = echelon_basis([x + xy, y - xy], words)
    assert echelon_remainder(x + y, basis).is_zero()
    xx = NCElement.from_word("xx")
    assert echelon_remainder(xx + x + y, basis) == xx
    assert echelon_remainder(NCElement.one(), basis) == NCElement.one()


def test_omega_raises_when_quotient_is_not_a_module(point_a, mocker):
    mocker.patch("src.correspondence.corresp.a_module_check", return_value=False)
    with pytest.raises(AssertionFailure, match="not closed"):
        omega(point_a, 4)


def test_cm_word():
    assert cm_word(("e0",)) == ()
    assert cm_word(("X0", "Y0", "X0")) == ("x", "y", "x")


@pytest.mark.parametrize("point", [
    generate_cm(1, [3], [2]),
    CMPoint(2, Matrix.diag([0, 1]), Matrix.from_rows([[0, 1], [-1, 0]]),
            Matrix.column([1, -1]), Matrix.row([-1, 1])),
    *random_cm_points(2, 2, seed=5),
    random_cm_points(3, 1, seed=5)[0],
])
def test_cyclic_model_agrees_with_omega_for_m1(point):
    length = 2 * point.n
    model = omega(point, length)
    cyclic = omega_tau(point, length)
    words = [cm_word(p) for p in cyclic.paths]
    assert sorted(words) == sorted(enumerate_words(FREE_ALPHABET, length))
    values = dict(zip(words, cyclic.fingerprint))
    for word, value in zip(enumerate_words(FREE_ALPHABET, length), model.fingerprint):
        assert values[word] == value == epsilon(point, word)
    assert cyclic.codim_profile == model.codim_profile
    assert len(cyclic.K_basis) == len(model.K_basis)
