import pytest

from src.algebra.ncalg import FREE_ALPHABET, NCElement, enumerate_words, word_to_str
from src.algebra.wreath import group_order
from src.correspondence.cherednik import (
    HModule,
    conjugate_module,
    eg_map,
    group_representation,
    idempotent_operator,
    is_simple_module,
    matching_nakajima_point,
    normalized,
    rank_identity,
    require_valid_module,
    solve_fixture,
    spherical_commutativity,
    spherical_theta_operator,
    verify_module,
    weight_via_module,
    wreath_weight_pullback,
    xi_pipeline,
)
from src.correspondence.corresp import distinctness_matrix, epsilon
from src.linalg.matrix import Matrix
from src.quiver.repvar import closed_paths
from src.utils.errors import InputError, UnsupportedSizeError, ValidationError


def test_fixture_satisfies_relations(module_n2):
    assert verify_module(module_n2).passed
    assert is_simple_module(module_n2)


def test_rank_one_fixture():
    module = solve_fixture(1, params={"x": 3, "y": -2})
    assert verify_module(module).passed
    point = eg_map(module)
    assert point.n == 1
    assert epsilon(point, ()) == -1


def test_eg_map_recovers_point_a(module_n2, point_a):
    assert eg_map(module_n2) == point_a


def test_module_weights(module_n2):
    assert weight_via_module(module_n2, ()) == -2
    assert weight_via_module(module_n2, "x") == -1
    assert weight_via_module(module_n2, "xy") == 1


def test_both_weight_variants_match_epsilon(module_n2):
    point = eg_map(module_n2)
    for word in enumerate_words(FREE_ALPHABET, 3):
        ep = weight_via_module(module_n2, word, "ep")
        assert ep == weight_via_module(module_n2, word, "ep1"), word_to_str(word)
        assert ep == epsilon(point, word), word_to_str(word)


def test_rank_identity_and_spherical_commutativity(module_n2):
    assert rank_identity(module_n2)
    assert spherical_commutativity(module_n2)


def test_xi_pipeline(module_n2):
    model = xi_pipeline(module_n2)
    assert model.codim_profile == [1, 2, 2, 2, 2]


def test_xi_pipeline_separates_fixtures():
    fixtures = [
        (1, {"x": 0, "y": 0}),
        (1, {"x": 3, "y": -2}),
        (2, {"p": 0, "q": 1, "r": 0, "t": 0}),
        (2, {"p": 0, "q": 2, "r": 0, "t": 0}),
        (2, {"p": 1, "q": 3, "r": 1, "t": -1}),
    ]
    models = [xi_pipeline(solve_fixture(n, params=params)) for n, params in fixtures]
    assert [model.n for model in models] == [1, 1, 2, 2, 2]
    matrix = distinctness_matrix(models)
    for i in range(5):
        for j in range(5):
            assert matrix[i][j] is (i != j)


def test_conjugated_module_gives_isomorphic_point(module_n2):
    T = Matrix.from_rows([[1, 1], [0, 1]])
    other = conjugate_module(module_n2, T)
    assert verify_module(other).passed
    assert weight_via_module(other, "xy") == weight_via_module(module_n2, "xy")


def test_normalization():
    module = solve_fixture(2, c=2, params={"p": 0, "q": 1})
    assert verify_module(module).passed
    assert normalized(module).c == 1
    assert weight_via_module(module, ()) == -2


def test_fixture_errors():
    with pytest.raises(UnsupportedSizeError):
        solve_fixture(3)
    with pytest.raises(InputError):
        solve_fixture(2, params={"p": 1, "q": 1})
    with pytest.raises(InputError):
        normalized(solve_fixture(2, c=0))


# -- wreath modules ---------------------------------------------------------


def test_wreath_fixture(wreath_module):
    assert verify_module(wreath_module).passed
    rep, conflicts = group_representation(wreath_module)
    assert len(rep) == group_order(1, 2)
    assert not conflicts


def test_wreath_pullback_of_trivial_path(wreath_module):
    assert wreath_weight_pullback(wreath_module, "").to_rational() == -2


def test_pullback_matches_nakajima_weights(wreath_module):
    rep = matching_nakajima_point(wreath_module)
    for path in closed_paths(rep, 2):
        lhs = wreath_weight_pullback(wreath_module, path).to_rational()
        assert lhs == epsilon(rep, path).to_rational(), word_to_str(path)


def test_wreath_module_rejections(wreath_module, module_n2):
    with pytest.raises(InputError):
        eg_map(wreath_module)
    with pytest.raises(InputError):
        wreath_weight_pullback(module_n2, "")
    with pytest.raises(UnsupportedSizeError):
        matching_nakajima_point(module_n2)


def test_spherical_operator_is_weight_times_e(module_n2):
    A_e = idempotent_operator(module_n2, "e")
    for word in enumerate_words(FREE_ALPHABET, 2):
        op = spherical_theta_operator(module_n2, NCElement.from_word(word))
        assert op == A_e * weight_via_module(module_n2, word), word_to_str(word)


def test_require_valid_module(module_n2):
    require_valid_module(module_n2)
    broken = HModule(2, 1, module_n2.x, module_n2.y, module_n2.generators, c=2)
    with pytest.raises(ValidationError):
        require_valid_module(broken)
