import itertools

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.field.scalar import Scalar
from src.quiver.core import (
    INF,
    build_cyclic,
    double,
    enumerate_positive_roots,
    doubled_framed_cyclic,
    framed_cyclic,
    framed_dims,
    is_positive_root,
    is_regular,
    lambda_from_tau,
    pairing,
    parse_vertex,
    tits_form,
)
from src.utils.errors import InputError, ShapeMismatchError


def test_cycle_arrows():
    q = build_cyclic(3)
    assert [(a.name, a.src, a.tgt) for a in q.arrows] == [("X0", 1, 0), ("X1", 2, 1), ("X2", 0, 2)]
    doubled = double(q)
    assert doubled.arrow("Y0").src == 0 and doubled.arrow("Y0").tgt == 1


def test_doubled_framed_has_loops_for_m1():
    q = doubled_framed_cyclic(1)
    assert sorted(a.name for a in q.arrows) == ["X0", "Y0", "v", "w"]
    assert q.has_loop(0)
    assert q.arrow("v").src == 0 and q.arrow("v").tgt == INF


def test_doubled_framed_arrow_count():
    assert len(doubled_framed_cyclic(2).arrows) == 6


@given(st.integers(0, 12))
def test_tits_form_of_jordan_framing(n):
    assert tits_form(framed_cyclic(1), {INF: 1, 0: n}) == 1 - n


def test_roots_of_framed_jordan_quiver():
    quiver = framed_cyclic(1)
    assert is_positive_root(quiver, {INF: 1, 0: 3})
    assert is_positive_root(quiver, {INF: 1, 0: 0})
    assert not is_positive_root(quiver, {INF: 2, 0: 1})


@given(st.integers(1, 4), st.integers(1, 3))
@hsettings(max_examples=25, deadline=None)
def test_constant_dimension_vectors_are_roots(m, n):
    alpha = framed_dims([n] * m)
    assert is_positive_root(framed_cyclic(m), alpha)
    assert tits_form(framed_cyclic(m), alpha) == 1 - n


def test_root_rejects_bad_vectors():
    with pytest.raises(InputError):
        is_positive_root(framed_cyclic(1), {INF: 0, 0: 0})
    with pytest.raises(InputError):
        is_positive_root(framed_cyclic(1), {INF: 1, 0: -1})


def test_disconnected_support_is_not_a_root():
    assert not is_positive_root(framed_cyclic(3), {INF: 1, 0: 0, 1: 1, 2: 0})


@pytest.mark.parametrize("tau, expected", [
    ([1, -1], False),
    ([1, 1], True),
    ([2, 1], True),
    ([0, 0], False),
])
def test_regularity_m2(tau, expected):
    assert is_regular(tau, 2) is expected


def test_regularity_m1_and_shape():
    assert is_regular([Scalar.parse("1/2")], 1)
    assert not is_regular([0], 1)
    with pytest.raises(ShapeMismatchError):
        is_regular([1], 2)


def test_lambda_from_tau():
    lam = lambda_from_tau([1, 1], [1, 1])
    assert lam[INF] == -2
    assert lam[0] == 1 and lam[1] == 1


def test_parse_vertex():
    assert parse_vertex("inf") == INF
    assert parse_vertex("2") == 2


def test_weight_pairs_to_zero_with_its_dimension_vector():
    n_vec = [2, 1, 3]
    lam = lambda_from_tau([1, Scalar.parse("1/2"), 2], n_vec)
    assert pairing(lam, framed_dims(n_vec)) == 0
    with pytest.raises(ShapeMismatchError):
        pairing(lam, {INF: 1, 0: 2})


@pytest.mark.parametrize("m", [1, 2, 3])
def test_root_test_matches_enumeration(m):
    quiver = framed_cyclic(m)
    roots = enumerate_positive_roots(quiver, 4)
    for vec in itertools.product(range(5), repeat=len(quiver.vertices)):
        if any(vec):
            alpha = dict(zip(quiver.vertices, vec))
            assert is_positive_root(quiver, alpha) == (vec in roots), vec


def test_enumeration_contains_known_roots():
    roots = enumerate_positive_roots(framed_cyclic(2), 3)
    # entries ordered (0, 1, inf)
    assert (0, 0, 1) in roots
    assert (1, 1, 1) in roots
    assert (2, 1, 1) in roots
    assert (3, 0, 1) not in roots
