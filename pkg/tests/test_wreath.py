import itertools

import pytest

from src.algebra.wreath import (
    IDEMPOTENT_KINDS,
    GroupAlgElement,
    WreathElement,
    alpha,
    enumerate_group,
    group_order,
    idempotent,
    identity,
    transposition,
    wreath_inverse,
    wreath_mult,
)
from src.utils.errors import InputError


@pytest.mark.parametrize("n, m", [(1, 1), (1, 3), (2, 2), (3, 1), (2, 3)])
def test_group_order(n, m):
    assert len(enumerate_group(n, m)) == group_order(n, m)


def test_multiplication_laws_differ():
    s = WreathElement((1, 0), (0, 0), 2)
    a = WreathElement((0, 1), (1, 0), 2)
    assert wreath_mult(s, a, "standard") == WreathElement((1, 0), (1, 0), 2)
    assert wreath_mult(s, a, "flipped") == WreathElement((1, 0), (0, 1), 2)


@pytest.mark.parametrize("convention", ["standard", "flipped"])
def test_group_axioms(convention):
    group = enumerate_group(2, 2)
    e = identity(2, 2)
    for g in group:
        assert wreath_mult(g, e, convention) == g == wreath_mult(e, g, convention)
        assert wreath_mult(g, wreath_inverse(g, convention), convention) == e
    for g, h, k in itertools.product(group, repeat=3):
        assert wreath_mult(wreath_mult(g, h, convention), k, convention) == \
            wreath_mult(g, wreath_mult(h, k, convention), convention)


def test_element_validation():
    with pytest.raises(InputError):
        WreathElement((0, 0), (0, 0), 2)
    with pytest.raises(InputError):
        transposition(2, 1, 0, 0)
    assert alpha(2, 3, 1, power=4).gamma == (0, 1)


def test_dict_form_is_one_based():
    g = WreathElement((1, 0), (1, 0), 2)
    assert g.to_dict() == {"sigma": [2, 1], "gamma": [1, 0]}
    assert WreathElement.from_dict(g.to_dict(), 2) == g


@pytest.mark.parametrize("n, m", [(1, 2), (2, 2), (2, 3)])
def test_named_idempotents(n, m):
    for kind in IDEMPOTENT_KINDS:
        i = 1 % m if kind in ("eps_i", "nu_i") else None
        e = idempotent(kind, n, m, i)
        assert e * e == e


def test_idempotent_errors():
    with pytest.raises(InputError):
        idempotent("eps_i", 1, 2)
    with pytest.raises(InputError):
        idempotent("unknown", 1, 2)


def test_group_algebra_products():
    s = GroupAlgElement.from_group(transposition(2, 1, 0, 1))
    one = GroupAlgElement.one(2, 1)
    assert s * s == one
    assert (one + s) * (one - s) == one - one
    assert (one - one).is_zero()
