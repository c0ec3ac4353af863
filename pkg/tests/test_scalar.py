from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.field.scalar import Scalar, euler_phi, field_arith, make_root_of_unity
from src.utils.errors import ConductorMismatchError, DivisionByZeroError, InputError


@st.composite
def scalars(draw, m: int):
    coeffs = draw(st.lists(st.integers(-6, 6), min_size=euler_phi(m), max_size=euler_phi(m)))
    return Scalar(m, coeffs)


conductors = st.sampled_from([1, 3, 4, 5])


@given(st.data(), conductors)
@hsettings(max_examples=40, deadline=None)
def test_ring_axioms(data, m):
    a, b, c = (data.draw(scalars(m)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(st.data(), conductors)
@hsettings(max_examples=40, deadline=None)
def test_inverse(data, m):
    a = data.draw(scalars(m))
    if a.is_zero():
        with pytest.raises(DivisionByZeroError):
            a.inverse()
    else:
        assert a * a.inverse() == Scalar.one(m)


def test_roots_of_unity():
    z = make_root_of_unity(3, 1)
    assert z ** 3 == Scalar.one(3)
    assert Scalar.one(3) + z + z ** 2 == Scalar.zero(3)
    assert make_root_of_unity(4, 2) == Scalar.from_rational(-1, 4)
    assert make_root_of_unity(1, 5) == Scalar.one()


def test_conjugate():
    z = make_root_of_unity(5, 1)
    assert z * z.conjugate() == Scalar.one(5)
    assert z.conjugate() == make_root_of_unity(5, 4)


def test_parse_and_rational():
    s = Scalar.parse("-3/4")
    assert s.to_rational() == Fraction(-3, 4)
    assert s == Fraction(-3, 4)
    assert str(s) == "-3/4"
    with pytest.raises(InputError):
        Scalar.parse("abc")
    with pytest.raises(InputError):
        make_root_of_unity(3, 1).to_rational()


def test_lift():
    assert Scalar.parse("2").lift(4) == Scalar.from_rational(2, 4)
    with pytest.raises(InputError):
        make_root_of_unity(3, 1).lift(1)


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatchError):
        make_root_of_unity(3, 1) + make_root_of_unity(4, 1)


def test_dict_form():
    s = Scalar(3, [Fraction(1, 2), -1])
    assert s.to_dict() == {"m": 3, "coeffs": [["1", "2"], ["-1", "1"]]}
    assert Scalar.from_dict(s.to_dict()) == s
    with pytest.raises(InputError):
        Scalar.from_dict({"m": 3, "coeffs": [["1", "1"]]})


def test_field_arith():
    a, b = Scalar.parse("2"), Scalar.parse("3")
    assert field_arith("add", a, b) == 5
    assert field_arith("mul", a, b) == 6
    assert field_arith("neg", a) == -2
    assert field_arith("inv", a) == Fraction(1, 2)
    with pytest.raises(InputError):
        field_arith("pow", a, b)
