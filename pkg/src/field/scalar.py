"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are stored as coordinate vectors in the basis 1, z, ..., z^(phi(m)-1)
of Q[z]/Phi_m(z). The cyclotomic polynomial and polynomial inversion come
from sympy; the hot arithmetic path stays on plain Fraction tuples.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

from sympy import QQ, Poly, cyclotomic_poly, symbols, totient

from src.utils.errors import ConductorMismatchError, DivisionByZeroError, InputError

_Z = symbols("z")

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    """Degree of Q(zeta_m) over Q."""
    return int(totient(m))


@lru_cache(maxsize=None)
def cyclotomic_coefficients(m: int) -> tuple[int, ...]:
    """
    Coefficients of Phi_m in ascending degree.

    Args:
        m: Conductor (m >= 1)

    Returns:
        Tuple of length phi(m) + 1, last entry 1
    """
    if m < 1:
        raise InputError(f"conductor must be positive, got {m}")
    poly = Poly(cyclotomic_poly(m, _Z), _Z)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _reduce(coeffs: list[Fraction], m: int) -> tuple[Fraction, ...]:
    """Reduce a polynomial (ascending coefficients) modulo Phi_m."""
    phi = cyclotomic_coefficients(m)
    d = len(phi) - 1
    c = list(coeffs) + [Fraction(0)] * max(0, d - len(coeffs))
    for i in range(len(c) - 1, d - 1, -1):
        t = c[i]
        if t:
            base = i - d
            for j in range(d):
                if phi[j]:
                    c[base + j] -= t * phi[j]
            c[i] = Fraction(0)
    return tuple(c[:d])


class Scalar:
    """Immutable element of Q(zeta_m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable[Rational]):
        """
        Build a scalar from polynomial coefficients in z (ascending).

        Coefficients beyond phi(m) are reduced modulo Phi_m.
        """
        values = [Fraction(c) for c in coeffs]
        if len(values) == euler_phi(m):
            reduced = tuple(values)
        else:
            reduced = _reduce(values, m)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", reduced)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _raw(cls, m: int, coeffs: tuple[Fraction, ...]) -> "Scalar":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "m", m)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def zero(cls, m: int = 1) -> "Scalar":
        return cls._raw(m, (Fraction(0),) * euler_phi(m))

    @classmethod
    def one(cls, m: int = 1) -> "Scalar":
        return cls.from_rational(1, m)

    @classmethod
    def from_rational(cls, q: Rational, m: int = 1) -> "Scalar":
        """Embed a rational number into Q(zeta_m)."""
        coeffs = [Fraction(0)] * euler_phi(m)
        coeffs[0] = Fraction(q)
        return cls._raw(m, tuple(coeffs))

    @classmethod
    def parse(cls, text: str, m: int = 1) -> "Scalar":
        """Parse a rational literal such as "3", "-2" or "3/4"."""
        try:
            return cls.from_rational(Fraction(text.strip()), m)
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"cannot parse scalar '{text}'") from e

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise InputError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, m: int) -> "Scalar":
        """Embed a rational scalar into the field of conductor m."""
        if m == self.m:
            return self
        return Scalar.from_rational(self.to_rational(), m)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Optional["Scalar"]:
        if isinstance(other, Scalar):
            if other.m != self.m:
                raise ConductorMismatchError(
                    f"cannot combine scalars of conductor {self.m} and {other.m}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.from_rational(other, self.m)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.m, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.m, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = len(self.coeffs)
        if d == 1:
            return Scalar._raw(self.m, (self.coeffs[0] * o.coeffs[0],))
        if o.is_rational():
            q = o.coeffs[0]
            return Scalar._raw(self.m, tuple(a * q for a in self.coeffs))
        if self.is_rational():
            q = self.coeffs[0]
            return Scalar._raw(self.m, tuple(q * b for b in o.coeffs))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Scalar._raw(self.m, _reduce(prod, self.m))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """
        Multiplicative inverse.

        Raises:
            DivisionByZeroError: if the scalar is zero
        """
        if self.is_zero():
            raise DivisionByZeroError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return Scalar.from_rational(1 / self.coeffs[0], self.m)
        f = Poly([QQ(c.numerator, c.denominator) for c in reversed(self.coeffs)], _Z, domain=QQ)
        modulus = Poly(cyclotomic_poly(self.m, _Z), _Z, domain=QQ)
        g = f.invert(modulus)
        coeffs = [Fraction(int(r.p), int(r.q)) for r in reversed(g.all_coeffs())]
        return Scalar(self.m, coeffs)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Scalar":
        """Image under the Galois automorphism zeta -> zeta^-1."""
        if self.is_rational():
            return self
        poly = [Fraction(0)] * self.m
        for i, c in enumerate(self.coeffs):
            poly[(-i) % self.m] += c
        return Scalar(self.m, poly)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.m, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Scalar(m={self.m}, coeffs={[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                power = "z" if i == 1 else f"z^{i}"
                parts.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(parts)

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Scalar":
        m = int(data["m"])
        coeffs = [Fraction(int(num), int(den)) for num, den in data["coeffs"]]
        if len(coeffs) != euler_phi(m):
            raise InputError(f"expected {euler_phi(m)} coefficients for m={m}, got {len(coeffs)}")
        return cls(m, coeffs)


def make_root_of_unity(m: int, k: int) -> Scalar:
    """Return zeta_m^k in reduced form (1 when m = 1)."""
    if m < 1:
        raise InputError(f"conductor must be positive, got {m}")
    poly = [Fraction(0)] * m
    poly[k % m] = Fraction(1)
    return Scalar(m, poly)


def field_arith(op: str, a: Scalar, b: Optional[Scalar] = None) -> Scalar:
    """
    Dispatch a field operation by name.

    Args:
        op: One of "add", "mul", "neg", "inv"
        a: First operand
        b: Second operand for binary operations

    Returns:
        Exact result in reduced form
    """
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if b is None:
        raise InputError(f"operation '{op}' needs two operands")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise InputError(f"unknown field operation '{op}'")


def as_scalar(value, m: int = 1) -> Scalar:
    """Coerce an int, Fraction or Scalar to a Scalar of conductor m."""
    if isinstance(value, Scalar):
        if value.m != m:
            return value.lift(m)
        return value
    return Scalar.from_rational(Fraction(value), m)
