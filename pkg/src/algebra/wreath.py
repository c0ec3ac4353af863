"""The wreath product S_n x| (Z/m)^n and its group algebra over Q(zeta_m).

Elements are pairs (sigma, gamma) with sigma a permutation of 0..n-1
(sigma[i] is the image of i) and gamma in (Z/m)^n. The group acts on the
coordinates of L^n by

    g x_i g^-1 = zeta^gamma_i x_sigma(i),   g y_i g^-1 = zeta^-gamma_i y_sigma(i).

Two multiplication laws are implemented. Only "standard" is compatible with
the action above; "flipped" is kept as a negative control.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal, Mapping, Optional

from src.field.scalar import Scalar, as_scalar, make_root_of_unity
from src.utils.errors import InputError, ValidationError

Convention = Literal["standard", "flipped"]
CONVENTIONS: tuple[str, ...] = ("standard", "flipped")


@dataclass(frozen=True, order=True)
class WreathElement:
    """Group element (sigma, gamma) of S_n x| (Z/m)^n."""

    sigma: tuple[int, ...]
    gamma: tuple[int, ...]
    m: int = 1

    def __post_init__(self):
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(n)):
            raise InputError(f"sigma {self.sigma} is not a permutation of 0..{n - 1}")
        if len(self.gamma) != n:
            raise InputError("sigma and gamma have different lengths")
        object.__setattr__(self, "gamma", tuple(g % self.m for g in self.gamma))

    @property
    def n(self) -> int:
        return len(self.sigma)

    def is_identity(self) -> bool:
        return self.sigma == tuple(range(self.n)) and not any(self.gamma)

    def to_dict(self) -> dict:
        """sigma is written 1-based."""
        return {"sigma": [s + 1 for s in self.sigma], "gamma": list(self.gamma)}

    @classmethod
    def from_dict(cls, data: dict, m: int) -> "WreathElement":
        return cls(tuple(int(s) - 1 for s in data["sigma"]), tuple(int(g) for g in data["gamma"]), m)

    def __str__(self):
        return f"({[s + 1 for s in self.sigma]}, {list(self.gamma)})"


def identity(n: int, m: int) -> WreathElement:
    return WreathElement(tuple(range(n)), (0,) * n, m)


def transposition(n: int, m: int, i: int, j: int) -> WreathElement:
    """s_ij with trivial gamma (0-based indices)."""
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise InputError(f"bad transposition ({i}, {j}) for n={n}")
    sigma = list(range(n))
    sigma[i], sigma[j] = j, i
    return WreathElement(tuple(sigma), (0,) * n, m)


def alpha(n: int, m: int, i: int, power: int = 1) -> WreathElement:
    """alpha_i^power: the generator of Z/m placed in coordinate i."""
    if not 0 <= i < n:
        raise InputError(f"coordinate {i} out of range for n={n}")
    gamma = [0] * n
    gamma[i] = power
    return WreathElement(tuple(range(n)), tuple(gamma), m)


def wreath_mult(a: WreathElement, b: WreathElement, convention: Convention = "standard") -> WreathElement:
    """
    Product a * b.

    standard: (s, g)(s', g') = (s s', g o s' + g')
    flipped:  (s, g)(s', g') = (s s', g + s.g') with (s.g')_i = g'_(s^-1(i))
    """
    if (a.n, a.m) != (b.n, b.m):
        raise InputError("wreath elements of different (n, m)")
    n = a.n
    sigma = tuple(a.sigma[b.sigma[i]] for i in range(n))
    if convention == "standard":
        gamma = tuple(a.gamma[b.sigma[i]] + b.gamma[i] for i in range(n))
    elif convention == "flipped":
        inv = _perm_inverse(a.sigma)
        gamma = tuple(a.gamma[i] + b.gamma[inv[i]] for i in range(n))
    else:
        raise InputError(f"unknown convention '{convention}'")
    return WreathElement(sigma, gamma, a.m)


def _perm_inverse(sigma: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def wreath_inverse(g: WreathElement, convention: Convention = "standard") -> WreathElement:
    inv = _perm_inverse(g.sigma)
    if convention == "standard":
        gamma = tuple(-g.gamma[inv[i]] for i in range(g.n))
    else:
        gamma = tuple(-g.gamma[g.sigma[j]] for j in range(g.n))
    return WreathElement(inv, gamma, g.m)


def act_on_index(g: WreathElement, i: int) -> tuple[int, int]:
    """(sigma(i), gamma_i): g x_i = zeta^gamma_i x_sigma(i) g."""
    return g.sigma[i], g.gamma[i]


@lru_cache(maxsize=None)
def enumerate_group(n: int, m: int) -> tuple[WreathElement, ...]:
    """All n! m^n elements, sorted."""
    return tuple(
        WreathElement(sigma, gamma, m)
        for sigma in itertools.permutations(range(n))
        for gamma in itertools.product(range(m), repeat=n)
    )


def group_order(n: int, m: int) -> int:
    return math.factorial(n) * m ** n


# -- group algebra --------------------------------------------------------


class GroupAlgElement:
    """Finite linear combination of wreath elements."""

    __slots__ = ("terms", "n", "m", "convention")

    def __init__(self, terms: Optional[Mapping[WreathElement, object]] = None, n: int = 1, m: int = 1,
                 convention: Convention = "standard"):
        self.n = n
        self.m = m
        self.convention = convention
        self.terms: dict[WreathElement, Scalar] = {}
        for g, c in (terms or {}).items():
            s = c if isinstance(c, Scalar) else as_scalar(c, m)
            if s:
                self.terms[g] = s

    @classmethod
    def from_group(cls, g: WreathElement, coeff=1, convention: Convention = "standard") -> "GroupAlgElement":
        return cls({g: coeff}, g.n, g.m, convention)

    @classmethod
    def one(cls, n: int, m: int, convention: Convention = "standard") -> "GroupAlgElement":
        return cls({identity(n, m): 1}, n, m, convention)

    def _like(self, terms) -> "GroupAlgElement":
        return GroupAlgElement(terms, self.n, self.m, self.convention)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GroupAlgElement") -> "GroupAlgElement":
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out[g] + c if g in out else c
        return self._like(out)

    def __sub__(self, other: "GroupAlgElement") -> "GroupAlgElement":
        return self + other.scale(-1)

    def scale(self, s) -> "GroupAlgElement":
        s = s if isinstance(s, Scalar) else as_scalar(s, self.m)
        return self._like({g: s * c for g, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GroupAlgElement):
            return galg_mult(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def items(self) -> list[tuple[WreathElement, Scalar]]:
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{g}" for g, c in self.items())

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m,
                "terms": [{"g": g.to_dict(), "coeff": c.to_dict()} for g, c in self.items()]}


def galg_mult(a: GroupAlgElement, b: GroupAlgElement) -> GroupAlgElement:
    """Convolution product, using the law stored on the left factor."""
    out: dict[WreathElement, Scalar] = {}
    for g, c in a.terms.items():
        for h, d in b.terms.items():
            gh = wreath_mult(g, h, a.convention)
            out[gh] = out[gh] + c * d if gh in out else c * d
    return GroupAlgElement(out, a.n, a.m, a.convention)


def _average(elements: Iterable[WreathElement], n: int, m: int, convention: Convention) -> GroupAlgElement:
    elements = list(elements)
    weight = Scalar.from_rational(Fraction(1, len(elements)), m)
    return GroupAlgElement({g: weight for g in elements}, n, m, convention)


def coordinate_idempotent(n: int, m: int, i: int, coord: int = 0,
                          convention: Convention = "standard") -> GroupAlgElement:
    """frak_e_i = (1/m) sum_j zeta^(ij) alpha_coord^j."""
    weight = Scalar.from_rational(Fraction(1, m), m)
    return GroupAlgElement(
        {alpha(n, m, coord, j): weight * make_root_of_unity(m, i * j) for j in range(m)},
        n, m, convention,
    )


def _tensor(factors: list[int], n: int, m: int, convention: Convention) -> GroupAlgElement:
    """frak_e_(f_0) (x) ... (x) frak_e_(f_(n-1)) as a product over coordinates."""
    result = GroupAlgElement.one(n, m, convention)
    for coord, i in enumerate(factors):
        result = result * coordinate_idempotent(n, m, i, coord, convention)
    return result


IDEMPOTENT_KINDS = ("eps_i", "e", "e_bar", "bold_e", "sigma_n", "sigma_n_minus_1", "nu_i")


def idempotent(kind: str, n: int, m: int, i: Optional[int] = None,
               convention: Convention = "standard") -> GroupAlgElement:
    """
    Named idempotents of the group algebra.

    Args:
        kind: eps_i (frak_e_i on the first coordinate), e / sigma_n (S_n average),
            e_bar / sigma_n_minus_1 (average over permutations fixing the first index),
            bold_e (average over the whole group), nu_i (e_bar times frak_e_i (x) frak_e_0 ...)
        n: Number of coordinates
        m: Order of the cyclic group
        i: Index for eps_i and nu_i, in 0..m-1
        convention: Multiplication law

    Returns:
        The idempotent; squaring it is checked

    Raises:
        InputError: bad kind or index
    """
    if n < 1 or m < 1:
        raise InputError(f"need n, m >= 1, got n={n}, m={m}")
    if kind in ("eps_i", "nu_i"):
        if i is None or not 0 <= i < m:
            raise InputError(f"{kind} needs an index in 0..{m - 1}, got {i}")
    if kind == "eps_i":
        result = coordinate_idempotent(n, m, i, 0, convention)
    elif kind in ("e", "sigma_n"):
        result = _average((WreathElement(p, (0,) * n, m) for p in itertools.permutations(range(n))),
                          n, m, convention)
    elif kind in ("e_bar", "sigma_n_minus_1"):
        result = _average((WreathElement(p, (0,) * n, m) for p in itertools.permutations(range(n)) if p[0] == 0),
                          n, m, convention)
    elif kind == "bold_e":
        result = _average(enumerate_group(n, m), n, m, convention)
    elif kind == "nu_i":
        result = idempotent("e_bar", n, m, convention=convention) * _tensor([i] + [0] * (n - 1), n, m, convention)
    else:
        raise InputError(f"unknown idempotent kind '{kind}'")
    if result * result != result:
        raise ValidationError(f"{kind} is not idempotent under the {convention} law")
    return result
