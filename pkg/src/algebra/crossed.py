"""PBW normal forms in the crossed product C<x,y> # Z/m modulo xy - yx = tau.

Monomials are x^a y^b g^h, stored as keys (a, b, h). The generator g acts by
g x = zeta x g and g y = zeta^-1 y g. The weight tau = sum_i tau_i frak_e_i is
kept in the group basis, tau = sum_j t_j g^j, so m = 1 (the Weyl algebra at
tau = 1) and m > 1 share one engine.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from src.algebra.ncalg import NCElement, PathAlgebra, Word, is_idempotent_letter, parse_word
from src.field.scalar import Scalar, as_scalar, make_root_of_unity
from src.quiver.core import build_cyclic, double
from src.utils.errors import InputError

Monomial = tuple[int, int, int]


def tau_group_coefficients(m: int, tau: Sequence) -> list[Scalar]:
    """t_j = (1/m) sum_i tau_i zeta^(ij), so that sum_i tau_i frak_e_i = sum_j t_j g^j."""
    if len(tau) != m:
        raise InputError(f"tau needs {m} entries, got {len(tau)}")
    taus = [as_scalar(t, m) for t in tau]
    inv_m = Scalar.from_rational(Fraction(1, m), m)
    return [
        inv_m * sum((taus[i] * make_root_of_unity(m, i * j) for i in range(m)), Scalar.zero(m))
        for j in range(m)
    ]


@dataclass(frozen=True)
class CrossedProductAlgebra:
    """S_tau for the cyclic group of order m."""

    m: int
    tau: tuple[Scalar, ...]
    t: tuple[Scalar, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        taus = tuple(as_scalar(x, self.m) for x in self.tau)
        object.__setattr__(self, "tau", taus)
        object.__setattr__(self, "t", tuple(tau_group_coefficients(self.m, taus)))

    @classmethod
    def weyl(cls) -> "CrossedProductAlgebra":
        """The first Weyl algebra: m = 1, tau = 1."""
        return cls(1, (Scalar.one(),))

    # -- elements ---------------------------------------------------------

    def element(self, terms: Mapping[Monomial, object]) -> "CrossedElement":
        return CrossedElement(self, terms)

    def monomial(self, a: int, b: int, h: int = 0, coeff=1) -> "CrossedElement":
        return CrossedElement(self, {(a, b, h % self.m): coeff})

    def one(self) -> "CrossedElement":
        return self.monomial(0, 0, 0)

    def zero(self) -> "CrossedElement":
        return CrossedElement(self, {})

    def frak_e(self, i: int) -> "CrossedElement":
        """frak_e_i = (1/m) sum_j zeta^(ij) g^j."""
        inv_m = Scalar.from_rational(Fraction(1, self.m), self.m)
        return CrossedElement(self, {(0, 0, j): inv_m * make_root_of_unity(self.m, i * j)
                                     for j in range(self.m)})

    def tau_element(self) -> "CrossedElement":
        return CrossedElement(self, {(0, 0, j): self.t[j] for j in range(self.m)})

    def pbw_monomials(self, d: int) -> list[Monomial]:
        """Normal-form monomials with a + b <= d: m (d+1)(d+2)/2 of them."""
        return [(a, s - a, h) for s in range(d + 1) for a in range(s, -1, -1) for h in range(self.m)]

    def pbw_triangular(self, d: int) -> bool:
        """NF(y^b x^a g^h) = x^a y^b g^h + lower-degree terms for every monomial of degree <= d."""
        for a, b, h in self.pbw_monomials(d):
            nf = self.word_normal_form(("y",) * b + ("x",) * a + ("g",) * h)
            if nf.terms.get((a, b, h)) != Scalar.one(self.m):
                return False
            if any(x + y >= a + b for (x, y, k) in nf.terms if (x, y, k) != (a, b, h)):
                return False
        return True

    # -- left multiplication by generators ----------------------------------

    def _zeta(self, k: int) -> Scalar:
        return make_root_of_unity(self.m, k)

    def left_g(self, j: int, e: "CrossedElement") -> "CrossedElement":
        """g^j x^a y^b g^h = zeta^(j(a-b)) x^a y^b g^(j+h)."""
        return CrossedElement(self, {(a, b, (h + j) % self.m): c * self._zeta(j * (a - b))
                                     for (a, b, h), c in e.terms.items()})

    def left_x(self, e: "CrossedElement") -> "CrossedElement":
        return CrossedElement(self, {(a + 1, b, h): c for (a, b, h), c in e.terms.items()})

    def left_y(self, e: "CrossedElement") -> "CrossedElement":
        """y x^a y^b g^h = x^a y^(b+1) g^h - sum_(k<a) sum_j t_j zeta^(jk - jb) x^(a-1) y^b g^(j+h)."""
        out: dict[Monomial, Scalar] = {}

        def add(key: Monomial, value: Scalar) -> None:
            out[key] = out[key] + value if key in out else value

        for (a, b, h), c in e.terms.items():
            add((a, b + 1, h), c)
            for j, t_j in enumerate(self.t):
                if not t_j:
                    continue
                phase = sum((self._zeta(j * k - j * b) for k in range(a)), Scalar.zero(self.m))
                if phase:
                    add((a - 1, b, (j + h) % self.m), -(c * t_j * phase))
        return CrossedElement(self, out)

    def left_letter(self, letter: str, e: "CrossedElement") -> "CrossedElement":
        if letter == "x":
            return self.left_x(e)
        if letter == "y":
            return self.left_y(e)
        if letter.startswith("g"):
            return self.left_g(int(letter[1:]) if len(letter) > 1 else 1, e)
        raise InputError(f"unknown letter '{letter}' in crossed product word")

    # -- products and normal forms --------------------------------------------

    def mult(self, e1: "CrossedElement", e2: "CrossedElement") -> "CrossedElement":
        """x^a y^b g^h * E = L_x^a L_y^b L_g^h E, summed over the monomials of e1."""
        if e1.algebra != self or e2.algebra != self:
            raise InputError("crossed elements belong to different algebras")
        result = self.zero()
        for (a, b, h), c in e1.terms.items():
            term = self.left_g(h, e2) if h else e2
            for _ in range(b):
                term = self.left_y(term)
            for _ in range(a):
                term = self.left_x(term)
            result = result + term.scale(c)
        return result

    def word_normal_form(self, word: Union[Word, str]) -> "CrossedElement":
        letters = parse_word(word) if isinstance(word, str) else word
        result = self.one()
        for letter in reversed(letters):
            result = self.left_letter(letter, result)
        return result

    def normal_form(self, expr: Union[NCElement, Word, str]) -> "CrossedElement":
        """Reduce a combination of words over x, y and g, g2, ... to PBW normal form."""
        if not isinstance(expr, NCElement):
            return self.word_normal_form(expr)
        result = self.zero()
        for word, c in expr.terms.items():
            result = result + self.word_normal_form(word).scale(c.lift(self.m) if c.m != self.m else c)
        return result

    def o_tau_element(self, a: int, b: int) -> "CrossedElement":
        """frak_e_0 x^a y^b frak_e_0; zero unless a = b mod m."""
        e0 = self.frak_e(0)
        return self.mult(self.mult(e0, self.monomial(a, b)), e0)

    # -- path algebra of the doubled cycle --------------------------------

    def path_algebra(self) -> PathAlgebra:
        return PathAlgebra(double(build_cyclic(self.m)), self.m)

    def _letter_image(self, letter: str) -> "CrossedElement":
        if is_idempotent_letter(letter):
            if letter == "einf":
                raise InputError("paths through inf have no image in the crossed product")
            return self.frak_e(int(letter[1:]))
        kind, index = letter[:1], letter[1:]
        if kind in ("X", "Y") and index.isdigit() and int(index) < self.m:
            i = int(index)
            if kind == "X":
                return self.mult(self.frak_e(i), self.monomial(1, 0))
            return self.mult(self.monomial(0, 1), self.frak_e(i))
        raise InputError(f"letter '{letter}' is not a cycle arrow")

    def pi_tau_iso(self, p: NCElement) -> "CrossedElement":
        """X_i -> frak_e_i x, Y_i -> y frak_e_i, e_i -> frak_e_i, extended multiplicatively."""
        result = self.zero()
        for word, c in p.terms.items():
            image = self.one()
            for letter in word:
                image = self.mult(image, self._letter_image(letter))
            result = result + image.scale(c.lift(self.m) if c.m != self.m else c)
        return result

    def crossed_to_path(self, e: "CrossedElement") -> NCElement:
        """x -> sum X_i, y -> sum Y_i, g^j -> sum_i zeta^(-ij) e_i."""
        alg = self.path_algebra()
        m = self.m
        x_sum = NCElement({(f"X{i}",): 1 for i in range(m)}, m)
        y_sum = NCElement({(f"Y{i}",): 1 for i in range(m)}, m)
        result = NCElement.zero(m)
        for (a, b, h), c in e.terms.items():
            term = alg.unit()
            for _ in range(a):
                term = alg.mul(term, x_sum)
            for _ in range(b):
                term = alg.mul(term, y_sum)
            group = NCElement({(f"e{i}",): self._zeta(-i * h) for i in range(m)}, m)
            result = result + alg.mul(term, group).scale(c)
        return result


class CrossedElement:
    """Element of a crossed product in PBW normal form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: CrossedProductAlgebra, terms: Optional[Mapping[Monomial, object]] = None):
        self.algebra = algebra
        self.terms: dict[Monomial, Scalar] = {}
        for key, c in (terms or {}).items():
            s = c if isinstance(c, Scalar) else as_scalar(c, algebra.m)
            if s:
                self.terms[tuple(key)] = s

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "CrossedElement") -> "CrossedElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return CrossedElement(self.algebra, out)

    def __sub__(self, other: "CrossedElement") -> "CrossedElement":
        return self + other.scale(-1)

    def __neg__(self) -> "CrossedElement":
        return self.scale(-1)

    def scale(self, s) -> "CrossedElement":
        s = s if isinstance(s, Scalar) else as_scalar(s, self.algebra.m)
        return CrossedElement(self.algebra, {k: s * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, CrossedElement):
            return self.algebra.mult(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, CrossedElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def items(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*x^{a}y^{b}g^{h}" for (a, b, h), c in self.items())

    def to_dict(self) -> dict:
        return {
            "m": self.algebra.m,
            "tau": [t.to_dict() for t in self.algebra.tau],
            "terms": [{"a": a, "b": b, "g": h, "coeff": c.to_dict()} for (a, b, h), c in self.items()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CrossedElement":
        algebra = CrossedProductAlgebra(int(data["m"]), tuple(Scalar.from_dict(t) for t in data["tau"]))
        return cls(algebra, {(int(t["a"]), int(t["b"]), int(t["g"])): Scalar.from_dict(t["coeff"])
                             for t in data["terms"]})


def normal_form(expr, algebra: CrossedProductAlgebra) -> CrossedElement:
    return algebra.normal_form(expr)


def mult(e1: CrossedElement, e2: CrossedElement) -> CrossedElement:
    return e1.algebra.mult(e1, e2)


def project_le1(p: NCElement) -> NCElement:
    """Kill e_inf, v, w and every path through inf."""
    return NCElement({w: c for w, c in p.terms.items()
                      if not any(letter in ("v", "w", "einf") for letter in w)}, p.m)
