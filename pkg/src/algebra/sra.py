"""Symplectic reflection algebras H_{0,k,c} of the wreath product group.

Elements are kept in PBW normal form x^a y^b g with multi-indices a, b and a
wreath element g. Left multiplication by generators is closed-form:

    y_i x_j = x_j y_i + z_ij,   z_ij in the group algebra,

    z_ii = k sum_(j != i) sum_l s_ij a_i^l a_j^-l + sum_(l >= 1) c_l a_i^l
    z_ij = -k sum_l zeta^l s_ij a_i^l a_j^-l          (i != j)

so straightening y_i past x^a costs one correction term per x factor.
"""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from config import settings
from src.algebra.ncalg import (
    NCElement,
    PathAlgebra,
    Word,
    cycle_arrow_names,
    enumerate_paths,
    is_idempotent_letter,
    parse_word,
    preprojective_relation,
    word_to_str,
)
from src.algebra.wreath import (
    Convention,
    GroupAlgElement,
    WreathElement,
    act_on_index,
    alpha,
    enumerate_group,
    identity,
    idempotent,
    transposition,
    wreath_mult,
)
from src.field.scalar import Scalar, as_scalar, make_root_of_unity
from src.quiver.core import INF, doubled_framed_cyclic, lambda_from_tau
from src.utils.errors import InputError, NotSandwichError
from src.utils.logger import logger

Index = tuple[int, ...]
SRAKey = tuple[Index, Index, WreathElement]


def params_from_weight(lam: Mapping, m: int, n: int) -> tuple[Scalar, list[Scalar], list[Scalar]]:
    """
    Parameters (k, c) attached to a weight lambda = (lambda_inf, lambda_0, ..., lambda_(m-1)).

    Args:
        lam: Weight keyed by "inf" and 0..m-1
        m: Order of the cyclic group
        n: Rank of the wreath product

    Returns:
        k = lambda_inf / (mn), c in the frak_e basis
        ((lambda_0 + lambda_inf/n), lambda_1, ...), and c in the alpha power basis
        (entry l is the coefficient of alpha^l; entry 0 vanishes for constant dimension vectors)
    """
    if n <= 0 or m <= 0:
        raise InputError(f"need n, m >= 1, got n={n}, m={m}")
    lam_inf = as_scalar(lam[INF], m)
    values = [as_scalar(lam[i], m) for i in range(m)]
    k = lam_inf / (m * n)
    c_frak = [values[0] + lam_inf / n] + values[1:]
    inv_m = Scalar.from_rational(Fraction(1, m), m)
    c_alpha = [
        inv_m * sum((c_frak[i] * make_root_of_unity(m, i * l) for i in range(m)), Scalar.zero(m))
        for l in range(m)
    ]
    return k, c_frak, c_alpha


@dataclass(frozen=True)
class SRAAlgebra:
    """H_{0,k,c} for S_n x| (Z/m)^n; c holds c_1, ..., c_(m-1)."""

    n: int
    m: int
    k: Scalar
    c: tuple[Scalar, ...] = ()
    convention: Convention = "standard"
    _z: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise InputError(f"need n, m >= 1, got n={self.n}, m={self.m}")
        object.__setattr__(self, "k", as_scalar(self.k, self.m))
        cs = tuple(as_scalar(x, self.m) for x in self.c)
        if len(cs) not in (0, self.m - 1):
            raise InputError(f"c needs {self.m - 1} entries, got {len(cs)}")
        object.__setattr__(self, "c", cs or tuple(Scalar.zero(self.m) for _ in range(self.m - 1)))
        object.__setattr__(self, "_z", self._commutator_table())

    @classmethod
    def from_weight(cls, tau: Sequence, n: int, convention: Convention = "standard") -> "SRAAlgebra":
        """Parameters of the spherical target for lambda = (-tau . (n,...,n), tau)."""
        m = len(tau)
        lam = lambda_from_tau(tau, [n] * m)
        k, _, c_alpha = params_from_weight(lam, m, n)
        return cls(n, m, k, tuple(c_alpha[1:]), convention)

    # -- relations --------------------------------------------------------

    def _galg(self, terms) -> GroupAlgElement:
        return GroupAlgElement(terms, self.n, self.m, self.convention)

    def _add_term(self, out: dict, g: WreathElement, coeff: Scalar) -> None:
        out[g] = out[g] + coeff if g in out else coeff

    def _commutator_table(self) -> dict[tuple[int, int], GroupAlgElement]:
        n, m = self.n, self.m
        table: dict[tuple[int, int], GroupAlgElement] = {}
        for i in range(n):
            for j in range(n):
                out: dict[WreathElement, Scalar] = {}
                if i == j:
                    for other in range(n):
                        if other == i:
                            continue
                        for l in range(m):
                            g = self.mult_group(transposition(n, m, i, other), self._alpha_pair(i, other, l))
                            self._add_term(out, g, self.k)
                    for l in range(1, m):
                        self._add_term(out, alpha(n, m, i, l), self.c[l - 1])
                else:
                    for l in range(m):
                        g = self.mult_group(transposition(n, m, i, j), self._alpha_pair(i, j, l))
                        self._add_term(out, g, -(self.k * make_root_of_unity(m, l)))
                table[(i, j)] = self._galg(out)
        return table

    def _alpha_pair(self, i: int, j: int, l: int) -> WreathElement:
        """alpha_i^l alpha_j^-l."""
        gamma = [0] * self.n
        gamma[i] += l
        gamma[j] -= l
        return WreathElement(tuple(range(self.n)), tuple(gamma), self.m)

    def mult_group(self, g: WreathElement, h: WreathElement) -> WreathElement:
        return wreath_mult(g, h, self.convention)

    def commutator_yx(self, i: int, j: int) -> GroupAlgElement:
        """[y_i, x_j] as a group algebra element (0-based indices)."""
        return self._z[(i, j)]

    # -- elements ---------------------------------------------------------

    def element(self, terms: Mapping[SRAKey, object]) -> "SRAElement":
        return SRAElement(self, terms)

    def zero(self) -> "SRAElement":
        return SRAElement(self, {})

    def one(self) -> "SRAElement":
        zeros = (0,) * self.n
        return SRAElement(self, {(zeros, zeros, identity(self.n, self.m)): 1})

    def monomial(self, a: Sequence[int], b: Sequence[int], g: Optional[WreathElement] = None,
                 coeff=1) -> "SRAElement":
        return SRAElement(self, {(tuple(a), tuple(b), g or identity(self.n, self.m)): coeff})

    def x(self, i: int) -> "SRAElement":
        a = [0] * self.n
        a[i] = 1
        return self.monomial(a, [0] * self.n)

    def y(self, i: int) -> "SRAElement":
        b = [0] * self.n
        b[i] = 1
        return self.monomial([0] * self.n, b)

    def group(self, g: WreathElement, coeff=1) -> "SRAElement":
        zeros = (0,) * self.n
        return SRAElement(self, {(zeros, zeros, g): coeff})

    def from_group_algebra(self, u: GroupAlgElement) -> "SRAElement":
        zeros = (0,) * self.n
        return SRAElement(self, {(zeros, zeros, g): c for g, c in u.terms.items()})

    def idempotent(self, kind: str, i: Optional[int] = None) -> "SRAElement":
        return self.from_group_algebra(idempotent(kind, self.n, self.m, i, self.convention))

    def pbw_monomials(self, d: int) -> list[tuple[Index, Index]]:
        """(a, b) exponent pairs of total degree <= d; times |group| gives the basis count."""
        out = []
        for total in range(d + 1):
            for exps in itertools.product(range(total + 1), repeat=2 * self.n):
                if sum(exps) == total:
                    out.append((exps[:self.n], exps[self.n:]))
        return out

    def pbw_count(self, d: int) -> int:
        return math.comb(d + 2 * self.n, 2 * self.n) * math.factorial(self.n) * self.m ** self.n

    def pbw_triangular(self, d: int) -> bool:
        """
        NF(y^b x^a) = x^a y^b + lower-degree terms for all (a, b) of degree <= d.

        Right multiplication by a group element permutes the PBW monomials, so
        together with this the monomials x^a y^b g are independent.
        """
        e = identity(self.n, self.m)
        one = Scalar.one(self.m)
        for a, b in self.pbw_monomials(d):
            word = tuple(f"y{i + 1}" for i in range(self.n) for _ in range(b[i])) \
                + tuple(f"x{i + 1}" for i in range(self.n) for _ in range(a[i]))
            nf = self.word_normal_form(word)
            if nf.terms.get((a, b, e)) != one:
                return False
            degree = sum(a) + sum(b)
            if any(sum(x) + sum(y) >= degree for (x, y, g) in nf.terms if (x, y, g) != (a, b, e)):
                return False
        return True

    # -- left multiplication ----------------------------------------------

    def left_group(self, g: WreathElement, e: "SRAElement", coeff: Optional[Scalar] = None) -> "SRAElement":
        """g x^a y^b h = zeta^(gamma.a - gamma.b) x^(sigma a) y^(sigma b) (g h)."""
        out: dict[SRAKey, Scalar] = {}
        for (a, b, h), c in e.terms.items():
            new_a = [0] * self.n
            new_b = [0] * self.n
            power = 0
            for i in range(self.n):
                target, gamma_i = act_on_index(g, i)
                new_a[target] = a[i]
                new_b[target] = b[i]
                power += gamma_i * (a[i] - b[i])
            value = c * make_root_of_unity(self.m, power)
            if coeff is not None:
                value = value * coeff
            key = (tuple(new_a), tuple(new_b), self.mult_group(g, h))
            out[key] = out[key] + value if key in out else value
        return SRAElement(self, out)

    def left_group_algebra(self, u: GroupAlgElement, e: "SRAElement") -> "SRAElement":
        result = self.zero()
        for g, c in u.terms.items():
            result = result + self.left_group(g, e, c)
        return result

    def left_x(self, i: int, e: "SRAElement") -> "SRAElement":
        out = {}
        for (a, b, h), c in e.terms.items():
            new_a = list(a)
            new_a[i] += 1
            out[(tuple(new_a), b, h)] = c
        return SRAElement(self, out)

    def left_y(self, i: int, e: "SRAElement") -> "SRAElement":
        """y_i x^a y^b h: move y_i right past each x factor, collecting x^before z_ij x^after y^b h."""
        result_terms: dict[SRAKey, Scalar] = {}
        corrections = self.zero()
        for (a, b, h), c in e.terms.items():
            new_b = list(b)
            new_b[i] += 1
            key = (a, tuple(new_b), h)
            result_terms[key] = result_terms[key] + c if key in result_terms else c
            factors = [j for j in range(self.n) for _ in range(a[j])]
            for t, j in enumerate(factors):
                before = [0] * self.n
                for f in factors[:t]:
                    before[f] += 1
                after = [0] * self.n
                for f in factors[t + 1:]:
                    after[f] += 1
                tail = SRAElement(self, {(tuple(after), b, h): c})
                moved = self.left_group_algebra(self._z[(i, j)], tail)
                corrections = corrections + moved.shift_x(before)
        return SRAElement(self, result_terms) + corrections

    def left_letter(self, letter: str, e: "SRAElement") -> "SRAElement":
        """Letters: x1..xn, y1..yn (1-based), s12 style transpositions, a1 style alpha_i."""
        kind, digits = letter[:1], letter[1:]
        if kind in ("x", "y") and digits.isdigit() and 1 <= int(digits) <= self.n:
            i = int(digits) - 1
            return self.left_x(i, e) if kind == "x" else self.left_y(i, e)
        if kind == "s" and len(digits) == 2:
            return self.left_group(transposition(self.n, self.m, int(digits[0]) - 1, int(digits[1]) - 1), e)
        if kind == "a" and digits.isdigit():
            return self.left_group(alpha(self.n, self.m, int(digits) - 1), e)
        raise InputError(f"unknown letter '{letter}' for H(n={self.n}, m={self.m})")

    # -- products and normal forms ----------------------------------------

    def mult(self, e1: "SRAElement", e2: "SRAElement") -> "SRAElement":
        """x^a y^b g * E = L_x^a L_y^b L_g E, summed over monomials of e1."""
        if e1.algebra != self or e2.algebra != self:
            raise InputError("SRA elements belong to different algebras")
        result = self.zero()
        for (a, b, g), c in e1.terms.items():
            term = self.left_group(g, e2, c)
            for i in reversed(range(self.n)):
                for _ in range(b[i]):
                    term = self.left_y(i, term)
            term = term.shift_x(a)
            result = result + term
        return result

    def product(self, *elements: "SRAElement") -> "SRAElement":
        result = elements[0]
        for e in elements[1:]:
            result = self.mult(result, e)
        return result

    def word_normal_form(self, word: Union[Word, str]) -> "SRAElement":
        letters = parse_word(word) if isinstance(word, str) else word
        result = self.one()
        for letter in reversed(letters):
            result = self.left_letter(letter, result)
        return result

    def normal_form(self, expr: Union[NCElement, Word, str]) -> "SRAElement":
        if not isinstance(expr, NCElement):
            return self.word_normal_form(expr)
        result = self.zero()
        for word, c in expr.terms.items():
            result = result + self.word_normal_form(word).scale(c.lift(self.m) if c.m != self.m else c)
        return result


class SRAElement:
    """Element of H_{0,k,c} in PBW normal form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: SRAAlgebra, terms: Optional[Mapping[SRAKey, object]] = None):
        self.algebra = algebra
        self.terms: dict[SRAKey, Scalar] = {}
        for (a, b, g), c in (terms or {}).items():
            s = c if isinstance(c, Scalar) else as_scalar(c, algebra.m)
            if s:
                self.terms[(tuple(a), tuple(b), g)] = s

    def is_zero(self) -> bool:
        return not self.terms

    def shift_x(self, a: Sequence[int]) -> "SRAElement":
        """Left multiplication by x^a (x factors are leftmost in normal form)."""
        if not any(a):
            return self
        return SRAElement(self.algebra, {(tuple(p + q for p, q in zip(a, ka)), kb, g): c
                                         for (ka, kb, g), c in self.terms.items()})

    def __add__(self, other: "SRAElement") -> "SRAElement":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out[key] + c if key in out else c
        return SRAElement(self.algebra, out)

    def __sub__(self, other: "SRAElement") -> "SRAElement":
        return self + other.scale(-1)

    def __neg__(self) -> "SRAElement":
        return self.scale(-1)

    def scale(self, s) -> "SRAElement":
        s = s if isinstance(s, Scalar) else as_scalar(s, self.algebra.m)
        return SRAElement(self.algebra, {key: s * c for key, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SRAElement):
            return self.algebra.mult(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SRAElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def degree(self) -> int:
        return max((sum(a) + sum(b) for a, b, _ in self.terms), default=-1)

    def items(self) -> list[tuple[SRAKey, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0][0]) + sum(kv[0][1]), kv[0]))

    def leading_term(self) -> str:
        if not self.terms:
            return "0"
        (a, b, g), c = self.items()[-1]
        return f"({c}) x^{list(a)} y^{list(b)} {g}"

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*x^{list(a)}y^{list(b)}{g}" for (a, b, g), c in self.items())

    def to_dict(self) -> dict:
        alg = self.algebra
        return {
            "n": alg.n,
            "m": alg.m,
            "k": alg.k.to_dict(),
            "c": [x.to_dict() for x in alg.c],
            "convention": alg.convention,
            "terms": [{"a": list(a), "b": list(b), "g": g.to_dict(), "coeff": c.to_dict()}
                      for (a, b, g), c in self.items()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SRAElement":
        m = int(data["m"])
        alg = SRAAlgebra(int(data["n"]), m, Scalar.from_dict(data["k"]),
                         tuple(Scalar.from_dict(x) for x in data["c"]), data.get("convention", "standard"))
        return cls(alg, {(tuple(t["a"]), tuple(t["b"]), WreathElement.from_dict(t["g"], m)):
                         Scalar.from_dict(t["coeff"]) for t in data["terms"]})


def sra_normal_form(expr, algebra: SRAAlgebra) -> SRAElement:
    return algebra.normal_form(expr)


def cherednik_relations_m1(n: int, c) -> dict[tuple[int, int], GroupAlgElement]:
    """
    Commutators [y_i, x_j] of the rational Cherednik algebra H_{0,c}(S_n), written
    in the commutator order of the wreath relations:

        [y_k, x_k] = c sum_(i != k) s_ik,   [y_i, x_j] = -c s_ij  (i != j)

    These are the relations [x_i, y_j] = c s_ij and [x_k, y_k] = -c sum s_ik read
    with the commutator reversed.
    """
    c = as_scalar(c)
    table = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                terms = {transposition(n, 1, i, other): c for other in range(n) if other != i}
            else:
                terms = {transposition(n, 1, i, j): -c}
            table[(i, j)] = GroupAlgElement(terms, n, 1)
    return table


# -- the map theta from the sandwich algebra --------------------------------


class ThetaMap:
    """
    theta: e_inf Pi_lambda e_inf -> e H e for the framed cycle of length m and
    dimension (1, n, ..., n).

    Letter images: X_i -> nu_i x_1, Y_i -> -y_1 nu_i, e_i -> nu_i,
    v -> (lambda_inf / n)(1 + s_12 + ... + s_1n), w -> nu_0, e_inf -> bold e.
    A sandwich word b is sent to bold_e . (product of letter images) . bold_e.
    """

    def __init__(self, tau: Sequence, n: int, convention: Convention = "standard"):
        self.m = len(tau)
        self.n = n
        self.convention = convention
        self.tau = [as_scalar(t, self.m) for t in tau]
        self.lam = lambda_from_tau(self.tau, [n] * self.m)
        self.algebra = SRAAlgebra.from_weight(self.tau, n, convention)
        self.quiver = doubled_framed_cyclic(self.m)
        self.paths = PathAlgebra(self.quiver, self.m)
        alg = self.algebra
        self.nu = [alg.idempotent("nu_i", i) for i in range(self.m)]
        self.bold_e = alg.idempotent("bold_e")
        lam_inf = self.lam[INF]
        v_terms = alg.one()
        for j in range(1, n):
            v_terms = v_terms + alg.group(transposition(n, self.m, 0, j))
        self._images: dict[str, SRAElement] = {
            "v": v_terms.scale(lam_inf / n),
            "w": self.nu[0],
            "einf": self.bold_e,
        }
        x1, y1 = alg.x(0), alg.y(0)
        for i in range(self.m):
            self._images[f"X{i}"] = alg.mult(self.nu[i], x1)
            self._images[f"Y{i}"] = -alg.mult(y1, self.nu[i])
            self._images[f"e{i}"] = self.nu[i]

    def letter_image(self, letter: str) -> SRAElement:
        try:
            return self._images[letter]
        except KeyError as e:
            raise InputError(f"no image for letter '{letter}'") from e

    def raw_word(self, word: Word) -> SRAElement:
        """Product of letter images, without the bold_e sandwich."""
        result = self.algebra.one()
        for letter in word:
            result = self.algebra.mult(result, self.letter_image(letter))
        return result

    @staticmethod
    def is_sandwich(word: Word) -> bool:
        if word == ("einf",):
            return True
        return len(word) >= 2 and word[0] == "v" and word[-1] == "w"

    def __call__(self, b: Union[NCElement, Word, str]) -> SRAElement:
        if isinstance(b, str):
            b = NCElement.from_word(b, m=self.m)
        elif not isinstance(b, NCElement):
            b = NCElement({tuple(b): 1}, self.m)
        result = self.algebra.zero()
        for word, c in b.terms.items():
            if not self.is_sandwich(word):
                raise NotSandwichError(f"'{word_to_str(word)}' is not in e_inf Pi e_inf")
            image = self.algebra.product(self.bold_e, self.raw_word(word), self.bold_e)
            result = result + image.scale(c.lift(self.m) if c.m != self.m else c)
        return result


def theta_map(b, tau: Sequence, n: int, convention: Convention = "standard") -> SRAElement:
    return ThetaMap(tau, n, convention)(b)


def spherical_theta_element(a: NCElement, algebra: SRAAlgebra) -> SRAElement:
    """v a(X, Y) w -> -sum_i e a(x_i, y_i) e as an algebra element (m = 1)."""
    if algebra.m != 1:
        raise InputError("the spherical map on words in x, y needs m = 1")
    e = algebra.idempotent("e")
    result = algebra.zero()
    for word, c in a.terms.items():
        for i in range(algebra.n):
            letters = tuple(f"{letter}{i + 1}" for letter in word)
            inner = algebra.word_normal_form(letters)
            result = result - algebra.product(e, inner, e).scale(c)
    return result


# -- verification -----------------------------------------------------------


@dataclass
class ThetaReport:
    """Outcome of a theta verification run."""

    m: int
    n: int
    tau: list[str]
    length: int
    convention: str
    pairs_checked: int = 0
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    spherical_comparison: Optional[dict[str, bool]] = None

    @property
    def passed(self) -> bool:
        return not self.failures and all(self.checks.values())

    def record(self, name: str, ok: bool, counterexample: str = "") -> None:
        self.checks[name] = self.checks.get(name, True) and ok
        if not ok:
            self.failures.append(f"{name}: {counterexample}")

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "tau": self.tau,
            "len": self.length,
            "convention": self.convention,
            "pairs_checked": self.pairs_checked,
            "checks": dict(sorted(self.checks.items())),
            "failures": self.failures,
            "spherical_comparison": self.spherical_comparison,
            "passed": self.passed,
        }


def _closed_paths(theta: ThetaMap, start, end, max_len: int) -> list[Word]:
    return enumerate_paths(theta.quiver, start, max_len, end=end, arrows=cycle_arrow_names(theta.quiver))


def _sandwich(theta: ThetaMap, *parts: NCElement) -> NCElement:
    return theta.paths.product(theta.paths.path("v"), *parts, theta.paths.path("w"))


def _check_action(report: ThetaReport, alg: SRAAlgebra) -> None:
    """g (h x_i) = (g h) x_i and the same for y_i, over the whole group."""
    group = enumerate_group(alg.n, alg.m)
    for i in range(alg.n):
        for gen in (alg.x(i), alg.y(i)):
            for g in group:
                for h in group:
                    lhs = alg.left_group(g, alg.left_group(h, gen))
                    rhs = alg.left_group(alg.mult_group(g, h), gen)
                    if lhs != rhs:
                        report.record("action_consistency", False,
                                      f"g={g}, h={h}, generator {gen}: difference {(lhs - rhs).leading_term()}")
                        return
    report.record("action_consistency", True)


def verify_theta(m: int, n: int, tau: Sequence, length: Optional[int] = None,
                 convention: Convention = "standard") -> ThetaReport:
    """
    Check that theta respects the defining relations on sandwich elements.

    Args:
        m: Cycle length
        n: Rank; the dimension vector is (1, n, ..., n)
        tau: Weight on the cycle
        length: Bound on |p| + |q| for the sandwich pairs (v p w, v q w)
        convention: Wreath multiplication law

    Returns:
        ThetaReport; failures carry the first counterexample per check
    """
    length = settings.default_theta_len if length is None else length
    if length < 2:
        raise InputError(f"path length bound must be >= 2, got {length}")
    if len(tau) != m:
        raise InputError(f"tau needs {m} entries, got {len(tau)}")
    theta = ThetaMap(tau, n, convention)
    alg = theta.algebra
    report = ThetaReport(m=m, n=n, tau=[str(t) for t in theta.tau], length=length, convention=convention)
    logger.info(f"verifying theta at m={m}, n={n}, tau={report.tau}, len={length}, convention={convention}")

    _check_action(report, alg)

    # nu_i compatibility with x_1 and y_1
    x1, y1 = alg.x(0), alg.y(0)
    for i in range(m):
        nxt = (i + 1) % m
        ok_x = alg.mult(x1, theta.nu[nxt]) == alg.mult(theta.nu[i], x1)
        ok_y = alg.mult(y1, theta.nu[i]) == alg.mult(theta.nu[nxt], y1)
        report.record("nu_compatibility", ok_x and ok_y, f"index {i}")

    # bold e and the unit
    e = theta.bold_e
    report.record("bold_e_idempotent", alg.mult(e, e) == e, "bold_e^2 != bold_e")
    report.record("theta_einf", theta(("einf",)) == e, "theta(e_inf) != bold_e")
    vw = theta(("v", "w"))
    report.record("theta_vw", vw == e.scale(theta.lam[INF]), f"theta(vw) = {vw.leading_term()}")
    raw_product = alg.mult(theta.letter_image("einf"), theta.letter_image("e0"))
    vanishing = theta.paths.mul(theta.paths.vertex(INF), theta.paths.vertex(0)).is_zero()
    report.record("non_unital", vanishing and not raw_product.is_zero(),
                  "expected theta(e_inf e_0) = 0 and theta(e_inf) theta(e_0) != 0")

    # multiplicativity on sandwich pairs, with wv rewritten by the relation at vertex 0
    paths = theta.paths
    rel0 = preprojective_relation(theta.quiver, theta.lam, 0, m)
    wv = paths.path(("w", "v"))
    reduction = wv - rel0
    closed = _closed_paths(theta, 0, 0, length)
    for p in closed:
        for q in closed:
            if len([l for l in p + q if not is_idempotent_letter(l)]) > length:
                continue
            pe, qe = paths.path(p), paths.path(q)
            lhs = alg.mult(theta(_sandwich(theta, pe)), theta(_sandwich(theta, qe)))
            rhs = theta(_sandwich(theta, pe, reduction, qe))
            report.pairs_checked += 1
            if lhs != rhs:
                report.record("multiplicativity", False,
                              f"p={word_to_str(p)}, q={word_to_str(q)}: difference {(lhs - rhs).leading_term()}")
    report.record("multiplicativity", True)

    # relations at the other cycle vertices inside sandwiches
    for k in range(1, m):
        rel = preprojective_relation(theta.quiver, theta.lam, k, m)
        for p in _closed_paths(theta, 0, k, length):
            for q in _closed_paths(theta, k, 0, length - len(p)):
                image = theta(_sandwich(theta, paths.path(p), rel, paths.path(q)))
                if not image.is_zero():
                    report.record(f"relation_{k}", False,
                                  f"p={word_to_str(p)}, q={word_to_str(q)}: {image.leading_term()}")
        report.record(f"relation_{k}", True)

    # images are fixed by bold_e on both sides
    for p in closed:
        b = theta(_sandwich(theta, paths.path(p)))
        if alg.product(e, b, e) != b:
            report.record("spherical_image", False, f"p={word_to_str(p)}")
    report.record("spherical_image", True)

    if m == 1:
        report.spherical_comparison = compare_spherical_theta(theta, length)

    logger.info(f"theta verification {'PASS' if report.passed else 'FAIL'} "
                f"({report.pairs_checked} pairs, {len(report.failures)} failures)")
    return report


def compare_spherical_theta(theta: ThetaMap, length: int) -> dict[str, bool]:
    """Whether the spherical map on words in x, y agrees with theta on v a(X, Y) w; recorded only."""
    out = {}
    alg = theta.algebra
    for p in _closed_paths(theta, 0, 0, length):
        letters = tuple(l for l in p if not is_idempotent_letter(l))
        word = tuple("x" if l == "X0" else "y" for l in letters)
        spherical = spherical_theta_element(NCElement({word: 1}), alg)
        general = theta(_sandwich(theta, theta.paths.path(p)))
        out[word_to_str(word) or "1"] = spherical == general
    return out
