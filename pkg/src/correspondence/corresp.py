"""From Calogero-Moser points to filtered ideal models of the Weyl algebra.

For a point (X, Y, v, w) the weight functional is e(a) = w . a(X, Y) . v with
words acting in reading order. The right ideal J is generated by the elements
a([x, y] - 1) - e(a), the evaluation map sends r to r . v, and K is its kernel.
The pair (K/J, e) is the ideal model. For cyclic quivers only the weight
functional and the kernel profile on closed paths at vertex 0 are computed.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from config import settings
from src.algebra.ncalg import (
    FREE_ALPHABET,
    NCElement,
    Word,
    commutator_xy,
    cycle_arrow_names,
    enumerate_paths,
    enumerate_words,
    evaluate_element,
    evaluate_on_vector,
    length_lex_key,
    path_length,
    word_end,
    word_start,
    word_to_str,
)
from src.field.scalar import Scalar
from src.linalg.matrix import Matrix, stack_columns
from src.quiver.core import is_regular
from src.quiver.repvar import (
    CMPoint,
    FramedRep,
    Point,
    are_isomorphic,
    closed_paths,
    fingerprint,
    is_simple,
    require_valid,
    weight_value,
)
from src.utils.errors import (
    AssertionFailure,
    InputError,
    IrregularWeightError,
    NonClosedPathError,
    NotSimpleError,
)
from src.utils.logger import logger


def epsilon(point: Point, word: Word) -> Scalar:
    """
    Weight functional w . (word acting on v).

    Args:
        point: CMPoint (words over x, y) or FramedRep (closed paths at vertex 0)
        word: Letters in reading order

    Raises:
        NonClosedPathError: a FramedRep word that does not start and end at 0
    """
    if isinstance(point, FramedRep) and word:
        if word_start(point.quiver, word) != 0 or word_end(point.quiver, word) != 0:
            raise NonClosedPathError(f"'{word_to_str(word)}' is not a closed path at vertex 0")
    return weight_value(point, word)


@dataclass
class WeightFunctional:
    """Materialized values of the weight functional up to a length bound."""

    length: int
    values: dict[Word, Scalar]

    def __getitem__(self, word: Word) -> Scalar:
        return self.values[word]


def weight_functional(point: Point, length: int) -> WeightFunctional:
    return WeightFunctional(length, {w: epsilon(point, w) for w in closed_paths(point, length)})


# -- linear algebra on spans of words ------------------------------------------


def _column_order(words: Sequence[Word]) -> list[Word]:
    """Columns in descending length-lex order, so pivots sit on leading words."""
    return sorted(words, key=length_lex_key, reverse=True)


def _coefficient_matrix(elements: Sequence[NCElement], columns: Sequence[Word]) -> Matrix:
    index = {w: i for i, w in enumerate(columns)}
    zero = Scalar.zero()
    rows = []
    for e in elements:
        row = [zero] * len(columns)
        for w, c in e.terms.items():
            row[index[w]] = c
        rows.append(row)
    return Matrix.from_rows(rows, cols=len(columns)) if rows else Matrix.zeros(0, len(columns))


def echelon_basis(elements: Sequence[NCElement], words: Sequence[Word]) -> list[NCElement]:
    """Reduced echelon basis of span(elements); each element's leading word is a pivot."""
    columns = _column_order(words)
    reduced, pivots = _coefficient_matrix(elements, columns).rref()
    basis = []
    for i in range(len(pivots)):
        basis.append(NCElement({columns[j]: reduced[i, j] for j in range(len(columns)) if reduced[i, j]}))
    return basis


def in_span(element: NCElement, basis: Sequence[NCElement], words: Sequence[Word]) -> bool:
    columns = _column_order(words)
    base_rank = _coefficient_matrix(basis, columns).rank()
    return _coefficient_matrix(list(basis) + [element], columns).rank() == base_rank


def echelon_remainder(element: NCElement, basis: Sequence[NCElement]) -> NCElement:
    """Clear the leading words of a reduced echelon basis from element; zero iff element is in the span."""
    rest = element
    for b in basis:
        lead = max(b.terms, key=length_lex_key)
        coeff = rest.terms.get(lead)
        if coeff:
            rest = rest - b.scale(coeff)
    return rest


def filtered(basis: Sequence[NCElement], j: int) -> list[NCElement]:
    """Elements of an echelon basis with degree <= j; they form a basis of the degree <= j part."""
    return [b for b in basis if b.degree <= j]


# -- J, K and the codimension profile --------------------------------------


def _relation_generator(point: CMPoint, a: Word) -> NCElement:
    """a([x, y] - 1) - e(a)."""
    word = NCElement.from_word(a)
    bracket = commutator_xy() - NCElement.one()
    return word * bracket - NCElement.one().scale(epsilon(point, a))


def j_basis(point: CMPoint, d: int) -> list[NCElement]:
    """
    Echelon basis of J_(<=d), spanned by (a([x, y] - 1) - e(a)) c with |a| + 2 + |c| <= d.
    """
    if d < 2:
        raise InputError(f"degree bound must be >= 2, got {d}")
    spanning = []
    for a in enumerate_words(FREE_ALPHABET, d - 2):
        generator = _relation_generator(point, a)
        for c in enumerate_words(FREE_ALPHABET, d - 2 - len(a)):
            spanning.append(generator * NCElement.from_word(c))
    basis = echelon_basis(spanning, enumerate_words(FREE_ALPHABET, d))
    logger.debug(f"J basis at d={d}: {len(basis)} elements from {len(spanning)} generators")
    return basis


def evaluation_matrix(point: Point, words: Sequence[Word]) -> Matrix:
    """n_0 x len(words) matrix whose columns are the words applied to v."""
    columns = [evaluate_on_vector(w, point, point.v) for w in words]
    return stack_columns(columns, point.v.rows)


def eval_map_kernel(point: Point, d: int, words: Optional[Sequence[Word]] = None) -> list[NCElement]:
    """Echelon basis of the kernel of r -> r . v on words of length <= d."""
    if d < 0:
        raise InputError(f"degree bound must be >= 0, got {d}")
    if words is None:
        words = enumerate_words(FREE_ALPHABET, d)
    E = evaluation_matrix(point, words)
    kernel = [NCElement({words[i]: k[i, 0] for i in range(len(words)) if k[i, 0]})
              for k in E.kernel_basis()]
    basis = echelon_basis(kernel, words)
    logger.debug(f"kernel at d={d}: {len(basis)} of {len(words)} words")
    return basis


def codim_profile(point: Point, words: Sequence[Word], d: int) -> list[int]:
    """Entry j: codimension of K_(<=j), the rank of the evaluation matrix on words of length <= j."""
    E_words = list(words)
    profile = []
    for j in range(d + 1):
        prefix = [w for w in E_words if path_length(w) <= j]
        profile.append(evaluation_matrix(point, prefix).rank())
    return profile


# -- ideal models -----------------------------------------------------------


@dataclass
class IdealModel:
    """Filtered presentation (K/J, e) attached to a Calogero-Moser point."""

    point: CMPoint
    d: int
    J_basis: list[NCElement]
    K_basis: list[NCElement]
    codim_profile: list[int]
    fingerprint: list[Scalar]

    @property
    def n(self) -> int:
        return self.point.n

    @property
    def quotient_dim(self) -> int:
        """dim (K/J)_(<=d)."""
        return len(self.K_basis) - len(self.J_basis)

    def J_le(self, j: int) -> list[NCElement]:
        return filtered(self.J_basis, j)

    def K_le(self, j: int) -> list[NCElement]:
        return filtered(self.K_basis, j)


def _check_profile(profile: Sequence[int], n: int) -> None:
    if any(p > n for p in profile):
        raise AssertionFailure(f"codimension profile {list(profile)} exceeds n={n}")
    if any(a > b for a, b in zip(profile, profile[1:])):
        raise AssertionFailure(f"codimension profile {list(profile)} is not nondecreasing")
    if any(p != n for j, p in enumerate(profile) if j >= n - 1):
        raise AssertionFailure(f"codimension profile {list(profile)} does not reach n={n} at degree n-1")


def resolve_degree(n: int, d: Optional[int] = None) -> int:
    """Degree bound used by omega: d itself, or max(default_degree, n + 2)."""
    return max(settings.default_degree, n + 2) if d is None else d


def omega(point: CMPoint, d: Optional[int] = None) -> IdealModel:
    """
    Ideal model of a simple Calogero-Moser point.

    Args:
        point: Valid CMPoint
        d: Degree bound (default max(default_degree, n + 2))

    Returns:
        IdealModel with J inside K, K/J closed under [x, y] - 1 and the profile invariants checked

    Raises:
        ValidationError: the point does not satisfy the moment map equation
        NotSimpleError: the point is not simple
        AssertionFailure: J is not inside K, K/J is not closed under [x, y] - 1, or the profile is malformed
    """
    if not isinstance(point, CMPoint):
        raise InputError("omega needs a Calogero-Moser point; use omega_tau for framed cycles")
    d = resolve_degree(point.n, d)
    require_valid(point)
    if not is_simple(point):
        raise NotSimpleError("omega needs a simple point")

    words = enumerate_words(FREE_ALPHABET, d)
    J = j_basis(point, d)
    K = eval_map_kernel(point, d, words)
    for element in J:
        if not evaluate_element(element, point, point.v).is_zero():
            raise AssertionFailure(f"J element {element} is not in the kernel")
    profile = codim_profile(point, words, d)
    _check_profile(profile, point.n)

    model = IdealModel(
        point=point,
        d=d,
        J_basis=J,
        K_basis=K,
        codim_profile=profile,
        fingerprint=fingerprint(point, settings.fingerprint_length_factor * point.n),
    )
    if not a_module_check(model):
        raise AssertionFailure("K/J is not closed under right multiplication by [x, y] - 1")
    logger.info(f"ideal model assembled: n={point.n}, d={d}, dim K={len(K)}, dim J={len(J)}")
    return model


def well_definedness_residuals(point: CMPoint, d: int) -> dict[str, Matrix]:
    """a([x, y] - 1) . v - e(a) v for every |a| <= d - 2; all zero on a valid point."""
    bracket = commutator_xy() - NCElement.one()
    out = {}
    for a in enumerate_words(FREE_ALPHABET, max(d - 2, 0)):
        lhs = evaluate_element(NCElement.from_word(a) * bracket, point, point.v)
        out[word_to_str(a)] = lhs - point.v * epsilon(point, a)
    return out


def a_module_check(model: IdealModel) -> bool:
    """k([x, y] - 1) lies in J_(<=d) for every k in K_(<=d-2)."""
    bracket = commutator_xy() - NCElement.one()
    for k in model.K_le(model.d - 2):
        if not echelon_remainder(k * bracket, model.J_basis).is_zero():
            logger.debug(f"A-module check failed at {k}")
            return False
    return True


def distinct(model_a: IdealModel, model_b: IdealModel) -> bool:
    """Exact: fingerprints differ, or the points are not isomorphic."""
    if model_a.n != model_b.n:
        return True
    if model_a.fingerprint != model_b.fingerprint:
        return True
    return not are_isomorphic(model_a.point, model_b.point)


def distinctness_matrix(models: Sequence[IdealModel]) -> list[list[bool]]:
    return [[distinct(a, b) for b in models] for a in models]


# -- cyclic quivers ---------------------------------------------------------


@dataclass
class CyclicModel:
    """Weight functional and kernel profile of a framed cycle representation."""

    rep: FramedRep
    length: int
    paths: list[Word]
    fingerprint: list[Scalar]
    K_basis: list[NCElement] = field(default_factory=list)
    codim_profile: list[int] = field(default_factory=list)


def cm_word(path: Word) -> Word:
    """Closed path at 0 on the cycle of length 1 as a word over x, y; e0 is the empty word."""
    return tuple({"X0": "x", "Y0": "y"}[letter] for letter in path if letter != "e0")


def omega_tau(rep: Union[FramedRep, CMPoint], length: int) -> CyclicModel:
    """
    Path-algebra analogue of omega on closed cycle paths at vertex 0.

    Raises:
        IrregularWeightError: tau = (lambda_0, ..., lambda_(m-1)) is not regular
        NotSimpleError: rep is not simple
    """
    rep = rep.to_framed() if isinstance(rep, CMPoint) else rep
    tau = [rep.lam[i] for i in range(rep.m)]
    if not is_regular(tau, rep.m):
        raise IrregularWeightError(f"irregular tau {[str(t) for t in tau]}")
    require_valid(rep)
    if not is_simple(rep):
        raise NotSimpleError("omega_tau needs a simple representation")
    paths = enumerate_paths(rep.quiver, 0, length, end=0, arrows=cycle_arrow_names(rep.quiver))
    values = [epsilon(rep, p) for p in paths]
    kernel = eval_map_kernel(rep, length, paths)
    profile = codim_profile(rep, paths, length)
    return CyclicModel(rep=rep, length=length, paths=paths, fingerprint=values,
                       K_basis=kernel, codim_profile=profile)
