"""Matrix modules over rational Cherednik algebras at t = 0.

A module stores matrices for x_1..x_n, y_1..y_n and named group generators
("s1" for the transposition (1 2), "a1" for alpha_1, ...). Operators act on
the left: the word l_1 l_2 ... l_k acts as M(l_1) M(l_2) ... M(l_k). The group
representation is recovered by breadth-first closure with M(g h) = M(g) M(h).

From a simple module V of H_{0,c}(S_n) the restriction to the image of
e_bar gives a Calogero-Moser point, and the weights of V computed by traces
against e agree with the weight functional of that point.
"""

import itertools
from dataclasses import dataclass, field
from typing import Literal, Mapping, Optional, Sequence, Union

from config import settings
from src.algebra.ncalg import FREE_ALPHABET, NCElement, Word, enumerate_words, parse_word, word_to_str
from src.algebra.sra import SRAAlgebra, SRAElement, ThetaMap
from src.algebra.wreath import (
    Convention,
    GroupAlgElement,
    WreathElement,
    act_on_index,
    alpha,
    group_order,
    identity,
    transposition,
    wreath_mult,
)
from src.correspondence.corresp import IdealModel, epsilon, omega
from src.field.scalar import Scalar, as_scalar, make_root_of_unity
from src.linalg.matrix import Matrix, commutator, intertwiner_space
from src.quiver.core import INF
from src.quiver.repvar import (
    CMPoint,
    FramedRep,
    ResidualReport,
    is_simple,
    rank_one_factor,
    require_valid,
    validate,
)
from src.utils.errors import (
    AssertionFailure,
    DimensionError,
    InputError,
    NotSimpleError,
    RankError,
    ShapeMismatchError,
    UnsupportedSizeError,
    ValidationError,
)
from src.utils.logger import logger

Variant = Literal["ep", "ep1"]


@dataclass
class HModule:
    """Finite-dimensional module over H_{0,c}(S_n) (m = 1) or over H_{0,k,c} of S_n x| (Z/m)^n."""

    n: int
    m: int
    x: list[Matrix]
    y: list[Matrix]
    generators: dict[str, Matrix] = field(default_factory=dict)
    c: Scalar = field(default_factory=Scalar.one)
    tau: Optional[list[Scalar]] = None
    convention: Convention = "standard"

    def __post_init__(self):
        if len(self.x) != self.n or len(self.y) != self.n:
            raise ShapeMismatchError(f"need {self.n} matrices for x and for y")
        dim = self.x[0].rows if self.x else 0
        for M in list(self.x) + list(self.y) + list(self.generators.values()):
            if M.shape != (dim, dim):
                raise ShapeMismatchError(f"module matrix of shape {M.shape}, expected {(dim, dim)}")
        self.c = as_scalar(self.c, self.m)
        if self.m > 1:
            if self.tau is None or len(self.tau) != self.m:
                raise InputError(f"a wreath module needs tau with {self.m} entries")
            self.tau = [as_scalar(t, self.m) for t in self.tau]
        for name in self.generators:
            generator_element(name, self.n, self.m)

    @property
    def dim(self) -> int:
        return self.x[0].rows

    def algebra(self) -> SRAAlgebra:
        if self.m == 1:
            return SRAAlgebra(self.n, 1, self.c, (), self.convention)
        return SRAAlgebra.from_weight(self.tau, self.n, self.convention)


def generator_element(name: str, n: int, m: int) -> WreathElement:
    """"s<i>" is the transposition (i, i+1), "a<i>" is alpha_i; both 1-based."""
    kind, index = name[:1], name[1:]
    if not index.isdigit():
        raise InputError(f"bad generator name '{name}'")
    i = int(index) - 1
    if kind == "s" and 0 <= i < n - 1:
        return transposition(n, m, i, i + 1)
    if kind == "a" and 0 <= i < n:
        return alpha(n, m, i)
    raise InputError(f"bad generator name '{name}' for n={n}")


# -- group representation and operators -------------------------------------


def group_representation(module: HModule) -> tuple[dict[WreathElement, Matrix], dict[str, Matrix]]:
    """
    Close the generator matrices under products.

    Returns:
        (matrix of every group element, difference matrices where two products
        of generators give the same element but different matrices)

    Raises:
        InputError: the generators do not generate the whole group
    """
    n, m = module.n, module.m
    gens = [(generator_element(name, n, m), M) for name, M in sorted(module.generators.items())]
    start = identity(n, m)
    rep = {start: Matrix.identity(module.dim, m)}
    conflicts: dict[str, Matrix] = {}
    queue = [start]
    while queue:
        g = queue.pop(0)
        for t, M in gens:
            gt = wreath_mult(g, t, module.convention)
            image = rep[g] @ M
            if gt not in rep:
                rep[gt] = image
                queue.append(gt)
            elif rep[gt] != image:
                conflicts.setdefault(f"group:{gt}", rep[gt] - image)
    if len(rep) != group_order(n, m):
        raise InputError(f"generators reach {len(rep)} of {group_order(n, m)} group elements")
    return rep, conflicts


def group_algebra_operator(module: HModule, u: GroupAlgElement,
                           rep: Optional[dict[WreathElement, Matrix]] = None) -> Matrix:
    rep = rep or group_representation(module)[0]
    result = Matrix.zeros(module.dim, module.dim, module.m)
    for g, c in u.terms.items():
        result = result + rep[g] * c
    return result


def element_operator(module: HModule, element: SRAElement,
                     rep: Optional[dict[WreathElement, Matrix]] = None) -> Matrix:
    """Operator of x^a y^b g: M(x)^a M(y)^b M(g)."""
    rep = rep or group_representation(module)[0]
    result = Matrix.zeros(module.dim, module.dim, module.m)
    for (a, b, g), c in element.terms.items():
        term = Matrix.identity(module.dim, module.m)
        for i, power in enumerate(a):
            for _ in range(power):
                term = term @ module.x[i]
        for i, power in enumerate(b):
            for _ in range(power):
                term = term @ module.y[i]
        result = result + (term @ rep[g]) * c
    return result


def word_in(module: HModule, word: Word, index: int) -> Matrix:
    """a(x_index, y_index) for a word over {x, y}, letters multiplied left to right."""
    result = Matrix.identity(module.dim, module.m)
    for letter in word:
        if letter == "x":
            result = result @ module.x[index]
        elif letter == "y":
            result = result @ module.y[index]
        else:
            raise InputError(f"letter '{letter}' is not x or y")
    return result


def idempotent_operator(module: HModule, kind: str, i: Optional[int] = None,
                        rep: Optional[dict[WreathElement, Matrix]] = None) -> Matrix:
    return element_operator(module, module.algebra().idempotent(kind, i), rep)


# -- verification -----------------------------------------------------------


def verify_module(module: HModule) -> ResidualReport:
    """
    Residuals of every defining relation: commuting x's and y's, y_i x_j - x_j y_i = z_ij,
    equivariance g x_i = zeta^gamma_i x_sigma(i) g (and likewise for y), and
    consistency of the group representation.
    """
    alg = module.algebra()
    rep, conflicts = group_representation(module)
    out: dict[str, Matrix] = {}
    n = module.n
    for i, j in itertools.combinations(range(n), 2):
        out[f"[x{i + 1},x{j + 1}]"] = commutator(module.x[i], module.x[j])
        out[f"[y{i + 1},y{j + 1}]"] = commutator(module.y[i], module.y[j])
    for i in range(n):
        for j in range(n):
            z = group_algebra_operator(module, alg.commutator_yx(i, j), rep)
            out[f"[y{i + 1},x{j + 1}]"] = commutator(module.y[i], module.x[j]) - z
    for name, M in sorted(module.generators.items()):
        g = generator_element(name, n, module.m)
        for i in range(n):
            target, power = act_on_index(g, i)
            zeta = make_root_of_unity(module.m, power)
            out[f"{name}.x{i + 1}"] = M @ module.x[i] - (module.x[target] @ M) * zeta
            out[f"{name}.y{i + 1}"] = M @ module.y[i] - (module.y[target] @ M) * zeta.inverse()
    out.update(conflicts)
    report = ResidualReport(out)
    if not report.passed:
        logger.debug(f"module relations fail at {report.failing()}")
    return report


def require_valid_module(module: HModule) -> None:
    report = verify_module(module)
    if not report.passed:
        raise ValidationError(f"nonzero module residuals at {report.failing()}")


def is_simple_module(module: HModule) -> bool:
    """Schur test: the commutant of x's, y's and the group is one-dimensional."""
    gens = list(module.x) + list(module.y) + [module.generators[k] for k in sorted(module.generators)]
    return len(intertwiner_space(gens, gens)) == 1


# -- fixtures ---------------------------------------------------------------


def _q(value) -> Scalar:
    return as_scalar(value)


def solve_fixture(n: int, m: int = 1, c=1, params: Optional[Mapping[str, object]] = None,
                  tau: Optional[Sequence] = None) -> HModule:
    """
    Explicit small simple modules.

    Args:
        n: 1 or 2 for m = 1; 1 for m = 2
        m: Order of the cyclic group
        c: Parameter of H_{0,c}(S_n) (m = 1)
        params: n=2: p, q, r, t (p != q); n=1: x, y; (m, n) = (2, 1): a, b, p
        tau: Weight for the wreath case, default (1, 1)

    Returns:
        A module passing verify_module

    Raises:
        UnsupportedSizeError: any other (m, n)
        InputError: degenerate parameters
    """
    params = dict(params or {})
    if m == 1 and n == 1:
        x = Matrix.from_rows([[_q(params.get("x", 0))]])
        y = Matrix.from_rows([[_q(params.get("y", 0))]])
        module = HModule(1, 1, [x], [y], {}, c=_q(c))
    elif m == 1 and n == 2:
        p, q = _q(params.get("p", 0)), _q(params.get("q", 1))
        r, t = _q(params.get("r", 0)), _q(params.get("t", 0))
        c = _q(c)
        if p == q:
            raise InputError("p and q must differ")
        u = c / (p - q)
        s = Matrix.from_rows([[0, 1], [1, 0]])
        x1 = Matrix.diag([p, q])
        y1 = Matrix.from_rows([[r, -u], [u, t]])
        module = HModule(2, 1, [x1, s @ x1 @ s], [y1, s @ y1 @ s], {"s1": s}, c=c)
    elif m == 2 and n == 1:
        tau = list(tau) if tau is not None else [1, 1]
        alg = SRAAlgebra.from_weight(tau, 1)
        c1 = alg.c[0]
        a, b, p = (as_scalar(params.get(key, 1), 2) for key in ("a", "b", "p"))
        if not a:
            raise InputError("a must be nonzero")
        q = (p * b - c1) / a
        g = Matrix.diag([1, -1], m=2)
        x = Matrix.from_rows([[0, a], [p, 0]], m=2)
        y = Matrix.from_rows([[0, b], [q, 0]], m=2)
        module = HModule(1, 2, [x], [y], {"a1": g}, tau=tau)
    else:
        raise UnsupportedSizeError(f"no fixture for (m, n) = ({m}, {n})")
    logger.debug(f"fixture built: m={m}, n={n}, dim={module.dim}")
    return module


def conjugate_module(module: HModule, T: Matrix) -> HModule:
    T_inv = T.inverse()
    return HModule(
        module.n, module.m,
        [T @ M @ T_inv for M in module.x],
        [T @ M @ T_inv for M in module.y],
        {k: T @ M @ T_inv for k, M in module.generators.items()},
        c=module.c, tau=module.tau, convention=module.convention,
    )


def normalized(module: HModule) -> HModule:
    """Rescale y so that c = 1 (m = 1)."""
    if module.m != 1:
        raise InputError("normalization of c applies to m = 1 only")
    if not module.c:
        raise InputError("c = 0 cannot be normalized")
    if module.c == Scalar.one():
        return module
    inv = module.c.inverse()
    return HModule(module.n, 1, list(module.x), [M * inv for M in module.y],
                   dict(module.generators), c=Scalar.one(), convention=module.convention)


# -- from modules to Calogero-Moser points ----------------------------------


def eg_map(module: HModule) -> CMPoint:
    """
    Calogero-Moser point of a simple module: restrict x_1, y_1 to V e_bar and
    factor -([X, Y] + Id) = v w.

    Raises:
        NotSimpleError: V is not simple
        DimensionError: the image of e_bar is not n-dimensional
        RankError: [X, Y] + Id does not have rank one
    """
    if module.m != 1:
        raise InputError("eg_map needs m = 1")
    if not is_simple_module(module):
        raise NotSimpleError("module is not simple")
    module = normalized(module)
    rep = group_representation(module)[0]
    A_bar = idempotent_operator(module, "e_bar", rep=rep)
    basis = A_bar.image_basis()
    if len(basis) != module.n:
        raise DimensionError(f"image of e_bar has dimension {len(basis)}, expected {module.n}")
    X = module.x[0].restrict(basis)
    Y = module.y[0].restrict(basis)
    M = -(commutator(X, Y) + Matrix.identity(module.n))
    if M.rank() != 1:
        raise RankError(f"[X, Y] + Id has rank {M.rank()}")
    v, w = rank_one_factor(M)
    point = CMPoint(module.n, X, Y, v, w)
    require_valid(point)
    logger.info(f"module of dimension {module.dim} mapped to a point with n={module.n}")
    return point


def weight_via_module(module: HModule, word: Union[Word, str], variant: Variant = "ep") -> Scalar:
    """
    Weight of a word computed from the module.

    ep:  -n Tr(A_e a(x_1, y_1))
    ep1: -sum_i Tr(A_e a(x_i, y_i) A_e) on the line V e

    Raises:
        DimensionError: V e is not one-dimensional (ep1)
    """
    word = parse_word(word) if isinstance(word, str) else tuple(word)
    module = normalized(module)
    rep = group_representation(module)[0]
    A_e = idempotent_operator(module, "e", rep=rep)
    if variant == "ep":
        return -(A_e @ word_in(module, word, 0)).trace() * module.n
    if variant == "ep1":
        line = A_e.image_basis()
        if len(line) != 1:
            raise DimensionError(f"V e has dimension {len(line)}")
        total = Scalar.zero()
        for i in range(module.n):
            total = total + (A_e @ word_in(module, word, i) @ A_e).restrict(line)[0, 0]
        return -total
    raise InputError(f"unknown variant '{variant}'")


def spherical_theta_operator(module: HModule, a: NCElement) -> Matrix:
    """-sum_i A_e a(x_i, y_i) A_e, the image of v a(X, Y) w on V."""
    if module.m != 1:
        raise InputError("the spherical operator on words in x, y needs m = 1")
    A_e = idempotent_operator(module, "e")
    result = Matrix.zeros(module.dim, module.dim)
    for word, c in a.terms.items():
        for i in range(module.n):
            result = result - (A_e @ word_in(module, word, i) @ A_e) * c
    return result


def xi_pipeline(module: HModule, d: Optional[int] = None) -> IdealModel:
    """Ideal model of eg_map(V), after checking module weights against the weight functional."""
    point = eg_map(module)
    for word in enumerate_words(FREE_ALPHABET, settings.fingerprint_length_factor * module.n):
        lhs = weight_via_module(module, word, "ep")
        rhs = epsilon(point, word)
        if lhs != rhs:
            raise AssertionFailure(f"module weight {lhs} != {rhs} at '{word_to_str(word)}'")
    return omega(point, d)


def spherical_commutativity(module: HModule, deg: int = 3) -> bool:
    """A_e a(x_1, y_1) A_e pairwise commute for words of length <= deg."""
    A_e = idempotent_operator(module, "e")
    ops = [A_e @ word_in(module, w, 0) @ A_e for w in enumerate_words(FREE_ALPHABET, deg)]
    for A, B in itertools.combinations(ops, 2):
        if not commutator(A, B).is_zero():
            return False
    return True


def rank_identity(module: HModule) -> bool:
    """e_bar([x_1, y_1] - 1) = -n e as operators, with c normalized to 1."""
    module = normalized(module)
    rep = group_representation(module)[0]
    A_bar = idempotent_operator(module, "e_bar", rep=rep)
    A_e = idempotent_operator(module, "e", rep=rep)
    bracket = commutator(module.x[0], module.y[0]) - Matrix.identity(module.dim)
    return A_bar @ bracket == A_e * (-module.n)


# -- wreath case ------------------------------------------------------------


def wreath_weight_pullback(module: HModule, path: Union[Word, str], theta: Optional[ThetaMap] = None) -> Scalar:
    """
    Scalar by which theta(v . path . w) acts on the line V bold_e.

    Raises:
        DimensionError: V bold_e is not one-dimensional
    """
    if module.m == 1 or module.tau is None:
        raise InputError("the wreath pullback needs a module with m > 1")
    path = parse_word(path) if isinstance(path, str) else tuple(path)
    theta = theta or ThetaMap(module.tau, module.n, module.convention)
    rep = group_representation(module)[0]
    line = element_operator(module, theta.bold_e, rep).image_basis()
    if len(line) != 1:
        raise DimensionError(f"V bold_e has dimension {len(line)}")
    image = theta(("v",) + path + ("w",))
    return element_operator(module, image, rep).restrict(line)[0, 0]


def matching_nakajima_point(module: HModule) -> FramedRep:
    """
    Nakajima point at dimension (1, 1, 1) with the same weights as the (m, n) = (2, 1) fixture.

    With x = [[0, a], [p, 0]] and y = [[0, b], [q, 0]]: X_0 = a, Y_0 = -q,
    X_1 = p, Y_1 = -b, v = 1, w = lambda_inf.
    """
    if (module.m, module.n, module.dim) != (2, 1, 2):
        raise UnsupportedSizeError("matching points exist for the two-dimensional (2, 1) fixture only")
    theta = ThetaMap(module.tau, 1, module.convention)
    x, y = module.x[0], module.y[0]

    def one(value: Scalar) -> Matrix:
        return Matrix.from_rows([[value.lift(1)]])

    arrows = {
        "X0": one(x[0, 1]),
        "Y0": one(-y[1, 0]),
        "X1": one(x[1, 0]),
        "Y1": one(-y[0, 1]),
        "v": one(Scalar.one()),
        "w": one(theta.lam[INF]),
    }
    lam = {key: value.lift(1) for key, value in theta.lam.items()}
    rep = FramedRep(m=2, dims=(1, 1), lam=lam, arrows=arrows)
    if not validate(rep).passed:
        raise AssertionFailure("matching point does not satisfy the moment map relations")
    if not is_simple(rep):
        raise NotSimpleError("matching point is not simple")
    return rep
