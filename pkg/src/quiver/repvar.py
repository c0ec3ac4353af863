"""Points of Calogero-Moser and Nakajima varieties as framed representations.

Arrow a acts as a matrix V_tgt(a) -> V_src(a), so X_k is n_(k+1) x n_k,
Y_k is n_k x n_(k+1), v is n_0 x 1 and w is 1 x n_0.
"""

import random
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

from config import settings
from src.algebra.ncalg import (
    FREE_ALPHABET,
    Word,
    cycle_arrow_names,
    enumerate_paths,
    enumerate_words,
    evaluate_on_vector,
    idempotent_vertex,
    is_idempotent_letter,
    word_operator,
)
from src.field.scalar import Scalar, as_scalar
from src.linalg.matrix import Matrix, block_diag, commutator, intertwiner_space, stack_columns
from src.quiver.core import (
    INF,
    Quiver,
    Vertex,
    doubled_framed_cyclic,
    framed_cyclic,
    framed_dims,
    is_positive_root,
    is_regular,
    lambda_from_tau,
)
from src.utils.errors import (
    InputError,
    IrregularWeightError,
    NakajimaSolveError,
    NotARootError,
    NotSimpleError,
    RankError,
    RepeatedSpectrumError,
    ShapeMismatchError,
    ValidationError,
)
from src.utils.logger import logger


@dataclass(frozen=True)
class CMPoint:
    """Quadruple (X, Y, v, w) with [X, Y] + Id + v w = 0."""

    n: int
    X: Matrix
    Y: Matrix
    v: Matrix
    w: Matrix

    def __post_init__(self):
        n = self.n
        expected = {"X": (n, n), "Y": (n, n), "v": (n, 1), "w": (1, n)}
        for name, shape in expected.items():
            if getattr(self, name).shape != shape:
                raise ShapeMismatchError(f"{name} has shape {getattr(self, name).shape}, expected {shape}")

    @property
    def m(self) -> int:
        return 1

    @property
    def dims(self) -> tuple[int, ...]:
        return (self.n,)

    @property
    def lam(self) -> dict[Vertex, Scalar]:
        return {INF: Scalar.from_rational(-self.n), 0: Scalar.one()}

    def matrix_for(self, letter: str) -> Matrix:
        table = {"x": self.X, "X0": self.X, "y": self.Y, "Y0": self.Y, "v": self.v, "w": self.w}
        if letter in table:
            return table[letter]
        if is_idempotent_letter(letter):
            return Matrix.identity(1 if idempotent_vertex(letter) == INF else self.n)
        raise InputError(f"no matrix for letter '{letter}'")

    def to_framed(self) -> "FramedRep":
        return FramedRep(
            m=1,
            dims=(self.n,),
            lam=self.lam,
            arrows={"X0": self.X, "Y0": self.Y, "v": self.v, "w": self.w},
        )


@dataclass(frozen=True)
class FramedRep:
    """Representation of the doubled framed cycle of length m, dimension (1, n)."""

    m: int
    dims: tuple[int, ...]
    lam: Mapping[Vertex, Scalar]
    arrows: Mapping[str, Matrix]
    quiver: Quiver = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.dims) != self.m:
            raise ShapeMismatchError(f"dimension vector needs {self.m} entries")
        object.__setattr__(self, "quiver", doubled_framed_cyclic(self.m))
        object.__setattr__(self, "lam", {k: v if isinstance(v, Scalar) else as_scalar(v)
                                         for k, v in self.lam.items()})
        for arrow in self.quiver.arrows:
            if arrow.name not in self.arrows:
                raise ShapeMismatchError(f"missing matrix for arrow {arrow.name}")
            shape = (self.dim(arrow.src), self.dim(arrow.tgt))
            if self.arrows[arrow.name].shape != shape:
                raise ShapeMismatchError(
                    f"arrow {arrow.name} has shape {self.arrows[arrow.name].shape}, expected {shape}"
                )

    @property
    def n(self) -> int:
        return sum(self.dims)

    def dim(self, vertex: Vertex) -> int:
        return 1 if vertex == INF else self.dims[int(vertex)]

    @property
    def v(self) -> Matrix:
        return self.arrows["v"]

    @property
    def w(self) -> Matrix:
        return self.arrows["w"]

    def matrix_for(self, letter: str) -> Matrix:
        if is_idempotent_letter(letter):
            return Matrix.identity(self.dim(idempotent_vertex(letter)))
        try:
            return self.arrows[letter]
        except KeyError as e:
            raise InputError(f"no matrix for letter '{letter}'") from e

    def dimension_vector(self) -> dict[Vertex, int]:
        return framed_dims(self.dims)


Point = Union[CMPoint, FramedRep]


def as_framed(rep: Point) -> FramedRep:
    return rep.to_framed() if isinstance(rep, CMPoint) else rep


# -- validation -----------------------------------------------------------


@dataclass
class ResidualReport:
    """Relation residual matrices keyed by vertex label."""

    residuals: dict[str, Matrix]

    @property
    def passed(self) -> bool:
        return all(r.is_zero() for r in self.residuals.values())

    def failing(self) -> list[str]:
        return [k for k, r in self.residuals.items() if not r.is_zero()]


def residuals(rep: Point) -> dict[str, Matrix]:
    """
    Relation residuals, all zero iff rep is a point.

    For a CMPoint: inf -> w v + n, 0 -> [X, Y] + Id + v w. For a FramedRep:
    inf -> w v - lambda_inf, and at cycle vertex k
    lambda_k Id + X_(k-1) Y_(k-1) - Y_k X_k (+ v w at k = 0).
    """
    if isinstance(rep, CMPoint):
        n = rep.n
        return {
            INF: rep.w @ rep.v + Matrix.identity(1) * n,
            "0": commutator(rep.X, rep.Y) + Matrix.identity(n) + rep.v @ rep.w,
        }
    a = rep.arrows
    m = rep.m
    out = {INF: rep.w @ rep.v - Matrix.identity(1) * rep.lam[INF]}
    for k in range(m):
        prev = (k - 1) % m
        r = Matrix.identity(rep.dims[k]) * rep.lam[k]
        r = r + a[f"X{prev}"] @ a[f"Y{prev}"] - a[f"Y{k}"] @ a[f"X{k}"]
        if k == 0:
            r = r + rep.v @ rep.w
        out[str(k)] = r
    return out


def validate(rep: Point) -> ResidualReport:
    report = ResidualReport(residuals(rep))
    if not report.passed:
        logger.debug(f"validation failed at vertices {report.failing()}")
    return report


def require_valid(rep: Point) -> None:
    report = validate(rep)
    if not report.passed:
        raise ValidationError(f"nonzero relation residuals at vertices {report.failing()}")


# -- generation -----------------------------------------------------------


def generate_cm(n: int, spectrum: Sequence, y_diag: Optional[Sequence] = None) -> CMPoint:
    """
    Standard Calogero-Moser point with diagonal X.

    Args:
        n: Dimension
        spectrum: n pairwise distinct scalars (diagonal of X)
        y_diag: Diagonal of Y (zeros by default)

    Returns:
        Validated CMPoint with v = (1,...,1)^T, w = (-1,...,-1)
    """
    if len(spectrum) != n:
        raise ShapeMismatchError(f"spectrum needs {n} entries, got {len(spectrum)}")
    xs = [as_scalar(s) for s in spectrum]
    ys = [as_scalar(s) for s in (y_diag if y_diag is not None else [0] * n)]
    if len(ys) != n:
        raise ShapeMismatchError(f"y_diag needs {n} entries, got {len(ys)}")
    if len(set(xs)) != n:
        raise RepeatedSpectrumError(f"spectrum entries must be distinct: {[str(x) for x in xs]}")
    Y = Matrix.from_rows(
        [[ys[i] if i == j else (xs[i] - xs[j]).inverse() for j in range(n)] for i in range(n)],
        cols=n,
    )
    point = CMPoint(
        n=n,
        X=Matrix.diag(xs),
        Y=Y,
        v=Matrix.column([1] * n),
        w=Matrix.row([-1] * n),
    )
    require_valid(point)
    return point


def random_cm_points(n: int, count: int, seed: int = 0) -> list[CMPoint]:
    """Seeded sample of points with integer spectra and diagonal Y."""
    rng = random.Random(seed)
    points = []
    for _ in range(count):
        spectrum = rng.sample(range(-20, 21), n)
        y_diag = [rng.randint(-5, 5) for _ in range(n)]
        points.append(generate_cm(n, spectrum, y_diag))
    return points


@dataclass
class NakajimaParams:
    """Free parameters of the Nakajima point constructions."""

    x: Optional[Sequence] = None
    y: Optional[Sequence] = None
    p0: object = 0
    v: object = 1
    spectrum: Optional[Sequence] = None
    y_diag: Optional[Sequence] = None


def _scalar_rep(m: int, n_vec: Sequence[int], lam, arrows: Mapping[str, object]) -> FramedRep:
    return FramedRep(m=m, dims=tuple(n_vec), lam=lam,
                     arrows={k: v if isinstance(v, Matrix) else Matrix.from_rows([[v]])
                             for k, v in arrows.items()})


def _nakajima_ones(m: int, tau: list[Scalar], lam, params: NakajimaParams) -> FramedRep:
    """n = (1,...,1): scalar arrows with x_k y_k = p0 + tau_1 + ... + tau_k."""
    xs = [as_scalar(x) for x in (params.x if params.x is not None else [1] * m)]
    ys_given = [as_scalar(y) for y in (params.y if params.y is not None else [0] * m)]
    if len(xs) != m or len(ys_given) != m:
        raise ShapeMismatchError(f"x and y parameters need {m} entries")
    v = as_scalar(params.v)
    if not v:
        raise InputError("parameter v must be nonzero")
    arrows: dict[str, object] = {"v": v, "w": lam[INF] / v}
    p = as_scalar(params.p0)
    for k in range(m):
        if k > 0:
            p = p + tau[k]
        arrows[f"X{k}"] = xs[k]
        if xs[k]:
            arrows[f"Y{k}"] = p / xs[k]
        elif p:
            raise NakajimaSolveError(f"no solution found at given params (x_{k} = 0 but x_{k} y_{k} = {p})")
        else:
            arrows[f"Y{k}"] = ys_given[k]
    return _scalar_rep(m, [1] * m, lam, arrows)


def _nakajima_constant(m: int, c: int, tau: list[Scalar], lam, params: NakajimaParams) -> FramedRep:
    """n = (c,...,c), m >= 2: X_0 diagonal, other X identity, Y_0 of Calogero-Moser type."""
    spectrum = [as_scalar(s) for s in (params.spectrum if params.spectrum is not None else range(c))]
    y_diag = [as_scalar(s) for s in (params.y_diag if params.y_diag is not None else [0] * c)]
    if len(spectrum) != c or len(y_diag) != c:
        raise ShapeMismatchError(f"spectrum and y_diag need {c} entries")
    if len(set(spectrum)) != c:
        raise RepeatedSpectrumError("spectrum entries must be distinct")
    total = sum(tau, Scalar.zero())
    D = Matrix.diag(spectrum)
    ident = Matrix.identity(c)
    Y0 = Matrix.from_rows(
        [[y_diag[i] if i == j else total / (spectrum[i] - spectrum[j]) for j in range(c)] for i in range(c)],
        cols=c,
    )
    arrows = {"X0": D, "Y0": Y0, "v": Matrix.column([1] * c), "w": Matrix.row([-total] * c)}
    Yk = D @ Y0
    for k in range(1, m):
        Yk = Yk + ident * tau[k]
        arrows[f"X{k}"] = ident
        arrows[f"Y{k}"] = Yk
    return FramedRep(m=m, dims=tuple([c] * m), lam=lam, arrows=arrows)


def _reflected_dim(m: int, dims: Sequence[int], k: int) -> int:
    """n'_k = (sum over neighbours of k in the framed cycle) - n_k."""
    return dims[(k - 1) % m] + dims[(k + 1) % m] + (1 if k == 0 else 0) - dims[k]


def _reflected_lambda(m: int, lam: Mapping[Vertex, Scalar], k: int) -> dict[Vertex, Scalar]:
    """Simple reflection of a weight at cycle vertex k (m >= 2)."""
    out = dict(lam)
    out[k] = -lam[k]
    for j in ((k - 1) % m, (k + 1) % m):
        out[j] = out[j] + lam[k]
    if k == 0:
        out[INF] = out[INF] + lam[k]
    return out


def _edges_at(rep: FramedRep, k: int) -> list[tuple[str, str, int, int]]:
    """(in arrow, out arrow, sign, size) per summand of the direct sum around k."""
    m = rep.m
    prev, nxt = (k - 1) % m, (k + 1) % m
    edges = [(f"X{prev}", f"Y{prev}", 1, rep.dims[prev]), (f"Y{k}", f"X{k}", -1, rep.dims[nxt])]
    if k == 0:
        edges.append(("v", "w", 1, 1))
    return edges


def reflect(rep: FramedRep, k: int) -> FramedRep:
    """
    Reflection functor at cycle vertex k.

    With mu: V_k -> (+) V_j the outgoing arrows and pi: (+) V_j -> V_k the
    signed incoming ones, pi mu = -lambda_k. The new space at k is ker(pi),
    with mu' its inclusion and pi' = lambda_k + mu pi written in a basis of
    ker(pi). The result lives over the reflected weight and dimension vector.

    Raises:
        InputError: m = 1 (vertex 0 has a loop) or lambda_k = 0
    """
    m = rep.m
    if m < 2:
        raise InputError("cannot reflect at a vertex with a loop")
    lam_k = rep.lam[k]
    if not lam_k:
        raise InputError(f"reflection at {k} needs lambda_{k} != 0")
    edges = _edges_at(rep, k)
    a = rep.arrows
    fm = lam_k.m
    pi = Matrix.zeros(rep.dims[k], 0, fm)
    mu = Matrix.zeros(0, rep.dims[k], fm)
    for into, out, sign, _ in edges:
        pi = pi.hstack(a[into] * sign)
        mu = mu.vstack(a[out])
    total = mu.rows
    kernel = stack_columns(pi.kernel_basis(), total, fm)
    new_dim = kernel.cols
    # rows of the kernel basis that carry an invertible square block
    _, independent = kernel.transpose().rref()
    chosen = Matrix.from_rows([kernel.to_rows()[i] for i in independent], fm, cols=new_dim)
    lifted = Matrix.identity(total, fm) * lam_k + mu @ pi
    coords = chosen.inverse() @ Matrix.from_rows([lifted.to_rows()[i] for i in independent], fm, cols=total)

    arrows = dict(a)
    pos = 0
    for into, out, sign, size in edges:
        rows = kernel.to_rows()[pos:pos + size]
        arrows[out] = Matrix.from_rows(rows, fm, cols=new_dim)
        block = Matrix.from_rows([row[pos:pos + size] for row in coords.to_rows()], fm, cols=size)
        arrows[into] = block * sign
        pos += size
    dims = list(rep.dims)
    dims[k] = new_dim
    return FramedRep(m=m, dims=tuple(dims), lam=_reflected_lambda(m, rep.lam, k), arrows=arrows)


def _reduction_path(m: int, n_vec: Sequence[int]) -> tuple[list[int], list[int]]:
    """Reflect at cycle vertices while a dimension drops; returns (vertices, final dims)."""
    dims = list(n_vec)
    path = []
    while True:
        k = next((k for k in range(m) if _reflected_dim(m, dims, k) < dims[k]), None)
        if k is None:
            return path, dims
        dims[k] = _reflected_dim(m, dims, k)
        path.append(k)


def _zero_rep(m: int, lam) -> FramedRep:
    arrows = {f"{name}{k}": Matrix.zeros(0, 0) for k in range(m) for name in ("X", "Y")}
    arrows.update({"v": Matrix.zeros(0, 1), "w": Matrix.zeros(1, 0)})
    return FramedRep(m=m, dims=tuple([0] * m), lam=lam, arrows=arrows)


def _nakajima_reflected(m: int, n_vec: Sequence[int], lam, params: NakajimaParams) -> FramedRep:
    """Reduce (1, n) to (1, c, ..., c), build that point, reflect back."""
    path, base_dims = _reduction_path(m, n_vec)
    if len(set(base_dims)) != 1:
        raise NakajimaSolveError(f"no solution found at given params (reduced to {base_dims})")
    base_lam = dict(lam)
    for k in path:
        base_lam = _reflected_lambda(m, base_lam, k)
    c = base_dims[0]
    base_tau = [base_lam[k] for k in range(m)]
    if c == 0:
        rep = _zero_rep(m, base_lam)
    elif c == 1:
        rep = _nakajima_ones(m, base_tau, base_lam, params)
    else:
        rep = _nakajima_constant(m, c, base_tau, base_lam, params)
    logger.debug(f"reflecting base point {base_dims} along {list(reversed(path))}")
    for k in reversed(path):
        rep = reflect(rep, k)
    return rep


def generate_nakajima(m: int, n_vec: Sequence[int], tau: Sequence,
                      params: Optional[NakajimaParams] = None) -> FramedRep:
    """
    Build a point of the Nakajima variety for the cycle of length m.

    Args:
        m: Cycle length
        n_vec: Dimension vector (n_0, ..., n_{m-1})
        tau: Regular weight; lambda = (-tau . n, tau)
        params: Construction parameters; for non-constant dimension vectors they
            apply to the constant-dimension point the reflections start from

    Returns:
        Validated FramedRep

    Raises:
        IrregularWeightError: tau is not regular
        NotARootError: (1, n) is not a positive root
        NakajimaSolveError: no solution at the given parameters
    """
    params = params or NakajimaParams()
    taus = [as_scalar(t) for t in tau]
    if len(taus) != m or len(n_vec) != m:
        raise ShapeMismatchError(f"tau and dims need {m} entries")
    if not is_regular(taus, m):
        raise IrregularWeightError(f"irregular tau {[str(t) for t in taus]}")
    if not is_positive_root(framed_cyclic(m), framed_dims(n_vec)):
        raise NotARootError(f"not a root: (1, {list(n_vec)})")
    lam = lambda_from_tau(taus, n_vec)

    if m == 1:
        n = n_vec[0]
        spectrum = params.spectrum if params.spectrum is not None else list(range(n))
        point = generate_cm(n, spectrum, params.y_diag)
        t0 = taus[0]
        rep = FramedRep(m=1, dims=(n,), lam=lam,
                        arrows={"X0": point.X, "Y0": point.Y * t0, "v": point.v, "w": point.w * t0})
    elif all(k == 1 for k in n_vec):
        rep = _nakajima_ones(m, taus, lam, params)
    elif len(set(n_vec)) == 1 and n_vec[0] > 0:
        rep = _nakajima_constant(m, n_vec[0], taus, lam, params)
    else:
        rep = _nakajima_reflected(m, n_vec, lam, params)
    require_valid(rep)
    logger.debug(f"generated Nakajima point m={m} dims={list(n_vec)}")
    return rep


# -- group action ---------------------------------------------------------


def gl_act(rep: Point, g: Union[Matrix, Mapping[Vertex, Matrix]]) -> Point:
    """
    Act by the block group: arrow a becomes g_src M(a) g_tgt^-1.

    A single matrix acts at vertex 0 (the Calogero-Moser case). The block at
    inf must be the 1x1 identity.
    """
    if isinstance(rep, CMPoint):
        if not isinstance(g, Matrix):
            g = g[0]
        g_inv = g.inverse()
        return CMPoint(n=rep.n, X=g @ rep.X @ g_inv, Y=g @ rep.Y @ g_inv, v=g @ rep.v, w=rep.w @ g_inv)
    blocks = {0: g} if isinstance(g, Matrix) else dict(g)
    if INF in blocks and blocks[INF] != Matrix.identity(1):
        raise InputError("the block at inf must be the identity")
    full = {v: blocks.get(v, Matrix.identity(rep.dim(v))) for v in rep.quiver.vertices}
    inverses = {v: full[v].inverse() for v in full}
    arrows = {a.name: full[a.src] @ rep.arrows[a.name] @ inverses[a.tgt] for a in rep.quiver.arrows}
    return FramedRep(m=rep.m, dims=rep.dims, lam=rep.lam, arrows=arrows)


# -- total-space operators ------------------------------------------------


def _layout(rep: FramedRep) -> tuple[list[Vertex], dict[Vertex, int], int]:
    order: list[Vertex] = [INF] + list(range(rep.m))
    offsets: dict[Vertex, int] = {}
    pos = 0
    for v in order:
        offsets[v] = pos
        pos += rep.dim(v)
    return order, offsets, pos


def total_operators(rep: FramedRep) -> dict[str, Matrix]:
    """Each arrow as an operator on the total space (inf block first)."""
    _, offsets, size = _layout(rep)
    zero = Scalar.zero()
    ops = {}
    for arrow in rep.quiver.arrows:
        M = rep.arrows[arrow.name]
        rows = [[zero] * size for _ in range(size)]
        r0, c0 = offsets[arrow.src], offsets[arrow.tgt]
        for i in range(M.rows):
            for j in range(M.cols):
                rows[r0 + i][c0 + j] = M[i, j]
        ops[arrow.name] = Matrix.from_rows(rows, cols=size)
    return ops


def vertex_projectors(rep: FramedRep) -> dict[Vertex, Matrix]:
    order, _, _ = _layout(rep)
    return {v: block_diag([Matrix.identity(rep.dim(u)) if u == v else Matrix.zeros(rep.dim(u), rep.dim(u))
                           for u in order])
            for v in order}


def _generators(rep: FramedRep) -> list[Matrix]:
    ops = total_operators(rep)
    return list(vertex_projectors(rep).values()) + [ops[name] for name in sorted(ops)]


def is_simple(rep: Point) -> bool:
    """
    Simplicity for dimension (1, n).

    (a) e_inf generates the whole space under the arrow operators, and
    (b) no nonzero subspace of ker(w) with zero inf-component is invariant
    under the cycle arrows.
    """
    rep = as_framed(rep)
    ops = total_operators(rep)
    _, _, size = _layout(rep)
    e_inf = Matrix.column([1] + [0] * (size - 1))

    basis = [e_inf]
    queue = [e_inf]
    while queue and len(basis) < size:
        vec = queue.pop(0)
        for name in sorted(ops):
            u = ops[name] @ vec
            if stack_columns(basis + [u], size).rank() > len(basis):
                basis.append(u)
                queue.append(u)
    if len(basis) < size:
        logger.debug(f"e_inf generates only {len(basis)} of {size} dimensions")
        return False

    cycle_ops = [ops[name] for name in cycle_arrow_names(rep.quiver)]
    C = Matrix.row([1] + [0] * (size - 1)).vstack(ops["w"])
    rank = C.rank()
    while True:
        for A in cycle_ops:
            C = C.vstack(C @ A)
        reduced, pivots = C.rref()
        C = Matrix.from_rows(reduced.to_rows()[:len(pivots)], cols=size) if pivots else Matrix.zeros(0, size)
        if len(pivots) == rank:
            break
        rank = len(pivots)
    return rank == size


def are_isomorphic(rep_a: Point, rep_b: Point, strict: bool = False) -> bool:
    """
    Isomorphism test by Schur's lemma: simple reps are isomorphic iff a nonzero
    intertwiner exists.

    Non-simple inputs fall back to fingerprint comparison with a warning,
    or raise NotSimpleError when strict.
    """
    a, b = as_framed(rep_a), as_framed(rep_b)
    if a.m != b.m or a.dims != b.dims:
        return False
    if not (is_simple(a) and is_simple(b)):
        if strict:
            raise NotSimpleError("isomorphism test needs simple representations")
        logger.warning("are_isomorphic on non-simple input; comparing fingerprints only")
        return fingerprint(a) == fingerprint(b)
    return bool(intertwiner_space(_generators(a), _generators(b)))


# -- weight values --------------------------------------------------------


def weight_value(rep: Point, word: Word) -> Scalar:
    """w . (word acting on v)."""
    return (rep.w @ evaluate_on_vector(word, rep, rep.v))[0, 0]


def closed_paths(rep: Point, max_len: int) -> list[Word]:
    """Words whose weights make up the fingerprint, in deterministic order."""
    if isinstance(rep, CMPoint):
        return enumerate_words(FREE_ALPHABET, max_len)
    return enumerate_paths(rep.quiver, 0, max_len, end=0, arrows=cycle_arrow_names(rep.quiver))


def fingerprint(rep: Point, length: Optional[int] = None) -> list[Scalar]:
    """Weights of all words (or closed paths at 0) of length <= L; default L = 2n."""
    if length is None:
        length = settings.fingerprint_length_factor * rep.n
    return [weight_value(rep, w) for w in closed_paths(rep, length)]


# -- identities -----------------------------------------------------------


def kernel_identity_product(point: CMPoint) -> Matrix:
    """rho([x,y] - 1) rho([x,y] + n - 1) with rho(word) the reading-order operator."""
    n = point.n
    bracket = word_operator(("x", "y"), point, n) - word_operator(("y", "x"), point, n)
    ident = Matrix.identity(n)
    return (bracket - ident) @ (bracket + ident * (n - 1))


def rank_one_factor(M: Matrix) -> tuple[Matrix, Matrix]:
    """
    Deterministic factorization M = v w of a rank-one matrix.

    v is the first nonzero column scaled so its first nonzero entry is 1;
    w is the matching row of M.
    """
    if M.rank() != 1:
        raise RankError(f"expected rank 1, got {M.rank()}")
    j0 = next(j for j in range(M.cols) if any(M[i, j] for i in range(M.rows)))
    i0 = next(i for i in range(M.rows) if M[i, j0])
    pivot = M[i0, j0].inverse()
    v = Matrix.column([M[i, j0] * pivot for i in range(M.rows)])
    w = Matrix.row([M[i0, j] for j in range(M.cols)])
    return v, w


def conjugate_point(point: CMPoint, g: Matrix) -> CMPoint:
    """Conjugate a Calogero-Moser point by g in GL_n."""
    return gl_act(point, g)
