"""Quiver combinatorics: cyclic quivers, doubling, framing, Kac roots, regularity.

Vertices are ints 0..m-1 for the cycle plus the string "inf" for the framing
vertex. The cycle quiver with m vertices is called type A~_m here even though
the usual name is A~_(m-1).
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

from src.field.scalar import Scalar, as_scalar
from src.utils.errors import InputError, ShapeMismatchError
from src.utils.logger import logger

Vertex = Union[int, str]
INF = "inf"


@dataclass(frozen=True)
class Arrow:
    """A named arrow src -> tgt."""

    name: str
    src: Vertex
    tgt: Vertex


@dataclass(frozen=True)
class Quiver:
    """Finite quiver; loops allowed, arrow names unique."""

    vertices: tuple[Vertex, ...]
    arrows: tuple[Arrow, ...]
    _by_name: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise InputError(f"arrow names must be unique: {names}")
        for a in self.arrows:
            if a.src not in self.vertices or a.tgt not in self.vertices:
                raise InputError(f"arrow {a.name} uses an unknown vertex")
        object.__setattr__(self, "_by_name", {a.name: a for a in self.arrows})

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError as e:
            raise InputError(f"unknown arrow '{name}'") from e

    def has_loop(self, vertex: Vertex) -> bool:
        return any(a.src == vertex and a.tgt == vertex for a in self.arrows)

    @property
    def is_framed(self) -> bool:
        return INF in self.vertices

    def to_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "arrows": [{"name": a.name, "src": str(a.src), "tgt": str(a.tgt)} for a in self.arrows],
        }


def parse_vertex(label: Union[str, int]) -> Vertex:
    if isinstance(label, int):
        return label
    return INF if label in (INF, "∞") else int(label)


def build_cyclic(m: int) -> Quiver:
    """Cycle with vertices 0..m-1 and arrows X_k: k+1 -> k (indices mod m)."""
    if m < 1:
        raise InputError(f"cycle length must be positive, got {m}")
    arrows = tuple(Arrow(f"X{k}", (k + 1) % m, k) for k in range(m))
    return Quiver(tuple(range(m)), arrows)


def _reverse_name(name: str) -> str:
    if name.startswith("X"):
        return "Y" + name[1:]
    if name == "v":
        return "w"
    return name + "*"


def double(quiver: Quiver) -> Quiver:
    """Add a reverse arrow for every arrow (X -> Y, v -> w, otherwise name*)."""
    reverses = tuple(Arrow(_reverse_name(a.name), a.tgt, a.src) for a in quiver.arrows)
    return Quiver(quiver.vertices, quiver.arrows + reverses)


def frame(quiver: Quiver) -> Quiver:
    """Add the vertex inf and one arrow v: 0 -> inf."""
    if quiver.is_framed:
        raise InputError("quiver is already framed")
    return Quiver(quiver.vertices + (INF,), quiver.arrows + (Arrow("v", 0, INF),))


def framed_cyclic(m: int) -> Quiver:
    """Q_inf for the cycle of length m (undoubled)."""
    return frame(build_cyclic(m))


def doubled_framed_cyclic(m: int) -> Quiver:
    return double(frame(build_cyclic(m)))


def framed_dims(n_vec: Sequence[int]) -> dict[Vertex, int]:
    """Dimension vector (1, n_0, ..., n_{m-1}) as a vertex map."""
    dims: dict[Vertex, int] = {INF: 1}
    dims.update({i: int(n) for i, n in enumerate(n_vec)})
    return dims


def _entries(quiver: Quiver, alpha: Mapping[Vertex, int]) -> dict[Vertex, int]:
    if set(alpha) - set(quiver.vertices):
        raise ShapeMismatchError(f"dimension vector has unknown vertices {set(alpha) - set(quiver.vertices)}")
    return {v: int(alpha.get(v, 0)) for v in quiver.vertices}


def tits_form(quiver: Quiver, alpha: Mapping[Vertex, int]) -> int:
    """q(alpha) = sum alpha_i^2 - sum over arrows alpha_src * alpha_tgt."""
    a = _entries(quiver, alpha)
    return sum(x * x for x in a.values()) - sum(a[arr.src] * a[arr.tgt] for arr in quiver.arrows)


def symmetric_pairing(quiver: Quiver, alpha: Mapping[Vertex, int], vertex: Vertex) -> int:
    """(alpha, e_vertex) for the symmetrized Tits form."""
    a = _entries(quiver, alpha)
    value = 2 * a[vertex]
    for arr in quiver.arrows:
        if arr.src == vertex:
            value -= a[arr.tgt]
        if arr.tgt == vertex:
            value -= a[arr.src]
    return value


def _support_connected(quiver: Quiver, a: Mapping[Vertex, int]) -> bool:
    support = {v for v, x in a.items() if x}
    if not support:
        return False
    start = next(iter(support))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for arr in quiver.arrows:
            for u, w in ((arr.src, arr.tgt), (arr.tgt, arr.src)):
                if u == v and w in support and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen == support


def is_positive_root(quiver: Quiver, alpha: Mapping[Vertex, int]) -> bool:
    """
    Decide alpha in Delta(Q)+ by reflecting at loop-free vertices.

    Reflections are applied while some loop-free vertex has (alpha, e_i) > 0.
    A simple root is a (real) root; a vector in the fundamental region with
    connected support is an (imaginary) root.

    Raises:
        InputError: alpha has negative entries or is zero
    """
    a = _entries(quiver, alpha)
    if any(x < 0 for x in a.values()):
        raise InputError("dimension vector has negative entries")
    if not any(a.values()):
        raise InputError("dimension vector is zero")
    while True:
        if not _support_connected(quiver, a):
            return False
        if sum(a.values()) == 1:
            return True
        reflect_at = next(
            (v for v in quiver.vertices
             if not quiver.has_loop(v) and symmetric_pairing(quiver, a, v) > 0),
            None,
        )
        if reflect_at is None:
            return True
        a = dict(a)
        a[reflect_at] -= symmetric_pairing(quiver, a, reflect_at)
        logger.debug(f"reflected at {reflect_at}: {a}")
        if a[reflect_at] < 0:
            return False
        if not any(a.values()):
            return False


def enumerate_positive_roots(quiver: Quiver, bound: int) -> set[tuple[int, ...]]:
    """
    Positive roots with every entry <= bound, entries ordered as quiver.vertices.

    Built upwards: simple roots at loop-free vertices and the fundamental set
    (connected support, (alpha, e_i) <= 0 everywhere) are closed under the
    simple reflections that raise a coordinate without leaving the box.
    """
    vertices = list(quiver.vertices)
    loop_free = [i for i, v in enumerate(vertices) if not quiver.has_loop(v)]

    def as_map(vec: tuple[int, ...]) -> dict[Vertex, int]:
        return dict(zip(vertices, vec))

    roots = {tuple(1 if j == i else 0 for j in range(len(vertices))) for i in loop_free}
    for vec in itertools.product(range(bound + 1), repeat=len(vertices)):
        a = as_map(vec)
        if _support_connected(quiver, a) and all(symmetric_pairing(quiver, a, v) <= 0 for v in vertices):
            roots.add(vec)
    queue = list(roots)
    while queue:
        vec = queue.pop()
        a = as_map(vec)
        for i in loop_free:
            raised = vec[i] - symmetric_pairing(quiver, a, vertices[i])
            if vec[i] < raised <= bound:
                new = vec[:i] + (raised,) + vec[i + 1:]
                if new not in roots:
                    roots.add(new)
                    queue.append(new)
    return roots


def _rational_entries(tau: Sequence) -> list[Fraction]:
    return [as_scalar(t).to_rational() for t in tau]


def is_regular(tau: Sequence, m: int) -> bool:
    """
    Regularity of tau for the cycle of length m.

    For m = 1 this means tau_0 != 0. For m >= 2, with T = tau . delta, tau is
    regular iff T != 0 and (sum of tau over a proper cyclic interval) / T is
    never an integer.
    """
    if len(tau) != m:
        raise ShapeMismatchError(f"tau must have {m} entries, got {len(tau)}")
    values = _rational_entries(tau)
    if m == 1:
        return values[0] != 0
    total = sum(values, Fraction(0))
    if total == 0:
        return False
    for start in range(m):
        partial = Fraction(0)
        for length in range(1, m):
            partial += values[(start + length - 1) % m]
            if (partial / total).denominator == 1:
                return False
    return True


def pairing(lam: Mapping[Vertex, object], alpha: Mapping[Vertex, int]) -> Scalar:
    """lambda . alpha; both maps must cover the same vertices."""
    if set(lam) != set(alpha):
        raise ShapeMismatchError("weight and dimension vector cover different vertices")
    values = {v: x if isinstance(x, Scalar) else as_scalar(x) for v, x in lam.items()}
    m = next(iter(values.values())).m if values else 1
    total = Scalar.zero(m)
    for v, x in values.items():
        total = total + x * alpha[v]
    return total


def lambda_from_tau(tau: Sequence, n_vec: Sequence[int]) -> dict[Vertex, Scalar]:
    """lambda = (-tau . n, tau) on the framed cyclic quiver."""
    if len(tau) != len(n_vec):
        raise ShapeMismatchError("tau and dimension vector have different lengths")
    taus = [t if isinstance(t, Scalar) else as_scalar(t) for t in tau]
    lam: dict[Vertex, Scalar] = {i: t for i, t in enumerate(taus)}
    lam[INF] = -sum((t * n for t, n in zip(taus, n_vec)), Scalar.zero(taus[0].m))
    return lam
