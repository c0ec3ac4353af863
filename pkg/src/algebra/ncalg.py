"""Free algebra C<x,y> and path algebras of doubled framed quivers.

Words are tuples of letters. Over the free algebra the letters are "x" and
"y"; over a path algebra they are arrow names, with "e0", "e1", ..., "einf"
standing for trivial paths. Letters act on representations in reading
order: the matrix of the first letter is applied first.
"""

import itertools
import re
from typing import Iterable, Mapping, Optional, Protocol, Sequence, Union

from src.field.scalar import Scalar, as_scalar
from src.linalg.matrix import Matrix
from src.quiver.core import INF, Quiver, Vertex, parse_vertex
from src.utils.errors import ShapeMismatchError

Word = tuple[str, ...]
FREE_ALPHABET = ("x", "y")

_TOKEN = re.compile(r"einf|e\d+|[A-Za-z]\d*\*?")


class Representation(Protocol):
    """Anything that assigns a matrix to each letter."""

    def matrix_for(self, letter: str) -> Matrix: ...


def parse_word(text: str) -> Word:
    """Split a serialized word ("xyx", "X0Y0", "vX0w") into letters."""
    letters = tuple(_TOKEN.findall(text))
    if "".join(letters) != text:
        raise ShapeMismatchError(f"cannot parse word '{text}'")
    return letters


def word_to_str(word: Word) -> str:
    return "".join(word)


def is_idempotent_letter(letter: str) -> bool:
    return letter.startswith("e")


def idempotent_letter(vertex: Vertex) -> str:
    return f"e{vertex}"


def idempotent_vertex(letter: str) -> Vertex:
    return parse_vertex(letter[1:])


def path_length(word: Word) -> int:
    return sum(1 for letter in word if not is_idempotent_letter(letter))


def length_lex_key(word: Word):
    return (path_length(word), word)


class NCElement:
    """Finite linear combination of words with Scalar coefficients."""

    __slots__ = ("terms", "m")

    def __init__(self, terms: Optional[Mapping[Word, object]] = None, m: int = 1):
        self.m = m
        self.terms: dict[Word, Scalar] = {}
        for word, coeff in (terms or {}).items():
            c = as_scalar(coeff, m) if not isinstance(coeff, Scalar) else coeff
            if c:
                self.terms[tuple(word)] = c

    @classmethod
    def from_word(cls, word: Union[Word, str], coeff=1, m: int = 1) -> "NCElement":
        w = parse_word(word) if isinstance(word, str) else tuple(word)
        return cls({w: coeff}, m)

    @classmethod
    def one(cls, m: int = 1) -> "NCElement":
        return cls({(): 1}, m)

    @classmethod
    def zero(cls, m: int = 1) -> "NCElement":
        return cls({}, m)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((path_length(w) for w in self.terms), default=-1)

    def items(self) -> list[tuple[Word, Scalar]]:
        """Terms in length-lex order."""
        return sorted(self.terms.items(), key=lambda kv: length_lex_key(kv[0]))

    def _combine(self, other: "NCElement", sign: int) -> "NCElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c * sign if w in out else c * sign
        return NCElement(out, self.m)

    def __add__(self, other: "NCElement") -> "NCElement":
        return self._combine(other, 1)

    def __sub__(self, other: "NCElement") -> "NCElement":
        return self._combine(other, -1)

    def __neg__(self) -> "NCElement":
        return NCElement({w: -c for w, c in self.terms.items()}, self.m)

    def scale(self, s) -> "NCElement":
        s = as_scalar(s, self.m) if not isinstance(s, Scalar) else s
        return NCElement({w: s * c for w, c in self.terms.items()}, self.m)

    def __mul__(self, other):
        """Concatenation product in the free algebra (or scaling)."""
        if not isinstance(other, NCElement):
            return self.scale(other)
        out: dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out[w] + c1 * c2 if w in out else c1 * c2
        return NCElement(out, self.m)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, NCElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{word_to_str(w) or '1'}" for w, c in self.items())

    def to_dict(self) -> dict:
        return {"terms": [{"word": word_to_str(w), "coeff": c.to_dict()} for w, c in self.items()]}

    @classmethod
    def from_dict(cls, data: dict, m: int = 1) -> "NCElement":
        terms: dict[Word, Scalar] = {}
        for t in data["terms"]:
            c = Scalar.from_dict(t["coeff"])
            m = c.m
            terms[parse_word(t["word"])] = c
        return cls(terms, m)


def commutator_xy(m: int = 1) -> NCElement:
    """[x, y] = xy - yx."""
    return NCElement({("x", "y"): 1, ("y", "x"): -1}, m)


def reverse_involution(p: NCElement) -> NCElement:
    """Anti-involution fixing x and y: every word is reversed."""
    return NCElement({tuple(reversed(w)): c for w, c in p.terms.items()}, p.m)


def evaluate_on_vector(word: Word, rep: Representation, start: Matrix) -> Matrix:
    """
    Apply letter matrices in reading order: u_k = M(letter_k) @ u_(k-1).

    Raises:
        ShapeMismatchError: if a letter matrix does not fit the current vector
    """
    u = start
    for letter in word:
        M = rep.matrix_for(letter)
        if M.cols != u.rows:
            raise ShapeMismatchError(
                f"letter '{letter}' ({M.rows}x{M.cols}) cannot act on a vector of size {u.rows}"
            )
        u = M @ u
    return u


def evaluate_element(p: NCElement, rep: Representation, start: Matrix) -> Matrix:
    """Linear extension of evaluate_on_vector; the zero element gives None-safe zeros."""
    result: Optional[Matrix] = None
    for w, c in p.terms.items():
        term = evaluate_on_vector(w, rep, start) * c
        result = term if result is None else result + term
    if result is None:
        return Matrix.zeros(start.rows, start.cols, start.m)
    return result


def word_operator(word: Word, rep: Representation, size: int, m: int = 1) -> Matrix:
    """Matrix of the whole word acting in reading order, M(a_k) ... M(a_1)."""
    op = Matrix.identity(size, m)
    for letter in word:
        op = rep.matrix_for(letter) @ op
    return op


def enumerate_words(alphabet: Sequence[str], max_len: int) -> list[Word]:
    """All words of length <= max_len in length-lex order; 2^(d+1)-1 for {x,y}."""
    words: list[Word] = []
    for length in range(max_len + 1):
        words.extend(itertools.product(alphabet, repeat=length))
    return words


# -- path algebra ---------------------------------------------------------


def word_start(quiver: Quiver, word: Word) -> Optional[Vertex]:
    """Vertex the first letter acts on (None for the unit)."""
    if not word:
        return None
    first = word[0]
    if is_idempotent_letter(first):
        return idempotent_vertex(first)
    return quiver.arrow(first).tgt


def word_end(quiver: Quiver, word: Word) -> Optional[Vertex]:
    if not word:
        return None
    last = word[-1]
    if is_idempotent_letter(last):
        return idempotent_vertex(last)
    return quiver.arrow(last).src


def is_composable(quiver: Quiver, word: Word) -> bool:
    """Consecutive letters a_i, a_(i+1) need src(a_i) = tgt(a_(i+1))."""
    for a, b in zip(word, word[1:]):
        if word_end(quiver, (a,)) != word_start(quiver, (b,)):
            return False
    return True


def enumerate_paths(quiver: Quiver, start: Vertex, max_len: int,
                    end: Optional[Vertex] = None, arrows: Optional[Iterable[str]] = None) -> list[Word]:
    """
    Composable paths leaving start, by length then lexicographically.

    Args:
        quiver: The (usually doubled framed) quiver
        start: Vertex the path acts on first
        max_len: Maximal number of arrows
        end: Keep only paths ending here
        arrows: Restrict to these arrow names

    Returns:
        Words; the length-0 path is the trivial path e_start
    """
    names = sorted(arrows if arrows is not None else (a.name for a in quiver.arrows))
    by_target: dict[Vertex, list[str]] = {}
    for name in names:
        by_target.setdefault(quiver.arrow(name).tgt, []).append(name)

    layer: list[tuple[Word, Vertex]] = [((), start)]
    out: list[Word] = []
    if end is None or end == start:
        out.append((idempotent_letter(start),))
    for _ in range(max_len):
        next_layer = []
        for word, at in layer:
            for name in by_target.get(at, []):
                next_layer.append((word + (name,), quiver.arrow(name).src))
        next_layer.sort(key=lambda item: item[0])
        out.extend(w for w, v in next_layer if end is None or v == end)
        layer = next_layer
    return out


class PathAlgebra:
    """Multiplication of path words in the path algebra of a quiver."""

    def __init__(self, quiver: Quiver, m: int = 1):
        self.quiver = quiver
        self.m = m

    def normalize(self, word: Word) -> Word:
        """Drop trivial-path letters from words that contain arrows."""
        arrows_only = tuple(l for l in word if not is_idempotent_letter(l))
        return arrows_only if arrows_only else word[:1]

    def mult_words(self, p: Word, q: Word) -> Optional[Word]:
        """Product of two paths, or None when they do not compose."""
        if not p:
            return q
        if not q:
            return p
        if word_end(self.quiver, p) != word_start(self.quiver, q):
            return None
        return self.normalize(p + q)

    def mul(self, a: NCElement, b: NCElement) -> NCElement:
        out: dict[Word, Scalar] = {}
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                w = self.mult_words(w1, w2)
                if w is None:
                    continue
                out[w] = out[w] + c1 * c2 if w in out else c1 * c2
        return NCElement(out, a.m)

    def product(self, *elements: NCElement) -> NCElement:
        result = elements[0]
        for e in elements[1:]:
            result = self.mul(result, e)
        return result

    def path(self, text: Union[str, Word], coeff=1) -> NCElement:
        word = parse_word(text) if isinstance(text, str) else tuple(text)
        if not is_composable(self.quiver, word):
            raise ShapeMismatchError(f"path {word_to_str(word)} is not composable")
        return NCElement({self.normalize(word): coeff}, self.m)

    def vertex(self, v: Vertex, coeff=1) -> NCElement:
        return NCElement({(idempotent_letter(v),): coeff}, self.m)

    def unit(self) -> NCElement:
        return NCElement({(idempotent_letter(v),): 1 for v in self.quiver.vertices}, self.m)


def cycle_arrow_names(quiver: Quiver) -> list[str]:
    """Arrows with neither end at the framing vertex."""
    return sorted(a.name for a in quiver.arrows if INF not in (a.src, a.tgt))


def preprojective_relation(quiver: Quiver, lam: Mapping[Vertex, object], vertex: Vertex,
                           m_field: int = 1) -> NCElement:
    """
    Deformed preprojective relation at a cycle vertex k, in reading order:

        lambda_k e_k + Y_(k-1) X_(k-1) - X_k Y_k  (+ w v at vertex 0 when framed)
    """
    cyc = len([v for v in quiver.vertices if v != INF])
    k = int(vertex)
    prev = (k - 1) % cyc
    alg = PathAlgebra(quiver, m_field)
    rel = alg.vertex(k, as_scalar(lam[k], m_field))
    rel = rel + alg.path((f"Y{prev}", f"X{prev}")) - alg.path((f"X{k}", f"Y{k}"))
    if k == 0 and quiver.is_framed:
        rel = rel + alg.path(("w", "v"))
    return rel
