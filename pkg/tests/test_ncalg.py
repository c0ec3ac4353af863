import pytest

from src.algebra.ncalg import (
    FREE_ALPHABET,
    NCElement,
    PathAlgebra,
    commutator_xy,
    enumerate_paths,
    enumerate_words,
    evaluate_element,
    is_composable,
    parse_word,
    preprojective_relation,
    reverse_involution,
    word_end,
    word_operator,
    word_start,
    word_to_str,
)
from src.linalg.matrix import Matrix
from src.quiver.core import INF, doubled_framed_cyclic, lambda_from_tau
from src.utils.errors import ShapeMismatchError


def test_word_parsing():
    assert parse_word("xyx") == ("x", "y", "x")
    assert parse_word("vX0Y1w") == ("v", "X0", "Y1", "w")
    assert parse_word("einf") == ("einf",)
    assert parse_word("") == ()
    assert word_to_str(("X0", "Y0")) == "X0Y0"
    with pytest.raises(ShapeMismatchError):
        parse_word("x-y")


@pytest.mark.parametrize("d", [0, 1, 2, 4])
def test_word_count(d):
    assert len(enumerate_words(FREE_ALPHABET, d)) == 2 ** (d + 1) - 1


def test_words_in_length_lex_order():
    assert enumerate_words(FREE_ALPHABET, 2) == [(), ("x",), ("y",), ("x", "x"), ("x", "y"), ("y", "x"), ("y", "y")]


def test_element_arithmetic():
    bracket = commutator_xy()
    assert bracket == NCElement.from_word("xy") - NCElement.from_word("yx")
    assert (bracket - bracket).is_zero()
    assert (NCElement.from_word("x") * NCElement.from_word("y")) == NCElement.from_word("xy")
    assert bracket.degree == 2
    assert NCElement.zero().degree == -1
    assert reverse_involution(NCElement.from_word("xxy")) == NCElement.from_word("yxx")


def test_reading_order(point_a):
    # x acts first, then y
    op = word_operator(("x", "y"), point_a, 2)
    assert op == point_a.Y @ point_a.X
    value = evaluate_element(NCElement.from_word("xy"), point_a, point_a.v)
    assert value == point_a.Y @ point_a.X @ point_a.v


def test_path_composition():
    q = doubled_framed_cyclic(2)
    assert word_start(q, ("X0",)) == 0
    assert word_end(q, ("X0",)) == 1
    assert is_composable(q, ("X0", "X1"))
    assert not is_composable(q, ("X0", "X0"))
    alg = PathAlgebra(q)
    assert alg.mul(alg.path("X0"), alg.path("X1")) == alg.path("X0X1")
    assert alg.mul(alg.path("X0"), alg.path("X0")).is_zero()
    assert alg.mul(alg.vertex(0), alg.path("X0")) == alg.path("X0")
    with pytest.raises(ShapeMismatchError):
        alg.path("X0X0")


def test_closed_paths_at_zero():
    q = doubled_framed_cyclic(1)
    names = ["X0", "Y0"]
    paths = enumerate_paths(q, 0, 2, end=0, arrows=names)
    assert paths == [("e0",), ("X0",), ("Y0",), ("X0", "X0"), ("X0", "Y0"), ("Y0", "X0"), ("Y0", "Y0")]


def test_paths_through_inf():
    q = doubled_framed_cyclic(1)
    paths = enumerate_paths(q, INF, 2, end=INF)
    assert ("einf",) in paths
    assert ("v", "w") in paths


def test_preprojective_relation_at_zero(point_a):
    q = doubled_framed_cyclic(1)
    rel = preprojective_relation(q, lambda_from_tau([1], [2]), 0)
    # lambda_0 e_0 + Y0 X0 - X0 Y0 + w v, in reading order
    assert rel.terms[("e0",)] == 1
    assert rel.terms[("Y0", "X0")] == 1
    assert rel.terms[("X0", "Y0")] == -1
    assert rel.terms[("w", "v")] == 1
    framed = point_a.to_framed()
    assert evaluate_element(rel, framed, Matrix.identity(2)).is_zero()
