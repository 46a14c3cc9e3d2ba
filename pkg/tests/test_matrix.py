import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from hurwitz_composition.composition.matrix import (
    IntMatrix, add, all_signed_unit, block, identity, kron, multiply, negate, transpose, zeros,
)
from hurwitz_composition.errors import DomainError, MatrixOverflowError, StructuralError


def small_matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda shape: arrays(np.int64, shape, elements=st.integers(-50, 50))
    ).map(IntMatrix)


def test_complex_unit_is_orthogonal():
    a2 = IntMatrix.from_rows([[0, -1], [1, 0]])
    assert multiply(transpose(a2), a2) == identity(2)


def test_kron_scales_left_operand_into_blocks():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    t = IntMatrix.from_rows([[0, 1], [-1, 0]])
    expected = IntMatrix.from_rows([
        [0, 0, 1, 2],
        [0, 0, 3, 4],
        [-1, -2, 0, 0],
        [-3, -4, 0, 0],
    ])
    assert kron(m, t) == expected


def test_kron_with_scalar_one_is_identity_map():
    m = IntMatrix.from_rows([[1, -2, 3]])
    assert kron(m, identity(1)) == m
    assert kron(identity(1), m) == m


def test_block_assembles_grid():
    one = identity(1)
    two = IntMatrix.from_rows([[2]])
    assert block([[one, two], [two, one]]) == IntMatrix.from_rows([[1, 2], [2, 1]])


def test_block_rejects_mismatched_shapes():
    with pytest.raises(StructuralError):
        block([[identity(1), identity(2)]])


def test_multiply_rejects_inner_dimension_mismatch():
    with pytest.raises(StructuralError):
        multiply(identity(2), identity(3))


def test_add_rejects_shape_mismatch():
    with pytest.raises(StructuralError):
        add(identity(2), zeros(2, 3))


def test_multiply_refuses_possible_overflow():
    big = IntMatrix(np.array([[2**62]], dtype=np.int64))
    with pytest.raises(MatrixOverflowError):
        multiply(big, big)


def test_kron_refuses_possible_overflow():
    big = IntMatrix(np.array([[2**32]], dtype=np.int64))
    with pytest.raises(MatrixOverflowError):
        kron(big, big)


def test_negate_refuses_int64_min():
    with pytest.raises(MatrixOverflowError):
        negate(IntMatrix(np.array([[np.iinfo(np.int64).min]], dtype=np.int64)))


def test_from_rows_rejects_out_of_range_ints():
    with pytest.raises(MatrixOverflowError):
        IntMatrix.from_rows([[2**70]])


@pytest.mark.parametrize(
    "rows",
    [
        [],
        [[]],
        [[1, 2], [3]],
        [[True, 0]],
        [[1.5]],
    ],
)
def test_from_rows_rejects_malformed_input(rows):
    with pytest.raises(StructuralError):
        IntMatrix.from_rows(rows)


def test_float_arrays_are_rejected():
    with pytest.raises(StructuralError):
        IntMatrix(np.ones((2, 2)))


def test_entries_are_read_only():
    m = identity(2)
    with pytest.raises(ValueError):
        m.entries[0, 0] = 5


def test_constructor_copies_its_input():
    source = np.eye(2, dtype=np.int64)
    m = IntMatrix(source)
    source[0, 0] = 7
    assert m[0, 0] == 1


@pytest.mark.parametrize("n", [0, -3])
def test_identity_needs_positive_size(n):
    with pytest.raises(DomainError):
        identity(n)


def test_signed_unit_detection():
    assert all_signed_unit([identity(3), negate(identity(3))])
    assert not IntMatrix.from_rows([[2, 0]]).is_signed_unit()


def test_equal_matrices_hash_equal():
    assert hash(IntMatrix.from_rows([[1, 0]])) == hash(IntMatrix(np.array([[1, 0]])))
    assert IntMatrix.from_rows([[1, 0]]) != IntMatrix.from_rows([[1], [0]])


@given(small_matrices())
def test_transpose_is_an_involution(m):
    assert transpose(transpose(m)) == m


@given(small_matrices())
def test_identity_is_neutral(m):
    assert multiply(identity(m.rows), m) == m
    assert multiply(m, identity(m.cols)) == m


@given(small_matrices(), small_matrices())
def test_transpose_reverses_products(a, b):
    b = IntMatrix(np.resize(b.entries, (a.cols, b.cols)))
    assert transpose(multiply(a, b)) == multiply(transpose(b), transpose(a))


# (rows of a, cols of a = rows of c, cols of c)
MIXED_PRODUCT_SHAPES = [(2, 2, 2), (2, 3, 2), (3, 2, 3), (2, 3, 3)]


@st.composite
def mixed_product_operands(draw):
    """``(a, b, c, d)`` with ``a.cols == c.rows`` and ``b.cols == d.rows``."""
    a_rows, inner_a, c_cols = draw(st.sampled_from(MIXED_PRODUCT_SHAPES))
    b_rows, inner_b, d_cols = draw(st.sampled_from(MIXED_PRODUCT_SHAPES))
    a = draw(small_matrices(st.just(a_rows), st.just(inner_a)))
    c = draw(small_matrices(st.just(inner_a), st.just(c_cols)))
    b = draw(small_matrices(st.just(b_rows), st.just(inner_b)))
    d = draw(small_matrices(st.just(inner_b), st.just(d_cols)))
    return a, b, c, d


@settings(max_examples=1000)
@given(mixed_product_operands())
def test_kron_mixed_product(operands):
    a, b, c, d = operands
    assert multiply(kron(a, b), kron(c, d)) == kron(multiply(a, c), multiply(b, d))


@settings(max_examples=1000)
@given(small_matrices(st.just(2), st.just(3)), small_matrices(st.just(2), st.just(3)),
       small_matrices(st.just(3), st.just(2)), small_matrices(st.just(3), st.just(2)))
def test_kron_mixed_product_two_by_three(a, b, c, d):
    assert multiply(kron(a, b), kron(c, d)) == kron(multiply(a, c), multiply(b, d))


@given(small_matrices())
def test_rows_round_trip(m):
    assert IntMatrix.from_rows(m.to_rows()) == m


@given(small_matrices(), small_matrices())
def test_transpose_distributes_over_kron(a, b):
    assert transpose(kron(a, b)) == kron(transpose(a), transpose(b))


@given(small_matrices(), small_matrices(), small_matrices())
def test_kron_is_associative(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@given(small_matrices(st.just(3), st.just(3)), small_matrices(st.just(3), st.just(3)),
       small_matrices(st.just(3), st.just(3)))
def test_multiply_is_associative(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
