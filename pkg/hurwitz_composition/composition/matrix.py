"""Exact integer rectangular matrices.

Entries are stored densely, row-major, as read-only ``int64`` numpy arrays.
Every operation that can grow magnitudes checks a worst-case bound before
computing, so results never wrap silently: anything that could leave the
signed 64-bit range raises ``MatrixOverflowError`` instead.

Kronecker convention
--------------------
``kron(M, T)`` follows the block layout where each block is a scaled copy of
the LEFT operand::

    kron(M, [[a, b], [c, d]]) == [[a*M, b*M], [c*M, d*M]]

This is operand-swapped relative to ``numpy.kron`` (``kron(M, T)`` equals
``numpy.kron(T, M)``). Every construction in this package indexes rows and
columns with this layout.
"""

from typing import Iterable, Sequence

import numpy as np

from hurwitz_composition.errors import DomainError, MatrixOverflowError, StructuralError

INT64_MAX = int(np.iinfo(np.int64).max)


def _abs_bound(values: np.ndarray) -> int:
    if values.size == 0:
        return 0
    # Python ints: abs(int64 min) does not fit in int64
    return max(int(values.max()), -int(values.min()))


def _ensure_fits(bound: int, operation: str) -> None:
    if bound > INT64_MAX:
        raise MatrixOverflowError(
            f"{operation}: worst-case magnitude {bound} exceeds the int64 range"
        )


class IntMatrix:
    """Immutable exact-integer matrix with at least one row and one column."""

    __slots__ = ("_entries",)

    def __init__(self, entries: np.ndarray):
        array = np.asarray(entries)
        if array.ndim != 2:
            raise StructuralError(f"matrix entries must be 2-dimensional, got ndim={array.ndim}")
        rows, cols = array.shape
        if rows < 1 or cols < 1:
            raise StructuralError(f"matrix must have positive dimensions, got {rows}x{cols}")
        if array.dtype == np.int64:
            array = array.copy()
        elif array.dtype == object or array.dtype == np.uint64:
            # python ints or uint64 may not fit
            _ensure_fits(max(abs(int(v)) for v in array.flat), "IntMatrix")
            array = array.astype(np.int64)
        elif array.dtype.kind in "iu":
            array = array.astype(np.int64)
        else:
            raise StructuralError(f"matrix entries must be integers, got dtype {array.dtype}")
        array.setflags(write=False)
        self._entries = array

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        if not rows or not rows[0]:
            raise StructuralError("matrix must have at least one row and one column")
        width = len(rows[0])
        for index, row in enumerate(rows):
            if len(row) != width:
                raise StructuralError(
                    f"ragged matrix: row {index} has {len(row)} entries, expected {width}"
                )
            for value in row:
                if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                    raise StructuralError(f"matrix entries must be integers, got {value!r}")
        return cls(np.array(rows, dtype=object))

    @property
    def entries(self) -> np.ndarray:
        """Read-only ``int64`` view of the entries."""
        return self._entries

    @property
    def rows(self) -> int:
        return int(self._entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self._entries.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def to_rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self._entries]

    def max_abs(self) -> int:
        return _abs_bound(self._entries)

    def is_signed_unit(self) -> bool:
        """True when every entry lies in {-1, 0, 1}."""
        return self.max_abs() <= 1

    def __getitem__(self, index: tuple[int, int]) -> int:
        return int(self._entries[index])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._entries, other._entries))

    def __hash__(self) -> int:
        return hash((self.shape, self._entries.tobytes()))

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_rows()})"


def identity(n: int) -> IntMatrix:
    if n < 1:
        raise DomainError(f"identity size must be positive, got {n}")
    return IntMatrix(np.eye(n, dtype=np.int64))


def zeros(rows: int, cols: int) -> IntMatrix:
    if rows < 1 or cols < 1:
        raise DomainError(f"matrix dimensions must be positive, got {rows}x{cols}")
    return IntMatrix(np.zeros((rows, cols), dtype=np.int64))


def transpose(m: IntMatrix) -> IntMatrix:
    return IntMatrix(m.entries.T)


def negate(m: IntMatrix) -> IntMatrix:
    _ensure_fits(m.max_abs(), "negate")
    return IntMatrix(-m.entries)


def add(m: IntMatrix, n: IntMatrix) -> IntMatrix:
    if m.shape != n.shape:
        raise StructuralError(f"cannot add {m.rows}x{m.cols} and {n.rows}x{n.cols} matrices")
    _ensure_fits(m.max_abs() + n.max_abs(), "add")
    return IntMatrix(m.entries + n.entries)


def multiply(m: IntMatrix, n: IntMatrix) -> IntMatrix:
    if m.cols != n.rows:
        raise StructuralError(
            f"cannot multiply {m.rows}x{m.cols} by {n.rows}x{n.cols}: inner dimensions differ"
        )
    # every partial sum is bounded by inner * max|m| * max|n|
    _ensure_fits(m.cols * m.max_abs() * n.max_abs(), "multiply")
    return IntMatrix(m.entries @ n.entries)


def kron(m: IntMatrix, t: IntMatrix) -> IntMatrix:
    """Kronecker product with block (a, b) equal to ``t[a][b] * m``."""
    _ensure_fits(m.max_abs() * t.max_abs(), "kron")
    return IntMatrix(np.kron(t.entries, m.entries))


def block(grid: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
    """Assemble a matrix from a rectangular grid of blocks.

    Blocks in the same grid row must share a row count, and blocks in the same
    grid column must share a column count.
    """
    if not grid or not grid[0]:
        raise StructuralError("block grid must be non-empty")
    width = len(grid[0])
    for index, grid_row in enumerate(grid):
        if len(grid_row) != width:
            raise StructuralError(f"block grid row {index} has {len(grid_row)} blocks, expected {width}")
    for a, grid_row in enumerate(grid):
        for b, piece in enumerate(grid_row):
            if piece.rows != grid_row[0].rows or piece.cols != grid[0][b].cols:
                raise StructuralError(f"block ({a}, {b}) has incompatible shape {piece.shape}")
    return IntMatrix(np.block([[piece.entries for piece in grid_row] for grid_row in grid]))


def all_signed_unit(matrices: Iterable[IntMatrix]) -> bool:
    return all(matrix.is_signed_unit() for matrix in matrices)
