import logging
from typing import Optional, Sequence

from hurwitz_composition.composition.config import CompositionConfig, resolve_config
from hurwitz_composition.composition.matrix import IntMatrix
from hurwitz_composition.composition.system import FormulaSize, HurwitzSystem
from hurwitz_composition.errors import DomainError, SizeCapExceeded, StructuralError

logger = logging.getLogger(__name__)

# 2x2 sign patterns of the doubling constructions
E = IntMatrix.from_rows([[1, 0], [0, 1]])
J = IntMatrix.from_rows([[0, 1], [-1, 0]])
H = IntMatrix.from_rows([[1, 0], [0, -1]])
S = IntMatrix.from_rows([[0, 1], [1, 0]])


def check_special(special: int, count: int, what: str = "special") -> int:
    """Validate a 1-based matrix index and return it 0-based."""
    if count < 1:
        raise DomainError(f"{what} index needs a system with at least one matrix")
    if isinstance(special, bool) or not isinstance(special, int) or not 1 <= special <= count:
        raise DomainError(f"{what} index must be in [1, {count}], got {special!r}")
    return special - 1


def split_special(
    matrices: Sequence[IntMatrix], special: int, what: str = "special"
) -> tuple[IntMatrix, list[IntMatrix]]:
    """Return the designated matrix and the others in input order."""
    index = check_special(special, len(matrices), what)
    rest = [matrix for position, matrix in enumerate(matrices) if position != index]
    return matrices[index], rest


def guard_size(size: FormulaSize, config: Optional[CompositionConfig], operation: str) -> None:
    """Refuse to build an output whose row count is above the size cap."""
    cap = resolve_config(config).size_cap
    if size.n > cap:
        raise SizeCapExceeded(f"{operation} output rows", size.n, cap)


def guard_exponent(
    exponent: int, rows: int, config: Optional[CompositionConfig], operation: str
) -> None:
    """Refuse an output of ``rows * 2^exponent`` rows above the size cap.

    Bit lengths are compared first, so a huge exponent never builds ``2^exponent``.
    """
    cap = resolve_config(config).size_cap
    length = exponent + rows.bit_length()
    if length < cap.bit_length():
        return
    if length > cap.bit_length() + 64:
        requested = f"2^{exponent}" if rows == 1 else f"{rows} * 2^{exponent}"
        raise SizeCapExceeded(f"{operation} output rows", requested, cap)
    if rows << exponent > cap:
        raise SizeCapExceeded(f"{operation} output rows", rows << exponent, cap)


def assemble(matrices: Sequence[IntMatrix], expected: FormulaSize, operation: str) -> HurwitzSystem:
    """Wrap construction output, asserting the size its statement promises."""
    system = HurwitzSystem.from_matrices(list(matrices))
    if system.size != expected:
        raise StructuralError(f"{operation} produced size {system.size}, expected {expected}")
    logger.debug("%s produced a system of size %s", operation, system.size)
    return system
