import logging
from typing import List, Optional

from hurwitz_composition.composition.config import CompositionConfig
from hurwitz_composition.composition.constructions.base import (
    E, H, J, S, assemble, guard_size, split_special,
)
from hurwitz_composition.composition.matrix import kron
from hurwitz_composition.composition.system import AmicablePair, FormulaSize, HurwitzSystem

logger = logging.getLogger(__name__)


def double(
    system: HurwitzSystem, special: int = 1, config: Optional[CompositionConfig] = None
) -> HurwitzSystem:
    """Doubling: an ``[r, s, n]`` system yields an ``[r+1, 2s, 2n]`` system.

    With ``A`` the special matrix the output is ``A (x) E``, ``A (x) J``, then
    ``A_j (x) H`` for the remaining matrices in input order.

    Args:
        system: Input system with at least one matrix.
        special: 1-based index of the matrix that gets special treatment.
        config: Size cap source.
    """
    special_matrix, rest = split_special(system.matrices, special)
    expected = FormulaSize(r=system.r + 1, s=2 * system.s, n=2 * system.n)
    guard_size(expected, config, "double")
    logger.debug("Doubling %s with special matrix %d", system.size, special)
    matrices = [kron(special_matrix, E), kron(special_matrix, J)]
    matrices.extend(kron(matrix, H) for matrix in rest)
    return assemble(matrices, expected, "double")


def doubling_ladder(
    system: HurwitzSystem, steps: int, special: int = 1, config: Optional[CompositionConfig] = None
) -> List[HurwitzSystem]:
    """Apply ``double`` ``steps`` times and return every intermediate output."""
    ladder: List[HurwitzSystem] = []
    current = system
    for _ in range(steps):
        current = double(current, special, config)
        ladder.append(current)
    return ladder


def amicable_double(
    pair: AmicablePair, special: int = 1, config: Optional[CompositionConfig] = None
) -> AmicablePair:
    """Amicable doubling: amicable ``[p, s, n]``/``[q, s, n]`` yield amicable
    ``[p+1, 2s, 2n]``/``[q+1, 2s, 2n]``.

    First system: ``A (x) E``, ``A (x) J``, ``A_j (x) H`` for the remaining
    ``A_j``. Second system: ``A (x) S``, then ``B_k (x) H`` for every ``B_k``.
    """
    special_matrix, rest = split_special(pair.first.matrices, special)
    first_size = FormulaSize(r=pair.p + 1, s=2 * pair.first.s, n=2 * pair.first.n)
    second_size = FormulaSize(r=pair.q + 1, s=first_size.s, n=first_size.n)
    guard_size(first_size, config, "amicable_double")
    logger.debug("Amicable doubling of p=%d q=%d pair at %s", pair.p, pair.q, pair.first.size)

    first = [kron(special_matrix, E), kron(special_matrix, J)]
    first.extend(kron(matrix, H) for matrix in rest)
    second = [kron(special_matrix, S)]
    second.extend(kron(matrix, H) for matrix in pair.second_matrices)
    return AmicablePair(
        first=assemble(first, first_size, "amicable_double"),
        second=assemble(second, second_size, "amicable_double"),
    )
