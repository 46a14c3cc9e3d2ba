import logging
from typing import Optional

from hurwitz_composition.composition.config import CompositionConfig
from hurwitz_composition.composition.constructions.base import assemble, guard_size, split_special
from hurwitz_composition.composition.constructions.doubling import amicable_double
from hurwitz_composition.composition.matrix import kron
from hurwitz_composition.composition.system import AmicablePair, FormulaSize, HurwitzSystem
from hurwitz_composition.errors import DomainError, StructuralError

logger = logging.getLogger(__name__)


def full_double(
    base: HurwitzSystem,
    special: int,
    amicable: AmicablePair,
    config: Optional[CompositionConfig] = None,
) -> HurwitzSystem:
    """Combine an ``[r+1, s, n]`` system with amicable ``[p, q, m]``/``[1, q, m]``
    systems into an ``[r+p, sq, nm]`` system.

    The special matrix of ``base`` plays ``B``; the other ``r`` matrices are the
    ``A_j``. With ``C_k`` from ``amicable.first`` and ``D`` the single matrix of
    ``amicable.second`` the output is ``A_j (x) D`` for every ``A_j`` followed
    by ``B (x) C_k`` for every ``C_k``. Amicability is not checked here; when
    ``D`` is not amicable with some ``C_k`` the output fails verification.

    Raises:
        StructuralError: if ``amicable.second`` is not a single-matrix system.
        DomainError: if ``special`` is not a valid index into ``base``.
    """
    if amicable.q != 1:
        raise StructuralError(
            f"full_double needs a [1, q, m] D-system, got q={amicable.q} matrices"
        )
    b_matrix, a_part = split_special(base.matrices, special)
    (d_matrix,) = amicable.second_matrices
    c_system = amicable.first
    expected = FormulaSize(
        r=len(a_part) + c_system.r, s=base.s * c_system.s, n=base.n * c_system.n
    )
    guard_size(expected, config, "full_double")
    logger.debug(
        "Full doubling %s (B = matrix %d) with C-system %s", base.size, special, c_system.size
    )
    matrices = [kron(a_matrix, d_matrix) for a_matrix in a_part]
    matrices.extend(kron(b_matrix, c_matrix) for c_matrix in c_system.matrices)
    return assemble(matrices, expected, "full_double")


def combine(
    system_a: HurwitzSystem,
    system_b: HurwitzSystem,
    special: Optional[int] = None,
    config: Optional[CompositionConfig] = None,
) -> HurwitzSystem:
    """``[r, s, n]`` and ``[r', s', n']`` systems yield an ``[r+r', 2ss', 2nn']`` system.

    ``system_b`` goes through amicable doubling with an empty partner, giving
    amicable ``[r'+1, 2s', 2n']`` and ``[1, 2s', 2n']`` systems. ``full_double``
    then consumes ``system_a`` as an ``[(r-1)+1, s, n]`` system: one matrix
    (the last by default) is ``B`` and the remaining ``r - 1`` are the
    ``A_j``, so the count lands on ``(r - 1) + (r' + 1) = r + r'``.

    The operation is asymmetric: swapping the arguments gives a valid system of
    the same size, not the same matrices.
    """
    if system_a.r < 1 or system_b.r < 1:
        raise DomainError("combine needs two systems with at least one matrix each")
    special = system_a.r if special is None else special
    expected = FormulaSize(
        r=system_a.r + system_b.r, s=2 * system_a.s * system_b.s, n=2 * system_a.n * system_b.n
    )
    guard_size(expected, config, "combine")
    logger.debug("Combining %s with %s", system_a.size, system_b.size)
    pair = amicable_double(AmicablePair(first=system_b), special=1, config=config)
    result = full_double(system_a, special, pair, config=config)
    if result.size != expected:
        raise StructuralError(f"combine produced size {result.size}, expected {expected}")
    return result
