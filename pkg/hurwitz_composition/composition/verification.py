import logging
from typing import Iterator, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from hurwitz_composition.composition.matrix import IntMatrix, identity, multiply, transpose, add
from hurwitz_composition.composition.system import AmicablePair, HurwitzSystem, check_system_shapes
from hurwitz_composition.errors import StructuralError

logger = logging.getLogger(__name__)

Equation = Literal["norm", "anticommute", "amicable"]


class EquationFailure(BaseModel):
    equation: Equation
    indices: Tuple[int, ...]
    system: Optional[Literal["first", "second", "cross"]] = None
    message: str


class VerificationReport(BaseModel):
    """Outcome of checking a system against the Hurwitz (or amicability) equations.

    ``equation``/``indices``/``message`` describe the first failure, with
    1-based matrix indices in lexicographic ``(i, j)`` order. ``failures``
    holds every failure when verification ran with ``all_failures=True``.
    """

    passed: bool
    equation: Optional[Equation] = None
    indices: Optional[Tuple[int, ...]] = None
    system: Optional[Literal["first", "second", "cross"]] = None
    message: str = ""
    failures: List[EquationFailure] = Field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def from_failures(cls, failures: List[EquationFailure], collect_all: bool) -> "VerificationReport":
        if not failures:
            return cls(passed=True, message="all equations hold")
        first = failures[0]
        return cls(
            passed=False,
            equation=first.equation,
            indices=first.indices,
            system=first.system,
            message=first.message,
            failures=failures if collect_all else [],
        )


def _gram(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return multiply(transpose(a), b)


def _hurwitz_failures(
    matrices: Tuple[IntMatrix, ...], label: Optional[Literal["first", "second"]] = None
) -> Iterator[EquationFailure]:
    """Yield failing equations in lexicographic ``(i, j)`` order, ``i <= j``."""
    if not matrices:
        return
    unit = identity(matrices[0].cols)
    prefix = f"{label} system: " if label else ""
    for i, a_i in enumerate(matrices):
        for j in range(i, len(matrices)):
            if i == j:
                if _gram(a_i, a_i) != unit:
                    yield EquationFailure(
                        equation="norm",
                        indices=(i + 1,),
                        system=label,
                        message=f"{prefix}A{i + 1}^T A{i + 1} != 1_{unit.rows}",
                    )
                continue
            a_j = matrices[j]
            total = add(_gram(a_i, a_j), _gram(a_j, a_i))
            if np.any(total.entries):
                yield EquationFailure(
                    equation="anticommute",
                    indices=(i + 1, j + 1),
                    system=label,
                    message=f"{prefix}A{i + 1}^T A{j + 1} + A{j + 1}^T A{i + 1} != 0",
                )


def _collect(failures: Iterator[EquationFailure], all_failures: bool) -> List[EquationFailure]:
    if all_failures:
        return list(failures)
    first = next(failures, None)
    return [first] if first is not None else []


def verify_hurwitz(system: HurwitzSystem, all_failures: bool = False) -> VerificationReport:
    """Check ``A_i^T A_i = 1_s`` and ``A_i^T A_j + A_j^T A_i = 0`` for ``i != j``.

    Args:
        system: The candidate system.
        all_failures: Collect every failing equation instead of stopping at
            the first one.

    Returns:
        A ``VerificationReport``; failures are reported, never raised.

    Raises:
        StructuralError: if the matrices do not match the declared size.
    """
    check_system_shapes(system.size, system.matrices)
    logger.debug("Verifying Hurwitz equations for system of size %s", system.size)
    report = VerificationReport.from_failures(
        _collect(_hurwitz_failures(system.matrices), all_failures), all_failures
    )
    if not report.passed:
        logger.debug("Verification failed: %s", report.message)
    return report


def _amicable_failures(pair: AmicablePair) -> Iterator[EquationFailure]:
    yield from _hurwitz_failures(pair.first.matrices, "first")
    yield from _hurwitz_failures(pair.second_matrices, "second")
    for i, a_i in enumerate(pair.first.matrices):
        for k, b_k in enumerate(pair.second_matrices):
            if _gram(a_i, b_k) != _gram(b_k, a_i):
                yield EquationFailure(
                    equation="amicable",
                    indices=(i + 1, k + 1),
                    system="cross",
                    message=f"A{i + 1}^T B{k + 1} != B{k + 1}^T A{i + 1}",
                )


def verify_amicable(pair: AmicablePair, all_failures: bool = False) -> VerificationReport:
    """Check both members of ``pair`` and the cross condition ``A_i^T B_k = B_k^T A_i``.

    With an empty second system this is exactly ``verify_hurwitz`` of the
    first system.
    """
    check_system_shapes(pair.first.size, pair.first.matrices)
    if pair.second is not None:
        check_system_shapes(pair.second.size, pair.second.matrices)
        if (pair.first.s, pair.first.n) != (pair.second.s, pair.second.n):
            raise StructuralError(
                f"amicable members must share (s, n): {pair.first.size} vs {pair.second.size}"
            )
    logger.debug("Verifying amicable pair p=%d q=%d", pair.p, pair.q)
    return VerificationReport.from_failures(
        _collect(_amicable_failures(pair), all_failures), all_failures
    )
