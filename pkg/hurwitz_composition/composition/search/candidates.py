"""Complete pools of integer matrices with ``A^T A = 1_s``.

Over the integers ``A^T A = 1_s`` forces every column to be a signed standard
basis vector and distinct columns to use distinct rows, so the pool for
``(s, n)`` is exactly the signed injections of ``s`` columns into ``n`` rows:
``2^s * n! / (n - s)!`` matrices. Searching the pool is exhaustive for integer
formulas; it says nothing about formulas over other fields.
"""

import itertools
import logging
from math import perm
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from hurwitz_composition.composition.config import CompositionConfig, resolve_config
from hurwitz_composition.composition.matrix import IntMatrix
from hurwitz_composition.errors import DomainError, SizeCapExceeded

logger = logging.getLogger(__name__)


class CandidatePool(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    s: int
    n: int
    candidates: Tuple[IntMatrix, ...]

    def __len__(self) -> int:
        return len(self.candidates)

    def stacked(self) -> np.ndarray:
        """All candidates as one ``(len, n, s)`` array."""
        if not self.candidates:
            return np.zeros((0, self.n, self.s), dtype=np.int64)
        return np.stack([candidate.entries for candidate in self.candidates])


def pool_size(s: int, n: int) -> int:
    """``2^s * n! / (n - s)!``, or 0 when ``s > n``."""
    if s > n:
        return 0
    return (1 << s) * perm(n, s)


def is_candidate(matrix: IntMatrix) -> bool:
    """True when ``matrix`` is a signed column injection (``A^T A = 1_s`` over the integers)."""
    entries = matrix.entries
    if np.any(np.abs(entries) > 1):
        return False
    if not np.all(np.count_nonzero(entries, axis=0) == 1):
        return False
    return bool(np.all(np.count_nonzero(entries, axis=1) <= 1))


def enumerate_candidates(s: int, n: int, config: Optional[CompositionConfig] = None) -> CandidatePool:
    """Every ``n x s`` signed column injection, in lexicographic order of entries.

    Raises:
        DomainError: if ``s`` or ``n`` is not positive.
        SizeCapExceeded: if the pool is larger than ``search_pool_cap``.
    """
    if s < 1 or n < 1:
        raise DomainError(f"pool dimensions must be positive, got s={s}, n={n}")
    config = resolve_config(config)
    size = pool_size(s, n)
    if size > config.search_pool_cap:
        raise SizeCapExceeded(f"candidate pool for s={s}, n={n}", size, config.search_pool_cap)

    matrices = []
    for rows in itertools.permutations(range(n), s):
        for signs in itertools.product((1, -1), repeat=s):
            entries = np.zeros((n, s), dtype=np.int64)
            entries[list(rows), list(range(s))] = signs
            matrices.append(entries)
    matrices.sort(key=lambda entries: tuple(entries.ravel()))
    logger.debug("Enumerated %d candidates for s=%d, n=%d", len(matrices), s, n)
    return CandidatePool(s=s, n=n, candidates=tuple(IntMatrix(entries) for entries in matrices))
