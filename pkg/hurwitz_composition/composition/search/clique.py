"""Maximum-clique search over the compatibility graph of a candidate pool.

Two candidates are adjacent when ``A^T B + B^T A = 0``, so cliques are
exactly integer Hurwitz systems. The search is a branch and bound over
bitsets with a greedy-coloring bound. Vertices are expanded in increasing
(lexicographic) order and the incumbent is replaced only by a strictly larger
clique, so the witness is the lexicographically smallest maximum clique.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from hurwitz_composition.composition.config import CompositionConfig, resolve_config
from hurwitz_composition.composition.matrix import IntMatrix
from hurwitz_composition.composition.search.candidates import (
    CandidatePool, enumerate_candidates, is_candidate,
)
from hurwitz_composition.composition.system import HurwitzSystem
from hurwitz_composition.errors import SearchBudgetExceeded

logger = logging.getLogger(__name__)

_ADJACENCY_CHUNK = 64


class SearchResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    s: int
    n: int
    r_max: int
    witness: Optional[HurwitzSystem] = None
    nodes: int
    pool_size: int
    conclusive: bool = True


def compatibility_masks(pool: CandidatePool) -> List[int]:
    """Adjacency bitsets: bit ``b`` of ``masks[a]`` is set when ``a`` and ``b`` anticommute."""
    stacked = pool.stacked()
    count = len(pool)
    masks = [0] * count
    for start in range(0, count, _ADJACENCY_CHUNK):
        block = stacked[start:start + _ADJACENCY_CHUNK]
        # gram[a, b] = A_a^T A_b and its mirror B^T A
        gram = np.einsum("anj,bnk->abjk", block, stacked)
        mirror = np.einsum("bnj,ank->abjk", stacked, block)
        compatible = ~np.any(gram + mirror, axis=(2, 3))
        for offset, row in enumerate(compatible):
            vertex = start + offset
            row[vertex] = False
            masks[vertex] = sum(1 << int(b) for b in np.flatnonzero(row))
    return masks


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _coloring_bound(candidates: int, masks: Sequence[int]) -> int:
    """Number of color classes in a greedy coloring of ``candidates``."""
    colors = 0
    uncolored = candidates
    while uncolored:
        colors += 1
        available = uncolored
        while available:
            vertex = _lowest(available)
            uncolored &= ~(1 << vertex)
            available &= ~(1 << vertex) & ~masks[vertex]
    return colors


class _CliqueSearch:
    def __init__(self, masks: Sequence[int], budget: int):
        self.masks = masks
        self.budget = budget
        self.nodes = 0
        self.best: List[int] = []

    def run(self) -> List[int]:
        everything = (1 << len(self.masks)) - 1
        self._expand([], everything)
        return self.best

    def _expand(self, clique: List[int], candidates: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        if len(clique) > len(self.best):
            self.best = list(clique)
        if not candidates or len(clique) + _coloring_bound(candidates, self.masks) <= len(self.best):
            return
        remaining = candidates
        while remaining:
            vertex = _lowest(remaining)
            remaining &= ~(1 << vertex)
            # only later vertices, so each clique is visited once, in lex order
            later = self.masks[vertex] & remaining
            clique.append(vertex)
            self._expand(clique, later)
            clique.pop()
            if len(clique) + _coloring_bound(remaining, self.masks) <= len(self.best):
                return


class _BudgetExhausted(Exception):
    pass


def _witness(pool: CandidatePool, clique: Sequence[int]) -> Optional[HurwitzSystem]:
    if not clique:
        return None
    return HurwitzSystem.from_matrices([pool.candidates[index] for index in clique])


def max_r(
    s: int,
    n: int,
    budget: Optional[int] = None,
    config: Optional[CompositionConfig] = None,
) -> SearchResult:
    """Largest ``r`` with an integer ``[r, s, n]`` system, plus a witness.

    Args:
        s: Columns of the candidate matrices.
        n: Rows of the candidate matrices.
        budget: Node budget; defaults to ``search_node_budget``.
        config: Pool cap and default budget.

    Raises:
        SizeCapExceeded: if the pool is larger than ``search_pool_cap``.
        SearchBudgetExceeded: if the budget runs out; carries the best clique
            found so far as a non-conclusive ``SearchResult``.
    """
    config = resolve_config(config)
    budget = budget if budget is not None else config.search_node_budget
    if s > n:
        logger.info("No candidates for s=%d > n=%d; r_max = 0", s, n)
        return SearchResult(s=s, n=n, r_max=0, nodes=0, pool_size=0)

    pool = enumerate_candidates(s, n, config)
    masks = compatibility_masks(pool)
    search = _CliqueSearch(masks, budget)
    try:
        clique = search.run()
    except _BudgetExhausted:
        partial = SearchResult(
            s=s,
            n=n,
            r_max=len(search.best),
            witness=_witness(pool, search.best),
            nodes=search.nodes,
            pool_size=len(pool),
            conclusive=False,
        )
        logger.warning(
            "Search for s=%d, n=%d inconclusive above r = %d after %d nodes",
            s, n, partial.r_max, partial.nodes,
        )
        raise SearchBudgetExceeded(partial) from None

    logger.info(
        "Search for s=%d, n=%d: r_max = %d (%d nodes, pool of %d)",
        s, n, len(clique), search.nodes, len(pool),
    )
    return SearchResult(
        s=s,
        n=n,
        r_max=len(clique),
        witness=_witness(pool, clique),
        nodes=search.nodes,
        pool_size=len(pool),
    )


def has_clique(matrices: Sequence[IntMatrix]) -> bool:
    """True when every matrix is a pool member and every pair anticommutes.

    Checks the existence direction for a given witness without enumerating the
    pool, which is what large sizes such as ``n = 8`` allow.
    """
    if not matrices or not all(is_candidate(matrix) for matrix in matrices):
        return False
    stacked = np.stack([matrix.entries for matrix in matrices])
    gram = np.einsum("anj,bnk->abjk", stacked, stacked)
    # total[a, b] = A_a^T A_b + A_b^T A_a
    total = gram + gram.transpose(1, 0, 2, 3)
    off_diagonal = ~np.eye(len(matrices), dtype=bool)
    return not bool(np.any(total[off_diagonal]))
