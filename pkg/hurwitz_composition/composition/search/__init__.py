from .candidates import CandidatePool, enumerate_candidates, is_candidate, pool_size
from .clique import SearchResult, compatibility_masks, has_clique, max_r

__all__ = [
    "CandidatePool",
    "SearchResult",
    "compatibility_masks",
    "enumerate_candidates",
    "has_clique",
    "is_candidate",
    "max_r",
    "pool_size",
]
