import logging
from typing import Optional

from hurwitz_composition.composition.config import CompositionConfig
from hurwitz_composition.composition.constructions.base import guard_exponent
from hurwitz_composition.composition.constructions.full_doubling import combine
from hurwitz_composition.composition.system import HurwitzSystem
from hurwitz_composition.errors import DomainError

logger = logging.getLogger(__name__)


def extended_double(
    system: HurwitzSystem, k: int, config: Optional[CompositionConfig] = None
) -> HurwitzSystem:
    """Extended doubling: ``[r, s, n]`` yields ``[r + rho(2^(k-1)), 2^k s, 2^k n]``.

    Computed as ``combine(system, hr_family(k - 1))``. ``k = 1`` has the size
    of plain doubling.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"extended_double needs k >= 1, got {k!r}")
    guard_exponent(k, system.n, config, "extended_double")
    # hr_family itself is built with combine
    from hurwitz_composition.composition.generators.hurwitz_radon import hr_family

    logger.debug("Extended doubling of %s with k=%d", system.size, k)
    return combine(system, hr_family(k - 1, config), config=config)
