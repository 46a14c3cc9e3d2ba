import logging
from typing import Optional

from hurwitz_composition.composition.config import CompositionConfig, resolve_config
from hurwitz_composition.composition.constructions.base import guard_exponent
from hurwitz_composition.composition.constructions.full_doubling import combine
from hurwitz_composition.composition.generators.classical import classical
from hurwitz_composition.composition.system import HurwitzSystem
from hurwitz_composition.errors import DomainError

logger = logging.getLogger(__name__)


def hr_family(m: int, config: Optional[CompositionConfig] = None) -> HurwitzSystem:
    """A ``[rho(2^m), 2^m, 2^m]`` system.

    For ``m <= 3`` this is ``classical(2^m)``; above that the exponent drops by
    four per step through ``combine(classical(8), hr_family(m - 4))``, since
    ``2 * 8 * 2^(m-4) = 2^m`` and ``8 + rho(2^(m-4)) = rho(2^m)``.

    Raises:
        DomainError: if ``m`` is negative.
        SizeCapExceeded: if ``2^m`` is above the configured size cap.
    """
    if m < 0:
        raise DomainError(f"hr_family exponent must be nonnegative, got {m}")
    config = resolve_config(config)
    guard_exponent(m, 1, config, "hr_family")
    if m <= 3:
        return classical(1 << m)
    logger.debug("Building hr_family(%d) from classical(8) and hr_family(%d)", m, m - 4)
    return combine(classical(8), hr_family(m - 4, config), config=config)
