from .base import E, H, J, S
from .doubling import amicable_double, double, doubling_ladder
from .full_doubling import combine, full_double
from .extended_doubling import extended_double

__all__ = [
    "E",
    "H",
    "J",
    "S",
    "amicable_double",
    "combine",
    "double",
    "doubling_ladder",
    "extended_double",
    "full_double",
]
