from .classical import CLASSICAL_DIMENSIONS, cayley_dickson_sign, classical
from .hurwitz_radon import hr_family

__all__ = ["CLASSICAL_DIMENSIONS", "cayley_dickson_sign", "classical", "hr_family"]
