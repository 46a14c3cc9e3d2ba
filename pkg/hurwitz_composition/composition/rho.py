from functools import lru_cache

from hurwitz_composition.errors import DomainError

_BASE_CASES = {1: 1, 2: 2, 4: 4, 8: 8}


def _check_positive(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"the Hurwitz-Radon function is defined for positive integers, got {n!r}")


@lru_cache(maxsize=4096)
def _rho_power_of_two(power: int) -> int:
    if power < 4:
        return _BASE_CASES[1 << power]
    return 8 + _rho_power_of_two(power - 4)


def rho(n: int) -> int:
    """Hurwitz-Radon function, by the three recursion rules.

    The odd part of ``n`` is stripped (``rho(2^m k) = rho(2^m)`` for odd k),
    then ``rho(16 m) = 8 + rho(m)`` reduces to the base cases
    ``rho(1), rho(2), rho(4), rho(8) = 1, 2, 4, 8``.
    """
    _check_positive(n)
    power = 0
    while n % 2 == 0:
        n //= 2
        power += 1
    return _rho_power_of_two(power)


def rho_closed_form(n: int) -> int:
    """``8a + 2^b`` for ``n = 2^(4a + b) * odd`` with ``0 <= b <= 3``."""
    _check_positive(n)
    power = (n & -n).bit_length() - 1
    a, b = divmod(power, 4)
    return 8 * a + (1 << b)
