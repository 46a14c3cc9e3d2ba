"""Sparse exact multivariate polynomials over a fixed variable list.

A polynomial maps exponent vectors (tuples of fixed arity) to nonzero integer
coefficients. Monomials are ordered lexicographically with the exponent
vector compared from the first variable on, largest first, so with variables
``x1..xr, y1..ys`` the x block decides before the y block and ``x1^2 y1^2``
precedes ``x1^2 y2^2``.
"""

from typing import Dict, Iterator, Mapping, Tuple

from hurwitz_composition.composition.matrix import INT64_MAX
from hurwitz_composition.errors import MatrixOverflowError, StructuralError

Exponents = Tuple[int, ...]


class Polynomial:
    __slots__ = ("arity", "_coefficients")

    def __init__(self, arity: int, coefficients: Mapping[Exponents, int] | None = None):
        self.arity = arity
        self._coefficients: Dict[Exponents, int] = {}
        for exponents, value in (coefficients or {}).items():
            if len(exponents) != arity:
                raise StructuralError(
                    f"exponent vector {exponents} does not have arity {arity}"
                )
            self._accumulate(tuple(exponents), int(value))

    def _accumulate(self, exponents: Exponents, value: int) -> None:
        total = self._coefficients.get(exponents, 0) + value
        if abs(total) > INT64_MAX:
            raise MatrixOverflowError(f"coefficient of {exponents} left the int64 range")
        if total:
            self._coefficients[exponents] = total
        else:
            self._coefficients.pop(exponents, None)

    @classmethod
    def monomial(cls, arity: int, exponents: Exponents, coefficient: int = 1) -> "Polynomial":
        return cls(arity, {exponents: coefficient})

    @classmethod
    def sum_of_squares(cls, arity: int, offset: int, count: int) -> "Polynomial":
        """``v_offset^2 + ... + v_(offset+count-1)^2`` over ``arity`` variables."""
        terms = {}
        for index in range(offset, offset + count):
            exponents = [0] * arity
            exponents[index] = 2
            terms[tuple(exponents)] = 1
        return cls(arity, terms)

    def _check_arity(self, other: "Polynomial") -> None:
        if self.arity != other.arity:
            raise StructuralError(f"polynomial arities differ: {self.arity} vs {other.arity}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_arity(other)
        result = Polynomial(self.arity, self._coefficients)
        for exponents, value in other._coefficients.items():
            result._accumulate(exponents, value)
        return result

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.arity, {e: -v for e, v in self._coefficients.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_arity(other)
        result = Polynomial(self.arity)
        for left, a in self._coefficients.items():
            for right, b in other._coefficients.items():
                result._accumulate(tuple(p + q for p, q in zip(left, right)), a * b)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.arity == other.arity and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self._coefficients.items())))

    def __len__(self) -> int:
        return len(self._coefficients)

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def coefficient(self, exponents: Exponents) -> int:
        return self._coefficients.get(tuple(exponents), 0)

    def terms(self) -> Iterator[Tuple[Exponents, int]]:
        """Nonzero terms in monomial order."""
        for exponents in sorted(self._coefficients, reverse=True):
            yield exponents, self._coefficients[exponents]

    def __repr__(self) -> str:
        return f"Polynomial(arity={self.arity}, terms={len(self)})"
