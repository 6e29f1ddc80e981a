"""Integer polynomials with exact evaluation."""

from fractions import Fraction
from typing import Any, Iterable, Tuple, Union

import sympy
from pydantic import BaseModel, ConfigDict, Field, model_validator

from specgap.exceptions import InvalidInputError

Number = Union[int, float, Fraction]

T = sympy.Symbol("t")


class PolynomialChecksum(BaseModel):
    model_config = ConfigDict(frozen=True)

    degree: int
    coefficient_sum: int = Field(..., description="Sum of absolute coefficients")
    value_at_one: int


class IntPolynomial(BaseModel):
    """Polynomial with integer coefficients in ascending degree order."""

    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[int, ...]

    @model_validator(mode="before")
    @classmethod
    def strip_leading_zeros(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        coeffs = [int(c) for c in data.get("coeffs", ())]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            raise InvalidInputError("The zero polynomial is not allowed")
        return {**data, "coeffs": tuple(coeffs)}

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: Number) -> Number:
        return self.evaluate(t)

    def evaluate(self, t: Number) -> Number:
        """Horner evaluation; exact for int and Fraction arguments."""
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return IntPolynomial(coeffs=tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(coeffs=tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(coeffs=tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(coeffs=tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        result = IntPolynomial(coeffs=(1,))
        for _ in range(k):
            result = result * self
        return result

    def checksum(self) -> PolynomialChecksum:
        return PolynomialChecksum(
            degree=self.degree,
            coefficient_sum=sum(abs(c) for c in self.coeffs),
            value_at_one=sum(self.coeffs),
        )

    def to_sympy(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coeffs)), T, domain="QQ")

    def __str__(self) -> str:
        return str(self.to_sympy().as_expr())


def poly(*coeffs: int) -> IntPolynomial:
    """IntPolynomial from ascending coefficients."""
    return IntPolynomial(coeffs=tuple(coeffs))


def product(factors: Iterable[IntPolynomial]) -> IntPolynomial:
    result = poly(1)
    for f in factors:
        result = result * f
    return result
