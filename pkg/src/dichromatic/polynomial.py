"""Exact univariate polynomials over arbitrary-precision integers.

Every counting formula in this package produces an :class:`IntPolynomial`.
Coefficients are plain Python ints, so subset sums over 2^|E| terms never
overflow or lose precision.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class IntPolynomial:
    """Dense integer polynomial in one variable, kept in canonical form.

    Coefficients are stored lowest degree first with no trailing zeros;
    the zero polynomial is the empty coefficient sequence and reports
    degree ``-inf``. Instances are immutable and hashable, and equality
    is coefficient-sequence equality.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        """coeff * x^degree."""
        if degree < 0:
            raise ValueError(f"degree must be nonnegative, got {degree}")
        return cls((0,) * degree + (coeff,))

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Coefficients, lowest degree first (empty for the zero polynomial)."""
        return self._coeffs

    @property
    def degree(self) -> float:
        """Degree of the polynomial; ``-inf`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else float("-inf")

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self._coeffs):
            return self._coeffs[degree]
        return 0

    def add_term(self, sign: int, degree: int) -> "IntPolynomial":
        """Return self + sign * x^degree (sign must be +1 or -1)."""
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if degree < 0:
            raise ValueError(f"degree must be nonnegative, got {degree}")
        cs = list(self._coeffs) + [0] * max(0, degree + 1 - len(self._coeffs))
        cs[degree] += sign
        return IntPolynomial(cs)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x^k (shift every coefficient up by k degrees)."""
        if k < 0:
            raise ValueError(f"shift must be nonnegative, got {k}")
        if not self._coeffs:
            return self
        return IntPolynomial((0,) * k + self._coeffs)

    def evaluate(self, x: int) -> int:
        """Exact integer value at x, by Horner's rule."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return IntPolynomial(cs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self._coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self._coeffs or not other._coeffs:
            return IntPolynomial()
        cs = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                cs[i + j] += a * b
        return IntPolynomial(cs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def to_strings(self) -> list[str]:
        """Coefficients low-to-high degree as exact decimal strings."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "IntPolynomial":
        return cls(int(s) for s in items)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[tuple[str, str]] = []
        for deg in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[deg]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                xpow = "x" if deg == 1 else f"x^{deg}"
                body = xpow if mag == 1 else f"{mag}*{xpow}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"IntPolynomial({self._coeffs!r})"
