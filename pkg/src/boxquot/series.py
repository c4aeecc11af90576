"""Exact truncated power/Laurent series over the integers.

Coefficients are Python ints (arbitrary precision), so arithmetic never
overflows or loses exactness.  Every series carries an explicit truncation
order; coefficients above the order are undefined and never touched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class TruncSeries:
    """A Laurent series known exactly for exponents min_exp..order.

    coeffs[i] is the coefficient of q**(min_exp + i); len(coeffs) must be
    order - min_exp + 1.
    """

    min_exp: int
    coeffs: tuple
    order: int

    def __post_init__(self):
        if self.order < self.min_exp:
            raise ValueError("order below min_exp")
        if len(self.coeffs) != self.order - self.min_exp + 1:
            raise ValueError("coefficient list does not match exponent range")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise TypeError("coefficients must be exact integers")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs, order=None, min_exp=0):
        coeffs = list(coeffs)
        if order is None:
            order = min_exp + len(coeffs) - 1
        coeffs += [0] * (order - min_exp + 1 - len(coeffs))
        return cls(min_exp, tuple(coeffs), order)

    @classmethod
    def one(cls, order):
        return cls.from_coeffs([1], order=order)

    @classmethod
    def zero(cls, order):
        return cls.from_coeffs([0], order=order)

    def coeff(self, k):
        if k > self.order:
            raise IndexError(f"coefficient q^{k} beyond truncation order {self.order}")
        if k < self.min_exp:
            return 0
        return self.coeffs[k - self.min_exp]

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend truncation order")
        return TruncSeries(self.min_exp, self.coeffs[: order - self.min_exp + 1], order)

    def shift(self, k):
        """Multiply by q**k."""
        return TruncSeries(self.min_exp + k, self.coeffs, self.order + k)

    def __add__(self, other):
        order = min(self.order, other.order)
        lo = min(self.min_exp, other.min_exp)
        coeffs = [self.coeff(k) + other.coeff(k) for k in range(lo, order + 1)]
        return TruncSeries(lo, tuple(coeffs), order)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TruncSeries(self.min_exp, tuple(c * a for a in self.coeffs), self.order)

    def __mul__(self, other):
        """Convolution; the result order is the range on which all needed
        coefficients of both factors are known."""
        order = min(self.order + other.min_exp, other.order + self.min_exp)
        lo = self.min_exp + other.min_exp
        coeffs = []
        for k in range(lo, order + 1):
            s = 0
            for i in range(self.min_exp, self.order + 1):
                j = k - i
                if other.min_exp <= j <= other.order:
                    s += self.coeffs[i - self.min_exp] * other.coeffs[j - other.min_exp]
            coeffs.append(s)
        return TruncSeries(lo, tuple(coeffs), order)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncSeries.one(self.order)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self):
        """Multiplicative inverse up to truncation.

        Requires an ordinary series (min_exp = 0 after stripping) with unit
        constant term.
        """
        if self.min_exp > 0 or (self.min_exp < 0 and any(
            self.coeffs[i] != 0 for i in range(-self.min_exp)
        )):
            raise ValueError("not invertible: nonzero Laurent tail")
        c0 = self.coeff(0)
        if c0 not in (1, -1):
            raise ValueError("not invertible: constant term is not a unit")
        n = self.order
        inv = [c0] + [0] * n
        for k in range(1, n + 1):
            s = sum(self.coeff(i) * inv[k - i] for i in range(1, k + 1))
            inv[k] = -c0 * s
        return TruncSeries(0, tuple(inv), n)

    def compare(self, other):
        """Compare on the common exponent range.

        Returns (match, first_mismatch, (lo, hi)) where first_mismatch is the
        lowest disagreeing exponent or None.
        """
        hi = min(self.order, other.order)
        lo = min(self.min_exp, other.min_exp)
        for k in range(lo, hi + 1):
            if self.coeff(k) != other.coeff(k):
                return False, k, (lo, hi)
        return True, None, (lo, hi)

    def coeff_list(self):
        return list(self.coeffs)

    def to_json(self):
        return {
            "min_exp": self.min_exp,
            "order": self.order,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data):
        return cls(int(data["min_exp"]), tuple(int(c) for c in data["coeffs"]),
                   int(data["order"]))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.min_exp + i
            terms.append(f"{c}" if e == 0 else f"{c}*q^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def macmahon(N, power=1):
    """prod_{n>=1} (1 - q^n)^(-n*power) truncated at order N."""
    if N < 0:
        raise ValueError("truncation order must be >= 0")
    if power < 1:
        raise ValueError("power must be >= 1")
    result = TruncSeries.one(N)
    for n in range(1, N + 1):
        m = n * power
        # (1 - q^n)^(-m) = sum_j C(m+j-1, j) q^(n*j)
        coeffs = [0] * (N + 1)
        for j in range(0, N // n + 1):
            coeffs[n * j] = math.comb(m + j - 1, j)
        result = result * TruncSeries(0, tuple(coeffs), N)
    return result


@dataclass(frozen=True)
class FinitePoly:
    """A polynomial with exact integer coefficients, indexed 0..degree."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if e == 0 else f"{c}*q^{e}")
        return " + ".join(terms)


def reciprocal_poly(p):
    """q^d * P(1/q) for d = deg P: the coefficient list reversed."""
    return FinitePoly(tuple(reversed(p.coeffs)))


def is_palindromic(p):
    return reciprocal_poly(p) == p
