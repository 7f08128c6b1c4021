"""Truncated formal power series in one variable t, with exact coefficients.

Coefficients may be Fraction or any exact ring element that supports +, *,
scalar multiplication by Fraction, and equality (PsiPolynomial qualifies).
Floats are rejected outright.  Binary operations truncate to the smaller
precision; a series of precision N carries coefficients of t^0 .. t^N.
"""
from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _check_coeff(c):
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(c) if isinstance(c, int) else c


class TruncatedSeries:
    """A series known through degree ``prec`` inclusive."""

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs, prec: int | None = None):
        coeffs = [_check_coeff(c) for c in coeffs]
        if prec is None:
            if not coeffs:
                raise ValueError("empty coefficient list needs an explicit precision")
            prec = len(coeffs) - 1
        if prec < 0:
            raise ValueError("precision must be nonnegative")
        if len(coeffs) < prec + 1:
            coeffs = coeffs + [_ZERO] * (prec + 1 - len(coeffs))
        else:
            coeffs = coeffs[: prec + 1]
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, prec: int) -> "TruncatedSeries":
        return cls([], prec=prec)

    @classmethod
    def one(cls, prec: int) -> "TruncatedSeries":
        return cls([_ONE], prec=prec)

    @classmethod
    def variable(cls, prec: int) -> "TruncatedSeries":
        """The series t."""
        return cls([_ZERO, _ONE], prec=prec)

    def coefficient(self, n: int):
        if not 0 <= n <= self.prec:
            raise IndexError(f"coefficient {n} outside precision {self.prec}")
        return self.coeffs[n]

    def truncate(self, prec: int) -> "TruncatedSeries":
        if prec > self.prec:
            raise ValueError("cannot extend precision")
        return TruncatedSeries(list(self.coeffs[: prec + 1]), prec=prec)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.prec, other.prec)
            return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], prec=n)
        if isinstance(other, float):
            return NotImplemented
        c = _check_coeff(other)
        out = list(self.coeffs)
        out[0] = out[0] + c
        return TruncatedSeries(out, prec=self.prec)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], prec=self.prec)

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncatedSeries) else -_check_coeff(other))

    def __rsub__(self, other):
        return (-self) + _check_coeff(other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.prec, other.prec)
            out = [_ZERO] * (n + 1)
            for i in range(n + 1):
                a = self.coeffs[i]
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b == 0:
                        continue
                    out[i + j] = out[i + j] + a * b
            return TruncatedSeries(out, prec=n)
        if isinstance(other, float):
            return NotImplemented
        c = _check_coeff(other)
        return TruncatedSeries([c * a for a in self.coeffs], prec=self.prec)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = TruncatedSeries.one(self.prec)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.prec == other.prec and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def t_ddt(self) -> "TruncatedSeries":
        """The derivation t * d/dt: multiplies coefficient n by n."""
        return TruncatedSeries([n * c for n, c in enumerate(self.coeffs)], prec=self.prec)

    def negate_t(self) -> "TruncatedSeries":
        """Substitute t -> -t."""
        return TruncatedSeries(
            [c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs)], prec=self.prec
        )

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be an invertible scalar."""
        u = _unit_inverse(self.coeffs[0])
        out = [u] + [_ZERO] * self.prec
        for n in range(1, self.prec + 1):
            s = _ZERO
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if a == 0:
                    continue
                s = s + a * out[n - k]
            out[n] = -(u * s)
        return TruncatedSeries(out, prec=self.prec)

    def exp(self) -> "TruncatedSeries":
        """Exponential of a series with zero constant term.

        Uses n*b_n = sum_k k*a_k*b_{n-k}, which needs no coefficient
        division beyond multiplying by 1/n.
        """
        if not self.coeffs[0] == 0:
            raise ValueError("exp requires zero constant term")
        out = [_ONE] + [_ZERO] * self.prec
        for n in range(1, self.prec + 1):
            s = _ZERO
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if a == 0:
                    continue
                s = s + (k * a) * out[n - k]
            out[n] = Fraction(1, n) * s
        return TruncatedSeries(out, prec=self.prec)

    def log(self) -> "TruncatedSeries":
        """Logarithm of a series with constant term one."""
        if not self.coeffs[0] == 1:
            raise ValueError("log requires constant term one")
        q = self.t_ddt() * self.invert()
        out = [_ZERO] * (self.prec + 1)
        for n in range(1, self.prec + 1):
            out[n] = Fraction(1, n) * q.coeffs[n]
        return TruncatedSeries(out, prec=self.prec)

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "1" if n == 0 else ("t" if n == 1 else f"t^{n}")
            if n == 0:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(term)
            else:
                parts.append(f"({c})*{term}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.prec + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r}, prec={self.prec})"


def _unit_inverse(c):
    """Inverse of a constant coefficient, for series inversion."""
    if isinstance(c, Fraction):
        if c == 0:
            raise ValueError("constant term is not a unit")
        return _ONE / c
    # duck-typed polynomial-style coefficient
    if hasattr(c, "is_constant") and c.is_constant:
        v = c.constant_value()
        if v == 0:
            raise ValueError("constant term is not a unit")
        return _ONE / v
    raise ValueError("constant term is not a unit")
