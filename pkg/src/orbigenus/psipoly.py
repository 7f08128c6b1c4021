"""Sparse exact-rational polynomials in formal power-operation symbols.

Symbols are indexed by a family tag (the name of a formal variable, "x",
"y", ...) and a transitive orbit.  Polynomials coerce freely with int and
Fraction scalars, so they can serve as series coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .orbits import TransitiveOrbit

_SCALARS = (int, Fraction)


@dataclass(frozen=True)
class PsiSymbol:
    """One formal symbol: the power-operation value of a family at an orbit."""

    family: str
    orbit: TransitiveOrbit

    @property
    def sort_key(self):
        return (self.family, self.orbit.sort_key)

    def __str__(self) -> str:
        if self.orbit.is_trivial():
            return self.family
        return f"psi[{self.orbit.label()}]({self.family})"


# a monomial is a tuple of (symbol, exponent) pairs, sorted by symbol key,
# exponents >= 1; the empty tuple is the constant monomial
Monomial = tuple[tuple[PsiSymbol, int], ...]


def _mono_sorted(pairs) -> Monomial:
    return tuple(sorted(pairs, key=lambda se: se[0].sort_key))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps: dict[PsiSymbol, int] = {}
    for sym, e in a:
        exps[sym] = exps.get(sym, 0) + e
    for sym, e in b:
        exps[sym] = exps.get(sym, 0) + e
    return _mono_sorted(exps.items())


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Monomial):
    return (_mono_degree(m), tuple((sym.sort_key, e) for sym, e in m))


def _mono_str(m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for sym, e in m:
        parts.append(str(sym) if e == 1 else f"{sym}^{e}")
    return "*".join(parts)


class PsiPolynomial:
    """Immutable polynomial with Fraction coefficients and structural equality.

    Equality against a bare int or Fraction means "is that constant", and the
    hash agrees, so constant polynomials can stand in for scalars.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict[Monomial, Fraction] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for mono, coeff in items:
                c = Fraction(coeff) if isinstance(coeff, int) else coeff
                if not isinstance(c, Fraction):
                    raise TypeError(f"coefficient must be exact, got {type(coeff).__name__}")
                mono = _mono_sorted(mono)
                c = data.get(mono, Fraction(0)) + c
                if c:
                    data[mono] = c
                elif mono in data:
                    del data[mono]
        object.__setattr__(self, "_terms", data)

    @classmethod
    def zero(cls) -> "PsiPolynomial":
        return cls()

    @classmethod
    def constant(cls, value) -> "PsiPolynomial":
        return cls({(): Fraction(value)})

    @classmethod
    def symbol(cls, sym: PsiSymbol) -> "PsiPolynomial":
        return cls({((sym, 1),): Fraction(1)})

    @classmethod
    def variable(cls, family: str, h: int) -> "PsiPolynomial":
        """The degree-one symbol of a family itself (its trivial-orbit value)."""
        return cls.symbol(PsiSymbol(family, TransitiveOrbit.trivial(h)))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: _mono_key(mc[0]))

    def coefficient(self, mono) -> Fraction:
        return self._terms.get(_mono_sorted(mono), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self._terms.get((), Fraction(0))

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self._terms:
            return -1
        return max(_mono_degree(m) for m in self._terms)

    def evaluate(self, assignment) -> Fraction:
        """Substitute a Fraction for every symbol (ring homomorphism to Q)."""
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            v = coeff
            for sym, e in mono:
                v *= Fraction(assignment[sym]) ** e
            total += v
        return total

    def _coerce(self, other):
        if isinstance(other, PsiPolynomial):
            return other
        if isinstance(other, _SCALARS):
            return PsiPolynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        merged = dict(self._terms)
        for mono, coeff in o._terms.items():
            c = merged.get(mono, Fraction(0)) + coeff
            if c:
                merged[mono] = c
            elif mono in merged:
                del merged[mono]
        out = PsiPolynomial.__new__(PsiPolynomial)
        object.__setattr__(out, "_terms", merged)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = PsiPolynomial.__new__(PsiPolynomial)
        object.__setattr__(out, "_terms", {m: -c for m, c in self._terms.items()})
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                m = _mono_mul(m1, m2)
                c = acc.get(m, Fraction(0)) + c1 * c2
                if c:
                    acc[m] = c
                elif m in acc:
                    del acc[m]
        out = PsiPolynomial.__new__(PsiPolynomial)
        object.__setattr__(out, "_terms", acc)
        return out

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = PsiPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, PsiPolynomial):
            return self._terms == other._terms
        if isinstance(other, _SCALARS):
            return self.is_constant and self._terms.get((), Fraction(0)) == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant:
            return hash(self._terms.get((), Fraction(0)))
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            if mono == ():
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(_mono_str(mono))
            else:
                parts.append(f"{coeff}*{_mono_str(mono)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PsiPolynomial({self})"
