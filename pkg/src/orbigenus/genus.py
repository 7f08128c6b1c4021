"""Symmetric-power series, Hecke operators, and the product-formula verifier.

A genus model assigns to every transitive orbit T an exact value psi(T),
the power-operation value of a fixed class x.  Everything downstream is a
finite exact computation: the symmetric-power coefficients sigma_n sum
psi over conjugacy classes against inverse centralizer orders, the Hecke
operator T_n averages psi over the orbits of size n, and the two are tied
together by the exponential product formula

    sum_n sigma_n t^n  =  exp( sum_T psi(T) t^|T| / |T| ).

The verifier checks that identity coefficient by coefficient, exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classes import OrbitTypeMultiset, centralizer_order, enumerate_classes
from .classfun import ClassFunction, augmentation
from .orbits import ALL_ORDERS, Mode, TransitiveOrbit, enumerate_orbits
from .psipoly import PsiPolynomial, PsiSymbol
from .series import TruncatedSeries


class SymbolicModel:
    """Keeps every psi(T) as a formal symbol of one family."""

    def __init__(self, family: str = "x"):
        self.family = family

    def psi(self, orbit: TransitiveOrbit) -> PsiPolynomial:
        return PsiPolynomial.symbol(PsiSymbol(self.family, orbit))

    def __repr__(self):
        return f"SymbolicModel({self.family!r})"


class IntegerModel:
    """psi(T) = d for every orbit: the model of a d-dimensional trivial class."""

    def __init__(self, d: int):
        self.d = d

    def psi(self, orbit: TransitiveOrbit) -> Fraction:
        return Fraction(self.d)

    def __repr__(self):
        return f"IntegerModel({self.d})"


class TableModel:
    """psi values looked up in an explicit orbit table."""

    def __init__(self, table):
        self.table = {}
        for orbit, value in (table.items() if hasattr(table, "items") else table):
            if isinstance(value, float):
                raise TypeError("floating point psi values are not allowed")
            self.table[orbit] = Fraction(value) if isinstance(value, int) else value

    def psi(self, orbit: TransitiveOrbit):
        if orbit not in self.table:
            raise ValueError(f"table model has no psi value for orbit {orbit}")
        return self.table[orbit]

    def __repr__(self):
        return f"TableModel({len(self.table)} orbits)"


def psi_of_class(model, cls: OrbitTypeMultiset):
    """Product of psi over the orbits of a class, with multiplicity."""
    value = Fraction(1)
    for orbit, mult in cls.entries:
        value = value * model.psi(orbit) ** mult
    return value


def sigma(model, n: int, h: int, mode: Mode = ALL_ORDERS):
    """Coefficient of the n-th symmetric power: sum over classes of psi/centralizer."""
    if n < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    total = Fraction(0)
    for cls in enumerate_classes(h, n, mode):
        total = total + psi_of_class(model, cls) * Fraction(1, centralizer_order(cls))
    return total


def symmetric_power_series(model, prec: int, h: int, mode: Mode = ALL_ORDERS) -> TruncatedSeries:
    """S_t = sum_{n>=0} sigma_n t^n through degree prec."""
    return TruncatedSeries([sigma(model, n, h, mode) for n in range(prec + 1)], prec=prec)


def hecke_operator(model, n: int, h: int, mode: Mode = ALL_ORDERS):
    """T_n = (1/n) * sum over orbits of size n of psi(T).

    The orbit size must be admissible for the mode; in p-power mode the
    operators exist only for n a power of p.
    """
    total = Fraction(0)
    for orbit in enumerate_orbits(h, n, mode):
        total = total + model.psi(orbit)
    return Fraction(1, n) * total


def hecke_log_series(model, prec: int, h: int, mode: Mode = ALL_ORDERS) -> TruncatedSeries:
    """sum over admissible n >= 1 of T_n t^n, the claimed logarithm of S_t."""
    coeffs = [Fraction(0)] * (prec + 1)
    for n in mode.sizes_up_to(prec):
        coeffs[n] = hecke_operator(model, n, h, mode)
    return TruncatedSeries(coeffs, prec=prec)


def hecke_from_log(series: TruncatedSeries) -> tuple:
    """Read Hecke operators back off a symmetric-power series.

    Returns the coefficient tuple of log(series); entry n is T_n for n >= 1
    (entry 0 is zero).  The series must have constant term one.
    """
    return series.log().coeffs


@dataclass(frozen=True)
class SeriesComparison:
    """Outcome of an exact coefficient-by-coefficient series comparison."""

    h: int
    mode: Mode
    precision: int
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    equal: bool
    first_mismatch: int | None

    @classmethod
    def compare(cls, h, mode, lhs: TruncatedSeries, rhs: TruncatedSeries) -> "SeriesComparison":
        if lhs.prec != rhs.prec:
            raise ValueError("series precisions differ")
        mismatch = None
        for n in range(lhs.prec + 1):
            if not lhs.coeffs[n] == rhs.coeffs[n]:
                mismatch = n
                break
        return cls(h, mode, lhs.prec, lhs, rhs, mismatch is None, mismatch)


def verify_product_formula(model, prec: int, h: int, mode: Mode = ALL_ORDERS) -> SeriesComparison:
    """Check S_t = exp(sum_n T_n t^n) through the given precision, exactly.

    The left side is assembled from conjugacy classes, the right side from
    single orbits; their agreement is the product-formula identity.
    """
    lhs = symmetric_power_series(model, prec, h, mode)
    rhs = hecke_log_series(model, prec, h, mode).exp()
    return SeriesComparison.compare(h, mode, lhs, rhs)


# the identity's conventional name, kept as an alias for discoverability
verify_dmvv = verify_product_formula


def lambda_series(model, prec: int, h: int, mode: Mode = ALL_ORDERS) -> TruncatedSeries:
    """Total lambda operation: Lambda_t = 1 / S_{-t}."""
    return symmetric_power_series(model, prec, h, mode).negate_t().invert()


def lambda_operation(model, n: int, prec_hint: int | None = None, h: int = 1,
                     mode: Mode = ALL_ORDERS):
    """Coefficient of t^n in Lambda_t."""
    prec = n if prec_hint is None else prec_hint
    if prec < n:
        raise ValueError("precision hint below requested degree")
    return lambda_series(model, prec, h, mode).coefficient(n)


def adams_series(model, prec: int, h: int, mode: Mode = ALL_ORDERS) -> TruncatedSeries:
    """sum_n psi_n t^n computed as -t d/dt log Lambda_{-t}.

    Independent route to n * T_n: goes through S_t, inversion, and the
    logarithmic derivative rather than through orbit sums.
    """
    lam_minus = lambda_series(model, prec, h, mode).negate_t()
    return -(lam_minus.log().t_ddt())


def equivariant_power_classfunction(model, n: int, h: int, mode: Mode = ALL_ORDERS) -> ClassFunction:
    """The n-th power-operation character: class c maps to psi_of_class(model, c).

    Its augmentation is sigma_n; this is the class-function refinement the
    orbifold genus evaluates.
    """
    values = [psi_of_class(model, cls) for cls in enumerate_classes(h, n, mode)]
    return ClassFunction(h, mode, n, values)


def orbifold_genus(chi: ClassFunction):
    """Genus of the global quotient attached to a power-operation character."""
    return augmentation(chi)


def todd_orbifold_series(d: int, prec: int) -> TruncatedSeries:
    """Generating series of Todd genera of symmetric powers of a d-dimensional class.

    Computed as the symmetric-power series of IntegerModel(d) at h = 1 with
    no order restriction; the expected closed form is (1 - t)^(-d).
    """
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    return symmetric_power_series(IntegerModel(d), prec, 1, ALL_ORDERS)


def geometric_power_series(d: int, prec: int) -> TruncatedSeries:
    """(1 - t)^(-d) through the given precision, by direct expansion."""
    one_minus_t = TruncatedSeries([Fraction(1), Fraction(-1)], prec=prec)
    return one_minus_t.invert() ** d
