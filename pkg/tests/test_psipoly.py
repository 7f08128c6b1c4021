"""Polynomials in power-operation symbols: ring laws, coercion, evaluation."""
import random
from fractions import Fraction

import pytest

from orbigenus.orbits import Mode, enumerate_orbits
from orbigenus.psipoly import PsiPolynomial, PsiSymbol
from orbigenus.series import TruncatedSeries

P2 = Mode.p_power(2)


def symbol_pool():
    syms = [PsiSymbol("x", t) for t in enumerate_orbits(2, 1, P2)]
    syms += [PsiSymbol("x", t) for t in enumerate_orbits(2, 2, P2)]
    syms += [PsiSymbol("y", t) for t in enumerate_orbits(2, 2, P2)]
    return syms


def rand_poly(rng, pool, nterms=4):
    terms = {}
    for _ in range(nterms):
        mono = tuple(
            (s, rng.randint(1, 2)) for s in rng.sample(pool, rng.randint(0, 2))
        )
        terms[mono] = terms.get(mono, 0) + Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return PsiPolynomial(terms)


def test_symbol_identity():
    t1, t2, t3 = enumerate_orbits(2, 2, P2)
    assert PsiSymbol("x", t1) == PsiSymbol("x", t1)
    assert PsiSymbol("x", t1) != PsiSymbol("x", t2)
    assert PsiSymbol("x", t1) != PsiSymbol("y", t1)
    assert PsiSymbol("x", t1).sort_key < PsiSymbol("x", t2).sort_key < PsiSymbol("y", t1).sort_key


def test_symbol_str():
    (triv,) = enumerate_orbits(2, 1, P2)
    t1 = enumerate_orbits(2, 2, P2)[0]
    assert str(PsiSymbol("x", triv)) == "x"
    assert str(PsiSymbol("x", t1)) == "psi[1,0|0,2](x)"


def test_constants_compare_and_hash_like_scalars():
    three = PsiPolynomial.constant(3)
    assert three == 3
    assert three == Fraction(3)
    assert hash(three) == hash(3)
    assert PsiPolynomial.zero() == 0
    assert not PsiPolynomial.zero()
    half = PsiPolynomial.constant(Fraction(1, 2))
    assert half == Fraction(1, 2)
    assert half != 1


def test_mixed_scalar_arithmetic():
    x = PsiPolynomial.variable("x", 2)
    assert 2 * x == x + x
    assert x * 2 == x + x
    assert (x + 1) - 1 == x
    assert 1 + x == x + 1
    assert x - x == 0
    assert x / 2 == x * Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        x / 0


def test_no_zero_terms_stored():
    x = PsiPolynomial.variable("x", 2)
    diff = (x + 1) * (x - 1) - x * x + 1
    assert diff.is_zero
    assert diff.sorted_terms() == []
    assert (x * x - x * x).sorted_terms() == []


def test_pow():
    x = PsiPolynomial.variable("x", 2)
    assert x ** 0 == 1
    assert x ** 3 == x * x * x
    assert (x + 1) ** 2 == x * x + 2 * x + 1
    with pytest.raises(ValueError):
        x ** -1


def test_degree_and_constant_value():
    x = PsiPolynomial.variable("x", 2)
    assert PsiPolynomial.zero().degree() == -1
    assert PsiPolynomial.constant(7).degree() == 0
    assert (x * x + x).degree() == 2
    assert PsiPolynomial.constant(7).constant_value() == 7
    with pytest.raises(ValueError):
        x.constant_value()


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        PsiPolynomial({(): 0.5})


def test_str_is_deterministic():
    t1 = enumerate_orbits(2, 2, P2)[0]
    x = PsiPolynomial.variable("x", 2)
    p = x * x * Fraction(1, 2) + PsiPolynomial.symbol(PsiSymbol("x", t1)) + 1
    assert str(p) == "1 + psi[1,0|0,2](x) + 1/2*x^2"


@pytest.mark.parametrize("seed", range(8))
def test_ring_laws(seed):
    rng = random.Random(seed)
    pool = symbol_pool()
    f, g, k = (rand_poly(rng, pool) for _ in range(3))
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) * k == f * k + g * k
    assert (f * g) * k == f * (g * k)
    assert f + PsiPolynomial.zero() == f
    assert f * PsiPolynomial.constant(1) == f


@pytest.mark.parametrize("seed", range(8))
def test_evaluation_is_a_ring_homomorphism(seed):
    rng = random.Random(50 + seed)
    pool = symbol_pool()
    f, g = rand_poly(rng, pool), rand_poly(rng, pool)
    assignment = {
        s: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for s in pool
    }
    assert (f + g).evaluate(assignment) == f.evaluate(assignment) + g.evaluate(assignment)
    assert (f * g).evaluate(assignment) == f.evaluate(assignment) * g.evaluate(assignment)


def test_evaluate_missing_symbol_raises():
    x = PsiPolynomial.variable("x", 2)
    with pytest.raises(KeyError):
        x.evaluate({})


def test_polynomials_work_as_series_coefficients():
    # exp(x*t) has coefficients x^n / n!
    from orbigenus.orbits import TransitiveOrbit

    x = PsiPolynomial.variable("x", 1)
    s = TruncatedSeries([PsiPolynomial.zero(), x], prec=4).exp()
    assert s.coeffs[0] == 1
    assert s.coeffs[1] == x
    assert s.coeffs[2] == x * x * Fraction(1, 2)
    assert s.coeffs[4] == x ** 4 * Fraction(1, 24)
    # and specializing x commutes with the series operation
    sym = PsiSymbol("x", TransitiveOrbit.trivial(1))
    two = TruncatedSeries([0, 2], prec=4).exp()
    for n in range(5):
        c = s.coeffs[n]
        val = c.evaluate({sym: Fraction(2)}) if isinstance(c, PsiPolynomial) else Fraction(c)
        assert val == two.coeffs[n]
