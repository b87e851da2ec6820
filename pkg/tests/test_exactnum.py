from __future__ import annotations

import cmath
from fractions import Fraction

import pytest

from crverify.exactnum import (
    ONE,
    ZERO,
    Cyclotomic,
    as_cyclotomic,
    cyc_add,
    cyc_inv,
    cyc_mul,
    cyc_sum,
    cyclotomic_polynomial,
    euler_phi,
    galois_conjugate,
    prime_factors,
)

z = Cyclotomic.zeta


def test_gauss_sum_seven():
    a = z(7, 1) + z(7, 2) + z(7, 4)
    assert a.conductor == 7
    assert a * a + a + 2 == ZERO
    # numerical embedding agrees with (-1 + sqrt(-7))/2
    assert abs(complex(a) - (-1 + cmath.sqrt(-7)) / 2) < 1e-12
    assert a == (Cyclotomic.sqrt_rational(-7) - 1) / 2


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 21, 30, 36])
def test_root_times_inverse_root(n):
    assert cyc_mul(z(n, 1), z(n, n - 1)) == ONE


def test_golden_ratio():
    a = 1 + z(5, 1) + z(5, 4)
    assert a * a == a + 1
    assert a == (1 + Cyclotomic.sqrt_rational(5)) / 2
    assert a.conjugate() == a


def test_galois_pairs():
    alpha = z(7, 1) + z(7, 2) + z(7, 4)
    abar = galois_conjugate(alpha, -1)
    assert abar != alpha
    assert alpha + abar == -1 and alpha * abar == 2
    beta = (Cyclotomic.sqrt_rational(-11) - 1) / 2
    bbar = beta.conjugate()
    assert beta + bbar == -1 and beta * bbar == 3
    assert galois_conjugate(Fraction(3, 7), 5) == Fraction(3, 7)


def test_galois_requires_coprime_exponent():
    with pytest.raises(ValueError):
        z(12, 1).galois(2)


def test_galois_is_automorphism():
    a, b = z(15, 2) + Fraction(1, 3), z(15, 7) - z(15, 1)
    for k in (2, 4, 7, 8, 11, 13, 14):
        assert (a * b).galois(k) == a.galois(k) * b.galois(k)
        assert (a + b).galois(k) == a.galois(k) + b.galois(k)


def test_conductor_minimality():
    w = z(6, 1) - z(6, 1) + 3
    assert w.conductor == 1 and w.is_integer() and int(w) == 3
    assert z(6, 2) == z(3, 1) and z(6, 2).conductor == 3
    assert (z(8, 1) + z(8, 7)).conductor == 8
    assert (z(8, 1) + z(8, 7)) ** 2 == 2
    assert (z(12, 3)).conductor == 4


def test_canonical_form_uniqueness():
    a = z(9, 1) + z(9, 4) + z(9, 7)  # zeta_9 (1 + zeta_3 + zeta_3^2)
    assert a == ZERO
    assert a.coeffs == ZERO.coeffs and a.conductor == 1


def test_rational_roundtrip():
    q = Cyclotomic.rational(Fraction(-22, 6))
    assert q.to_fraction() == Fraction(-11, 3)
    assert q.is_rational() and not q.is_integer()
    with pytest.raises(ValueError):
        z(3).to_fraction()


def test_text_roundtrip():
    for v in (ZERO, ONE, Cyclotomic.rational(Fraction(5, 7)), z(7, 3) * Fraction(2, 3) + 1,
              Cyclotomic.sqrt_rational(-11)):
        assert Cyclotomic.from_text(v.to_text()) == v
    with pytest.raises(ValueError):
        Cyclotomic.from_text("cyc(5)[1,2]")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        cyc_inv(ZERO)
    with pytest.raises(ZeroDivisionError):
        ONE / (z(3) + z(3, 2) + 1)


def test_inverse_and_helpers():
    a = z(7, 1) + 2
    assert cyc_mul(a, cyc_inv(a)) == ONE
    assert cyc_add(1, 2) == 3
    assert cyc_sum(z(5, k) for k in range(5)) == ZERO
    assert as_cyclotomic(Fraction(1, 2)) == Cyclotomic.rational(Fraction(1, 2))


@pytest.mark.parametrize("d", [-1, -3, -7, -11, 2, 3, 5, 6, -15, 12])
def test_sqrt_rational(d):
    s = Cyclotomic.sqrt_rational(d)
    assert s * s == d


def test_number_theory_helpers():
    assert prime_factors(660) == [2, 3, 5, 11]
    assert [euler_phi(n) for n in (1, 7, 12, 36)] == [1, 6, 4, 12]
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert len(cyclotomic_polynomial(15)) == euler_phi(15) + 1


def test_complex_conjugation_involution():
    a = z(11, 3) * 5 - z(11, 2) + Fraction(1, 4)
    assert a.conjugate().conjugate() == a
    assert abs(complex(a.conjugate()) - complex(a).conjugate()) < 1e-12
