"""Tests for Lucas sequences, quotients, and central binomial tables."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from congrlab.errors import BaseDivisibleByP, IndexOutOfRange
from congrlab.exactalg import PolyRing
from congrlab.modring import prime_power
from congrlab.sequences import (
    BinomTable,
    LucasParams,
    central_binomials,
    fermat_quotient,
    fibonacci,
    lucas_number,
    lucas_pair,
    lucas_pair_mod,
    lucas_quotient,
    lucas_u_upto,
    lucas_v_upto,
    w_upto,
    w_value,
    w_value_mod,
)

FIB = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987, 1597, 2584, 4181, 6765]
LUC = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322, 521, 843, 1364, 2207, 3571, 5778, 9349]


class TestIntegerSequences:
    def test_fibonacci_table(self):
        assert [fibonacci(n) for n in range(21)] == FIB
        assert fibonacci(50) == 12586269025

    def test_lucas_table(self):
        assert [lucas_number(n) for n in range(20)] == LUC

    def test_lucas_pair_generic(self):
        params = LucasParams(1, -1)  # Fibonacci / Lucas
        for n in range(15):
            u, v = lucas_pair(n, params)
            assert (u, v) == (FIB[n], LUC[n])

    def test_upto_tables(self):
        params = LucasParams(1, -1)
        assert lucas_u_upto(10, params) == FIB[:11]
        assert lucas_v_upto(10, params) == LUC[:11]
        assert lucas_u_upto(0, params) == [0]
        assert lucas_v_upto(0, params) == [2]

    def test_pell_numbers(self):
        # u_n for (x, y) = (2, -1): 0, 1, 2, 5, 12, 29, 70, ...
        assert lucas_u_upto(6, LucasParams(2, -1)) == [0, 1, 2, 5, 12, 29, 70]

    def test_rational_parameters(self):
        params = LucasParams(Fraction(1, 2), Fraction(-1, 3))
        us = lucas_u_upto(4, params)
        assert us[2] == Fraction(1, 2)
        assert us[3] == us[2] * Fraction(1, 2) + Fraction(1, 3) * us[1]


class TestLucasPairMod:
    @pytest.mark.parametrize("p,k", [(7, 1), (7, 3), (101, 2)])
    def test_matches_iteration(self, p, k):
        ring = prime_power(p, k)
        for x, y in [(1, -1), (2, -1), (3, 5), (p + 4, 2)]:
            params = LucasParams(x, y)
            us = lucas_u_upto(30, params)
            vs = lucas_v_upto(30, params)
            for n in (0, 1, 2, 7, 29, 30):
                u, v = lucas_pair_mod(n, x, y, ring)
                assert int(u) == us[n] % ring.modulus
                assert int(v) == vs[n] % ring.modulus

    def test_accepts_residue_coefficients(self):
        ring = prime_power(13, 2)
        u, v = lucas_pair_mod(10, ring.from_int(1), ring.from_int(-1), ring)
        assert int(u) == FIB[10] % 169
        assert int(v) == LUC[10] % 169

    @given(
        st.integers(min_value=0, max_value=10**6),
        st.integers(min_value=-50, max_value=50),
        st.integers(min_value=-50, max_value=50),
    )
    @settings(max_examples=60, deadline=None)
    def test_doubling_consistency(self, n, x, y):
        ring = prime_power(97, 2)
        u2, v2 = lucas_pair_mod(2 * n, x, y, ring)
        u, v = lucas_pair_mod(n, x, y, ring)
        # u_{2n} = u_n * v_n  and  v_{2n} = v_n^2 - 2*y^n.
        assert u2 == u * v
        assert v2 == v * v - 2 * pow(y, n, ring.modulus)


class TestWPolynomials:
    def test_small_values(self):
        x = PolyRing().x()
        assert w_value(0, x).coeffs == (Fraction(1),)
        assert w_value(1, x).coeffs == (Fraction(1), Fraction(2))
        # w_2 = 4x^2 + 2x - 1
        assert w_value(2, x).coeffs == (Fraction(-1), Fraction(2), Fraction(4))

    def test_int_argument(self):
        assert [w_value(n, 1) for n in range(5)] == [w_upto(4, 1)[n] for n in range(5)]
        assert w_value(2, 1) == 5

    def test_mod_matches_exact(self):
        for x in (1, 2, 5):
            exact = w_upto(20, x)
            for n in (0, 1, 5, 20):
                assert w_value_mod(n, x, 169) == exact[n] % 169
                assert w_value_mod(n, x, 169) == w_value(n, x) % 169


class TestQuotients:
    def test_fermat_quotient_values(self):
        # q_5(2) = (16 - 1)/5 = 3; q_7(2) = (64 - 1)/7 = 9 = 2 mod 7.
        assert int(fermat_quotient(2, 5)) == 3
        assert int(fermat_quotient(2, 7)) == 2
        assert int(fermat_quotient(2, 5, k=3)) == 3
        assert int(fermat_quotient(3, 5)) == (81 - 1) // 5 % 5

    def test_fermat_quotient_log_property(self):
        # q_p(ab) = q_p(a) + q_p(b) mod p.
        p = 101
        for a, b in [(2, 3), (5, 7), (12, 34)]:
            assert fermat_quotient(a * b, p) == fermat_quotient(a, p) + fermat_quotient(b, p)

    def test_fermat_quotient_guard(self):
        with pytest.raises(BaseDivisibleByP):
            fermat_quotient(14, 7)

    def test_lucas_quotient_values(self):
        # L_5 = 11 -> (11-1)/5 = 2; L_7 = 29 -> (29-1)/7 = 4.
        assert int(lucas_quotient(5)) == 2
        assert int(lucas_quotient(7)) == 4
        for p in (11, 13, 31):
            assert int(lucas_quotient(p)) == (lucas_number(p) - 1) // p % p
        assert int(lucas_quotient(11, k=2)) == (lucas_number(11) - 1) // 11 % 121


class TestCentralBinomials:
    @pytest.mark.parametrize("p,k", [(7, 1), (13, 3), (997, 1)])
    def test_matches_math_comb(self, p, k):
        ring = prime_power(p, k)
        table = central_binomials(ring)
        assert len(table) == (p - 1) // 2 + 1
        for j in range(len(table)):
            assert int(table[j]) == math.comb(2 * j, j) % ring.modulus
            assert table.raw[j] == math.comb(2 * j, j) % ring.modulus

    def test_index_guard(self):
        table = central_binomials(prime_power(7, 1))
        with pytest.raises(IndexOutOfRange):
            table[4]
        with pytest.raises(IndexOutOfRange):
            table[-1]

    def test_cached(self):
        ring = prime_power(11, 2)
        assert central_binomials(ring) is central_binomials(prime_power(11, 2))
        assert isinstance(central_binomials(ring), BinomTable)
