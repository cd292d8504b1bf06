"""Tests for the central binomial sum evaluators and their exact twins."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from congrlab.errors import DenominatorDivisibleByP, PreconditionViolated
from congrlab.binomsums import (
    SumSpec,
    fib_lucas_sum,
    fib_lucas_sum_exact,
    rhs_lucas_sum,
    s1,
    s1_exact,
    s2,
    s2_exact,
    weighted_sums,
    weighted_sums_exact,
)
from congrlab.harmonic import odd_mhs
from congrlab.modring import prime_power
from congrlab.sequences import LucasParams, fibonacci, lucas_number, lucas_u_upto, lucas_v_upto

T_VALUES = [Fraction(1, 4), Fraction(-1, 4), Fraction(1, 16), Fraction(3, 16), Fraction(2)]


class TestFrozenValues:
    def test_s1_at_seven_sixteenth(self):
        # k = 0..2: 1 + 2*(1/16)/3 + 6*(1/256)/5 = 2009/1920.
        assert s1_exact(7, Fraction(1, 16), 0) == Fraction(2009, 1920)

    def test_s2_at_five_sixteenth(self):
        # k = 1..2: 2*(1/16) + 6*(1/256)/2 = 35/256.
        assert s2_exact(5, Fraction(1, 16), 1) == Fraction(35, 256)
        ring = prime_power(5, 2)
        assert int(ring.from_fraction(Fraction(35, 256))) == 10

    def test_fib_sum_at_seven(self):
        # k = 0..2: F_1 + 2*F_3/(3*16) + 6*F_5/(5*256) = 1 + 1/12 + 3/128.
        assert fib_lucas_sum_exact(7, "F") == Fraction(425, 384)
        assert int(prime_power(7, 2).from_fraction(Fraction(425, 384))) == 2

    def test_weighted_pair_small(self):
        first, second = weighted_sums_exact(7, Fraction(1, 4))
        # Direct expansion with Hbar_k(2) weights.
        h = [odd_mhs(k, (2,)) for k in range(4)]
        want_first = sum(
            Fraction(math.comb(2 * k, k), 4**k) * h[k] / (2 * k + 1) for k in range(3)
        )
        want_second = sum(Fraction(math.comb(2 * k, k), 4**k) * h[k] for k in range(4))
        assert (first, second) == (want_first, want_second)


@pytest.mark.parametrize("p,k", [(7, 2), (13, 4), (31, 3)])
def test_modular_paths_match_exact(p, k):
    ring = prime_power(p, k)
    for t in T_VALUES:
        for d in (0, 1):
            assert s1(t, d, ring) == ring.from_fraction(s1_exact(p, t, d))
            assert s2(t, d, ring) == ring.from_fraction(s2_exact(p, t, d))
        got = weighted_sums(t, ring)
        want = weighted_sums_exact(p, t)
        assert got[0] == ring.from_fraction(want[0])
        assert got[1] == ring.from_fraction(want[1])
    for kind in ("F", "L"):
        assert fib_lucas_sum(kind, ring) == ring.from_fraction(fib_lucas_sum_exact(p, kind))


def test_fib_lucas_sum_uses_odd_indices():
    # The exact twin walks W_1, W_3, W_5, ...; pin against the closed sequences.
    p = 13
    for kind, seq in (("F", fibonacci), ("L", lucas_number)):
        want = sum(
            Fraction(math.comb(2 * k, k) * seq(2 * k + 1), (2 * k + 1) * 16**k)
            for k in range((p - 1) // 2)
        )
        assert fib_lucas_sum_exact(p, kind) == want


@pytest.mark.parametrize("p", [7, 13, 29])
def test_rhs_lucas_sum_matches_iteration(p):
    ring = prime_power(p, 1)
    for c in (Fraction(3), Fraction(-1), Fraction(5, 2)):
        params = LucasParams(c, Fraction(1))
        us = lucas_u_upto(p - 1, params)
        vs = lucas_v_upto(p - 1, params)
        for d in (2, 3):
            want_u = sum(us[k] / Fraction(k) ** d for k in range(1, p))
            want_v = sum(vs[k] / Fraction(k) ** d for k in range(1, p))
            assert rhs_lucas_sum("u", c, d, ring) == ring.from_fraction(want_u)
            assert rhs_lucas_sum("v", c, d, ring) == ring.from_fraction(want_v)


class TestGuards:
    def test_exponent_range(self):
        ring = prime_power(7, 2)
        with pytest.raises(PreconditionViolated):
            s1(Fraction(1, 4), 2, ring)
        with pytest.raises(PreconditionViolated):
            s2_exact(7, Fraction(1, 4), -1)
        with pytest.raises(PreconditionViolated):
            rhs_lucas_sum("u", Fraction(1), 1, ring)

    def test_kind_guards(self):
        ring = prime_power(7, 2)
        with pytest.raises(PreconditionViolated):
            fib_lucas_sum("G", ring)
        with pytest.raises(PreconditionViolated):
            fib_lucas_sum_exact(7, "X")
        with pytest.raises(PreconditionViolated):
            rhs_lucas_sum("w", Fraction(1), 2, ring)

    def test_denominator_guard(self):
        ring = prime_power(7, 2)
        with pytest.raises(DenominatorDivisibleByP):
            s1(Fraction(1, 7), 0, ring)
        with pytest.raises(DenominatorDivisibleByP):
            weighted_sums(Fraction(3, 14), ring)


class TestSumSpec:
    def test_dispatch(self):
        ring = prime_power(11, 2)
        t = Fraction(1, 4)
        assert SumSpec("S1", t, 0).evaluate(ring) == s1(t, 0, ring)
        assert SumSpec("S2", t, 1).evaluate(ring) == s2(t, 1, ring)
        assert SumSpec("S1_weighted", t).evaluate(ring) == weighted_sums(t, ring)[0]
        assert SumSpec("S2_weighted", t).evaluate(ring) == weighted_sums(t, ring)[1]
        assert SumSpec("FibSum").evaluate(ring) == fib_lucas_sum("F", ring)
        assert SumSpec("LucSum").evaluate(ring) == fib_lucas_sum("L", ring)
        assert SumSpec("USum", Fraction(3), 2).evaluate(ring) == rhs_lucas_sum(
            "u", Fraction(3), 2, ring
        )
        assert SumSpec("VSum", Fraction(3), 3).evaluate(ring) == rhs_lucas_sum(
            "v", Fraction(3), 3, ring
        )

    def test_unknown_family(self):
        with pytest.raises(PreconditionViolated):
            SumSpec("S3", Fraction(1), 0)


@given(
    st.sampled_from((7, 13, 31)),
    st.fractions(max_denominator=30),
    st.sampled_from((0, 1)),
)
@settings(max_examples=60, deadline=None)
def test_exact_vs_modular_property(p, t, d):
    if t.denominator % p == 0:
        return
    ring = prime_power(p, 3)
    assert s1(t, d, ring) == ring.from_fraction(s1_exact(p, t, d))
    assert s2(t, d, ring) == ring.from_fraction(s2_exact(p, t, d))
