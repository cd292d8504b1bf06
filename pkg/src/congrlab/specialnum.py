"""Bernoulli and Euler numbers modulo p, by independent routes.

Two Bernoulli methods are deliberately kept free of shared logic so they can
cross-check each other:

* ``bernoulli_powersum``: for even m with 2 <= m <= p-3, the power sum
  S_m = sum_{x=1}^{p-1} x^m satisfies S_m = p*B_m (mod p^2) (Faulhaber plus
  von Staudt-Clausen p-integrality), so one O(p) pass mod p^2 yields B_m mod p.
* ``bernoulli_table``: the classical recurrence
  sum_{j=0}^{n} C(n+1, j)*B_j = 0 solved for B_n over Z/p, O(p^2) total.

Only mod-p precision is provided: every consumer multiplies these values by a
power of p at least as large as the complementary precision of its target
congruence, so higher precision is never needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DenominatorDivisibleByP, IndexOutOfRange
from .modring import PrimePower, Residue, inverse_table, prime_power

__all__ = [
    "bernoulli_powersum",
    "bernoulli_number",
    "BernoulliTable",
    "bernoulli_table",
    "bernoulli_poly_value",
    "euler_numbers",
    "euler_number",
]


@lru_cache(maxsize=8192)
def bernoulli_powersum(m: int, p: int) -> Residue:
    """B_m mod p for even 2 <= m <= p-3, via the power sum S_m mod p^2."""
    if m % 2 != 0 or not 2 <= m <= p - 3:
        raise IndexOutOfRange(f"powersum route needs even m in [2, p-3], got m={m}, p={p}")
    m2 = p * p
    s = 0
    for x in range(1, p):
        s += pow(x, m, m2)
    s %= m2
    # s = p*B_m (mod p^2); the quotient is exact by construction.
    return Residue(s // p % p, prime_power(p, 1))


def bernoulli_number(m: int, p: int) -> Residue:
    """B_m mod p for 0 <= m <= p-2, routing each index class appropriately.

    B_0 = 1, B_1 = -1/2, odd m >= 3 gives 0, and even m goes through the
    power-sum route.  All such B_m are p-integral (no index is divisible by
    p-1), so the reduction mod p is well defined.
    """
    ring = prime_power(p, 1)
    if m < 0 or m > p - 2:
        raise IndexOutOfRange(f"B_{m} mod {p} outside the p-integral range 0..p-2")
    if m == 0:
        return ring.one()
    if m == 1:
        return ring.from_fraction(Fraction(-1, 2))
    if m % 2 == 1:
        return ring.zero()
    return bernoulli_powersum(m, p)


class BernoulliTable:
    """B_0, B_1, ..., B_{p-2} mod p, built by the binomial recurrence."""

    __slots__ = ("p", "values")

    def __init__(self, p: int, values: tuple[int, ...]):
        self.p = p
        self.values = values

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, m: int) -> Residue:
        if not 0 <= m < len(self.values):
            raise IndexOutOfRange(f"Bernoulli table holds indices 0..{len(self.values) - 1}, got {m}")
        return Residue(self.values[m], prime_power(self.p, 1))


@lru_cache(maxsize=64)
def bernoulli_table(p: int) -> BernoulliTable:
    """Full table B_0..B_{p-2} mod p from sum_j C(n+1, j)*B_j = 0."""
    ring = prime_power(p, 1)
    inv = inverse_table(ring)
    vals = [0] * (p - 1)
    vals[0] = 1
    row = [1, 1]
    for n in range(1, p - 1):
        # Advance the Pascal row from C(n, .) to C(n+1, .).
        nxt = [1] * (n + 2)
        for j in range(1, n + 1):
            nxt[j] = (row[j - 1] + row[j]) % p
        row = nxt
        s = 0
        for j in range(n):
            if vals[j]:
                s += row[j] * vals[j]
        vals[n] = -s * inv[n + 1] % p
    return BernoulliTable(p, tuple(vals))


def bernoulli_poly_value(m: int, x: Fraction, p: int, table: BernoulliTable) -> Residue:
    """B_m(x) = sum_k C(m, k)*B_k*x^(m-k) mod p, for 0 <= m <= p-2."""
    if not 0 <= m <= p - 2:
        raise IndexOutOfRange(f"B_{m}(x) mod {p} outside the supported range 0..p-2")
    if table.p != p:
        raise IndexOutOfRange(f"table built for p={table.p}, evaluation asked for p={p}")
    x = Fraction(x)
    if x.denominator % p == 0:
        raise DenominatorDivisibleByP(f"evaluation point {x} has denominator divisible by {p}")
    ring = prime_power(p, 1)
    inv = inverse_table(ring)
    xv = x.numerator * pow(x.denominator, -1, p) % p
    # Accumulate C(m, k)*B_k*x^(m-k), updating the binomial multiplicatively.
    xpow = pow(xv, m, p)
    xinv = pow(xv, -1, p) if xv else 0
    total = xpow  # k = 0 term: B_0 = 1
    c = 1
    for k in range(1, m + 1):
        c = c * ((m - k + 1) % p) % p * inv[k] % p
        if xv:
            xpow = xpow * xinv % p
        else:
            xpow = 1 if k == m else 0
        b = table.values[k]
        if b:
            total = (total + c * b % p * xpow) % p
    return Residue(total % p, ring)


@lru_cache(maxsize=256)
def euler_numbers(limit: int, p: int) -> tuple[Residue, ...]:
    """E_0, E_1, ..., E_limit mod p from sum_k C(2n, 2k)*E_{2k} = 0.

    Odd-index Euler numbers are zero; even ones come from the recurrence with
    binomials updated multiplicatively (all factors below p are units).
    """
    if limit > p - 3:
        raise IndexOutOfRange(f"Euler table limit {limit} above p-3 for p={p}")
    ring = prime_power(p, 1)
    inv = inverse_table(ring)
    half = limit // 2
    evens = [0] * (half + 1)
    evens[0] = 1
    for n in range(1, half + 1):
        c = 1
        s = evens[0]
        for k in range(1, n):
            c = c * ((2 * n - 2 * k + 2) * (2 * n - 2 * k + 1) % p) % p * inv[2 * k - 1] % p * inv[2 * k] % p
            s = (s + c * evens[k]) % p
        evens[n] = -s % p
    out = []
    for i in range(limit + 1):
        out.append(ring.residue(evens[i // 2] if i % 2 == 0 else 0))
    return tuple(out)


def euler_number(m: int, p: int) -> Residue:
    """E_m mod p (zero for odd m)."""
    if m % 2 == 1:
        return prime_power(p, 1).zero()
    return euler_numbers(m, p)[m]
