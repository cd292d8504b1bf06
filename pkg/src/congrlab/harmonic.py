"""Multiple harmonic sums and their odd-indexed and alternating variants.

Conventions (the index order matters and is guarded by tests):

* H_n(a_1, ..., a_r) sums 1/(k_1^a_1 * ... * k_r^a_r) over
  0 < k_1 < k_2 < ... < k_r <= n, with a_1 attached to the SMALLEST index.
* The odd variant Hbar_n(a_1, ..., a_r) sums over odd denominators
  2k_i + 1 with 0 <= k_1 < ... < k_r < n.
* The empty composition gives 1 (empty product convention); any nonempty
  composition at n = 0 gives 0 (empty sum).

Both are computed by a depth-wise dynamic program in O(depth * n) ring
operations; the modular instantiation runs on raw integers with a batched
inverse table.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NonUnitDenominator, PreconditionViolated
from .exactalg import QQ
from .modring import PrimePower, Residue, inverse_table

__all__ = [
    "repeated",
    "mhs",
    "odd_mhs",
    "alternating_half_sum",
]


def repeated(a: int, r: int) -> tuple[int, ...]:
    """The composition {a}^r: r copies of the part a."""
    if a < 1 or r < 0:
        raise PreconditionViolated(f"repeated({a}, {r}): need a >= 1, r >= 0")
    return (a,) * r


def _validated(comp) -> tuple[int, ...]:
    comp = tuple(comp)
    if any(not isinstance(a, int) or a < 1 for a in comp):
        raise PreconditionViolated(f"composition parts must be positive integers: {comp}")
    return comp


@lru_cache(maxsize=8192)
def _mhs_mod(n: int, comp: tuple[int, ...], ring: PrimePower) -> int:
    if n >= ring.p:
        raise NonUnitDenominator(f"H_{n} mod {ring.p}^{ring.k} hits the denominator p")
    m = ring.modulus
    inv = inverse_table(ring)
    r = len(comp)
    acc = [1] + [0] * r
    for i in range(1, n + 1):
        invi = inv[i]
        for d in range(r, 0, -1):
            acc[d] = (acc[d] + acc[d - 1] * pow(invi, comp[d - 1], m)) % m
    return acc[r]


@lru_cache(maxsize=8192)
def _odd_mhs_mod(n: int, comp: tuple[int, ...], ring: PrimePower) -> int:
    if 2 * n - 1 >= ring.p:
        raise NonUnitDenominator(f"Hbar_{n} mod {ring.p}^{ring.k} hits the denominator p")
    m = ring.modulus
    inv = inverse_table(ring)
    r = len(comp)
    acc = [1] + [0] * r
    for i in range(n):
        invi = inv[2 * i + 1]
        for d in range(r, 0, -1):
            acc[d] = (acc[d] + acc[d - 1] * pow(invi, comp[d - 1], m)) % m
    return acc[r]


def mhs(n: int, comp, ring=QQ):
    """H_n(a_1, ..., a_r) in the given coefficient ring."""
    comp = _validated(comp)
    if isinstance(ring, PrimePower):
        return Residue(_mhs_mod(n, comp, ring), ring)
    one = ring.one()
    r = len(comp)
    acc = [one] + [ring.zero()] * r
    for i in range(1, n + 1):
        inv_i = ring.div(one, ring.from_int(i))
        for d in range(r, 0, -1):
            acc[d] = acc[d] + acc[d - 1] * inv_i ** comp[d - 1]
    return acc[r]


def odd_mhs(n: int, comp, ring=QQ):
    """Hbar_n(a_1, ..., a_r): the odd-denominator variant."""
    comp = _validated(comp)
    if isinstance(ring, PrimePower):
        return Residue(_odd_mhs_mod(n, comp, ring), ring)
    one = ring.one()
    r = len(comp)
    acc = [one] + [ring.zero()] * r
    for i in range(n):
        inv_i = ring.div(one, ring.from_int(2 * i + 1))
        for d in range(r, 0, -1):
            acc[d] = acc[d] + acc[d - 1] * inv_i ** comp[d - 1]
    return acc[r]


def alternating_half_sum(n: int, d: int, odd_denominators: bool, ring=QQ):
    """Signed one-row sums used by the alternating-series checks.

    With ``odd_denominators`` True: sum of (-1)^k/(2k+1)^d over 0 <= k <= n-1.
    Otherwise: sum of (-1)^k/k^d over 1 <= k <= n.
    """
    if d < 1:
        raise PreconditionViolated(f"exponent d must be positive, got {d}")
    if isinstance(ring, PrimePower):
        top = 2 * n - 1 if odd_denominators else n
        if top >= ring.p:
            raise NonUnitDenominator(f"alternating sum to {top} hits the denominator p")
        m = ring.modulus
        inv = inverse_table(ring)
        total = 0
        if odd_denominators:
            for k in range(n):
                term = pow(inv[2 * k + 1], d, m)
                total = (total - term if k & 1 else total + term) % m
        else:
            for k in range(1, n + 1):
                term = pow(inv[k], d, m)
                total = (total - term if k & 1 else total + term) % m
        return Residue(total, ring)
    one = ring.one()
    total = ring.zero()
    if odd_denominators:
        for k in range(n):
            term = ring.div(one, ring.from_int(2 * k + 1)) ** d
            total = total - term if k & 1 else total + term
    else:
        for k in range(1, n + 1):
            term = ring.div(one, ring.from_int(k)) ** d
            total = total - term if k & 1 else total + term
    return total
