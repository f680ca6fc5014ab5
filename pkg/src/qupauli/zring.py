"""Integer and modular arithmetic helpers.

Residues modulo ``d`` are always plain Python ints in ``[0, d)``.
"""
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import Optional, Tuple

from .errors import NotAUnit, OutOfRange


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``.

    The Bezout coefficients are chosen with ``|y|`` as small as possible, and
    ``y == 0`` whenever ``g == |a|`` (so a pivot that already divides its
    partner is left alone).
    """
    if a == 0 and b == 0:
        return 0, 0, 0
    if a == 0:
        return abs(b), 0, (1 if b > 0 else -1)
    if b % a == 0:
        return abs(a), (1 if a > 0 else -1), 0

    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    g, y = old_r, old_y
    if g < 0:
        g, y = -g, -y

    step = abs(a) // g
    y0 = y % step
    if abs(y0 - step) < y0:
        y0 -= step
    x0 = (g - b * y0) // a
    return g, x0, y0


def unit_inverse(a: int, d: int) -> int:
    """Multiplicative inverse of ``a`` modulo ``d`` in ``[0, d)``."""
    a %= d
    g, x, _ = ext_gcd(a, d)
    if g != 1:
        raise NotAUnit(f"{a} is not a unit modulo {d}")
    return x % d


def is_unit(a: int, d: int) -> bool:
    return gcd(a % d, d) == 1


def order_mod(a: int, d: int) -> int:
    """Additive order of ``a`` in Z_d."""
    return d // gcd(a % d, d)


def normalizing_unit(a: int, d: int) -> int:
    """A unit ``u`` with ``u*a ≡ gcd(a, d) (mod d)``.

    Every associate class of Z_d contains exactly one positive divisor of ``d``;
    this returns the unit that moves ``a`` onto it.  For ``a ≡ 0`` it returns 1.
    """
    a %= d
    if a == 0:
        return 1
    g = gcd(a, d)
    m = d // g
    u = unit_inverse(a // g, m) if m > 1 else 1
    while gcd(u, d) != 1:
        u += m
    return u % d


def solve_congruence(a: int, b: int, d: int) -> Optional[int]:
    """Smallest ``x >= 0`` with ``a*x ≡ b (mod d)``, or None if unsolvable."""
    a %= d
    b %= d
    g = gcd(a, d)
    if b % g:
        return None
    m = d // g
    if m == 1:
        return 0
    return (b // g) * unit_inverse(a // g, m) % m


@lru_cache(maxsize=None)
def factorize(d: int) -> Tuple[Tuple[int, int], ...]:
    """Prime factorization of ``d >= 1`` as increasing ``(p, alpha)`` pairs."""
    if d < 1:
        raise OutOfRange(f"cannot factor {d}")
    out = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            alpha = 0
            while d % p == 0:
                d //= p
                alpha += 1
            out.append((p, alpha))
        p += 1 if p == 2 else 2
    if d > 1:
        out.append((d, 1))
    return tuple(out)


@dataclass(frozen=True)
class Dimension:
    """A qudit dimension together with its prime factorization."""

    d: int
    factorization: Tuple[Tuple[int, int], ...]

    @classmethod
    def of(cls, d: int) -> "Dimension":
        if d < 2:
            raise OutOfRange(f"dimension must be at least 2, got {d}")
        return cls(d, factorize(d))

    def __post_init__(self):
        if prod(p**a for p, a in self.factorization) != self.d:
            raise OutOfRange("factorization does not multiply to d")

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factorization)

    @property
    def prime_powers(self) -> Tuple[int, ...]:
        return tuple(p**a for p, a in self.factorization)

    @property
    def m(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factorization)

    @property
    def is_prime(self) -> bool:
        return self.factorization == ((self.d, 1),)

    @property
    def is_square_free(self) -> bool:
        return all(a == 1 for _, a in self.factorization)


def totients(d: int) -> Tuple[int, int, int]:
    """Dedekind psi, Euler phi and Jordan's J_2 of ``d``, as exact integers."""
    psi = phi = d
    jordan2 = d * d
    for p, _ in factorize(d):
        psi = psi // p * (p + 1)
        phi = phi // p * (p - 1)
        jordan2 = jordan2 // (p * p) * (p * p - 1)
    return psi, phi, jordan2
