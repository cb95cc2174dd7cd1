"""
Integer arithmetic shared by the curve, symbol and group-ring layers.
"""

from math import gcd

from sympy import factorint, isprime, primerange


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) and g >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def inverse_mod(a: int, m: int) -> int:
    """Inverse of a modulo m (m >= 1)."""
    if m == 1:
        return 0
    return pow(a, -1, m)


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def prime_divisors(n: int) -> list[int]:
    """Sorted prime divisors of |n|."""
    return sorted(factorint(abs(n)))


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n."""
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def primes_up_to(bound: int) -> list[int]:
    """Primes p <= bound."""
    return list(primerange(2, bound + 1))


def units_mod(m: int) -> list[int]:
    """Residues 0 <= a < m coprime to m (0 is the unit of Z/1)."""
    if m == 1:
        return [0]
    return [a for a in range(1, m) if gcd(a, m) == 1]


def lift_unit(b: int, f: int, m: int) -> int:
    """Smallest a >= 0 with a = b mod f and gcd(a, m) = 1, for f | m."""
    a = b % f if f > 1 else 0
    while gcd(a, m) != 1:
        a += f
    return a % m if m > 1 else 0


__all__ = [
    "gcd",
    "isprime",
    "xgcd",
    "inverse_mod",
    "valuation",
    "prime_divisors",
    "divisors",
    "primes_up_to",
    "units_mod",
    "lift_unit",
]
