"""Exact integer and modular arithmetic primitives.

Everything operates on Python's arbitrary-precision integers.  No function
in this module (or anywhere else in the package) touches floating point,
so results stay exact at any magnitude.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Optional

__all__ = [
    "DEFAULT_FACTOR_BOUND",
    "MILLER_RABIN_BOUND",
    "FactorizationError",
    "exact_root",
    "factorize",
    "gcd_all",
    "iroot",
    "is_prime",
    "legendre_symbol",
    "mult_order",
    "powmod",
    "primes_up_to",
    "valuation",
]

#: Default ceiling for trial-division factorization.
DEFAULT_FACTOR_BOUND = 10**6

#: Miller-Rabin with the witnesses 2..41 is deterministic below this bound
#: (Sorenson & Webster).  Larger inputs are rejected, never guessed at.
MILLER_RABIN_BOUND = 3_317_044_064_679_887_385_961_981

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class FactorizationError(ValueError):
    """Trial division hit its bound while a composite cofactor remained."""


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < MILLER_RABIN_BOUND.

    Raises ValueError for inputs at or above the bound instead of
    returning a probabilistic answer.
    """
    if n >= MILLER_RABIN_BOUND:
        raise ValueError(
            "primality test is deterministic only below %d" % MILLER_RABIN_BOUND
        )
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def valuation(n: int, ell: int) -> int:
    """Largest e such that ell**e divides n.  Requires n != 0 and ell prime."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if not is_prime(ell):
        raise ValueError("valuation requires a prime ell, got %d" % ell)
    n = abs(n)
    if ell == 2:
        return (n & -n).bit_length() - 1
    e = 0
    q, r = divmod(n, ell)
    while r == 0:
        n = q
        e += 1
        q, r = divmod(n, ell)
    return e


def powmod(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus by square-and-multiply (exp >= 0, modulus >= 2)."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base, exp, modulus)


def mult_order(g: int, p: int) -> int:
    """Multiplicative order of g modulo the prime p."""
    if not is_prime(p):
        raise ValueError("mult_order requires a prime modulus")
    if g % p == 0:
        raise ValueError("g must be a unit modulo p")
    order = p - 1
    for q in factorize(p - 1):
        while order % q == 0 and pow(g, order // q, p) == 1:
            order //= q
    return order


def gcd_all(values: Iterable[int]) -> int:
    """Non-negative gcd of a non-empty collection of integers."""
    vals = list(values)
    if not vals:
        raise ValueError("gcd of an empty collection is undefined")
    return math.gcd(*vals)


def legendre_symbol(a: int, ell: int) -> int:
    """Legendre symbol (a | ell) in {-1, 0, 1} for an odd prime ell.

    Computed by Euler's criterion.  Primality of ell is the caller's
    responsibility (this sits inside point-counting loops); ell = 2 and
    even moduli are rejected outright.
    """
    if ell == 2 or ell % 2 == 0 or ell < 3:
        raise ValueError("legendre_symbol requires an odd prime modulus")
    a %= ell
    if a == 0:
        return 0
    return 1 if pow(a, (ell - 1) // 2, ell) == 1 else -1


def primes_up_to(n: int) -> List[int]:
    """All primes <= n, ascending (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(2, n + 1) if sieve[i]]


def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> Dict[int, int]:
    """Prime factorization of |n| by trial division up to ``bound``.

    A cofactor that survives trial division is kept only when it is
    certifiably prime (below the square of the last trial divisor, or
    passing the deterministic primality test); otherwise a
    FactorizationError is raised.  The result is never silently wrong.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    if bound < 2:
        raise ValueError("factor bound must be >= 2")
    n = abs(n)
    factors: Dict[int, int] = {}
    e2 = (n & -n).bit_length() - 1
    if e2 > 0:
        factors[2] = e2
        n >>= e2
    f = 3
    while f <= bound and f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            factors[f] = e
        f += 2
    if n > 1:
        if f * f > n:
            factors[n] = 1
        else:
            try:
                cofactor_is_prime = is_prime(n)
            except ValueError as exc:
                raise FactorizationError(
                    "factorization bound exceeded (cofactor too large to certify)"
                ) from exc
            if cofactor_is_prime:
                factors[n] = 1
            else:
                raise FactorizationError(
                    "factorization bound exceeded (composite cofactor %d)" % n
                )
    return factors


def iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, k >= 1, by pure-integer binary search."""
    if k < 1:
        raise ValueError("root index must be >= 1")
    if n < 0:
        raise ValueError("iroot requires n >= 0")
    if n < 2 or k == 1:
        return n
    hi = 1 << (-(-n.bit_length() // k))  # hi**k > n by construction
    lo = 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo


def exact_root(n: int, k: int) -> Optional[int]:
    """The integer r with r**k == n, or None if no such integer exists.

    Odd k supports negative n; even k returns None for negative n.
    """
    if n < 0:
        if k % 2 == 0:
            return None
        r = exact_root(-n, k)
        return None if r is None else -r
    r = iroot(n, k)
    return r if r**k == n else None
