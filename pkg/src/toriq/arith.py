"""Shared exact integer arithmetic: sieves, factorization, discriminant helpers."""

from __future__ import annotations

import math
from functools import lru_cache

# ---------------------------------------------------------------------------
# primes and sieves


@lru_cache(maxsize=32)
def primes_upto(n: int) -> tuple[int, ...]:
    """All primes <= n, ascending."""
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i in range(2, n + 1) if sieve[i])


_MU_TABLE: list[int] = [0, 1]


def mobius_upto(n: int) -> list[int]:
    """mu(0..n) with mu(0) = 0; the shared table only grows (do not mutate)."""
    global _MU_TABLE
    if n >= len(_MU_TABLE):
        size = max(n, 2 * len(_MU_TABLE))
        mu = [1] * (size + 1)
        mu[0] = 0
        for p in primes_upto(size):
            mu[p::p] = [-v for v in mu[p::p]]
            p2 = p * p
            if p2 <= size:
                mu[p2::p2] = [0] * len(mu[p2::p2])
        _MU_TABLE = mu
    return _MU_TABLE


def squarefree_sieve(lo: int, hi: int) -> bytearray:
    """Flags for squarefree n in [lo, hi); index i <-> lo + i."""
    flags = bytearray([1]) * (hi - lo)
    for p in primes_upto(math.isqrt(max(hi - 1, 1))):
        q = p * p
        start = ((lo + q - 1) // q) * q
        for m in range(start, hi, q):
            flags[m - lo] = 0
    return flags


@lru_cache(maxsize=4)
def spf_table(n: int) -> bytes | list[int]:
    """Smallest-prime-factor table for 0..n (list of ints)."""
    spf = list(range(n + 1))
    for p in range(2, math.isqrt(n) + 1):
        if spf[p] == p:
            for m in range(p * p, n + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


# ---------------------------------------------------------------------------
# primality / factorization

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 2^64 with this base set."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        y, c, m = seed, seed + 1, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| (n != 0) as {p: e}."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _pollard_brent(m)
        stack.extend((d, m // d))
    return dict(sorted(out.items()))


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def squarefree_kernel(n: int) -> int:
    """Signed squarefree part: n = kernel * square, kernel squarefree."""
    if n == 0:
        raise ValueError("kernel of 0")
    k = 1 if n > 0 else -1
    for p, e in factorize(n).items():
        if e % 2:
            k *= p
    return k


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def nth_root_floor(n: int, k: int) -> int:
    """floor(n**(1/k)) for n >= 0."""
    if n < 0:
        raise ValueError
    if n == 0:
        return 0
    r = int(round(n ** (1.0 / k)))
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


# ---------------------------------------------------------------------------
# fundamental discriminants


def is_fundamental(d: int) -> bool:
    """True iff d is the discriminant of a quadratic field."""
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return _is_squarefree(abs(d))
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _is_squarefree(abs(m))
    return False


def _is_squarefree(n: int) -> bool:
    for p, e in factorize(n).items():
        if e >= 2:
            return False
    return True


def fundamental_of_square_class(n: int) -> int:
    """The fundamental discriminant (or 1) in the square class of n != 0."""
    m = squarefree_kernel(n)
    if m == 1:
        return 1
    return m if m % 4 == 1 else 4 * m


def mod4_squarefree_count(y: int, residue: int) -> int:
    """#{1 <= n <= y : n squarefree, n == residue (mod 4)} for residue in {1,2,3}.

    Exact, via the Mobius identity restricted to odd square divisors
    (even i^2 | n forces 4 | n, excluded by the residue classes).
    """
    if y < 1:
        return 0
    if residue == 2:
        # n = 2m, m odd squarefree
        total = 0
        r = math.isqrt(y // 2)
        mu = mobius_upto(r + 1)
        for i in range(1, r + 1, 2):
            if mu[i]:
                m = y // (2 * i * i)
                total += mu[i] * ((m + 1) // 2)
        return total
    total = 0
    r = math.isqrt(y)
    mu = mobius_upto(r + 1)
    for i in range(1, r + 1, 2):
        if mu[i]:
            m = y // (i * i)
            # count j <= m with j == residue (mod 4); i^2 == 1 (mod 8)
            total += mu[i] * ((m - residue) // 4 + 1 if m >= residue else 0)
    return total


@lru_cache(maxsize=None)
def fundamental_count(y: int) -> int:
    """#{fundamental discriminants d : |d| <= y}, both signs, exact in O(sqrt y)."""
    if y < 3:
        return 0
    n1 = mod4_squarefree_count(y, 1) - 1  # drop d = 1
    n3 = mod4_squarefree_count(y, 3)
    y4 = y // 4
    n4 = (
        mod4_squarefree_count(y4, 2) * 2
        + mod4_squarefree_count(y4, 3)
        + mod4_squarefree_count(y4, 1)
    )
    return n1 + n3 + n4


def fundamental_discs_upto(y: int) -> list[int]:
    """All fundamental discriminants with |d| <= y, sorted by (|d|, d)."""
    out = []
    flags = squarefree_sieve(1, y + 1)
    for n in range(3, y + 1):
        if n % 4 == 3 and flags[n - 1]:
            out.append(-n)
        elif n % 4 == 1 and flags[n - 1]:
            out.append(n)
        elif n % 4 == 0:
            m = n // 4
            if flags[m - 1]:
                r = m % 4
                if r in (1, 2):
                    out.append(-n)
                if r in (2, 3):
                    out.append(n)
    out.sort(key=lambda d: (abs(d), d))
    return out
