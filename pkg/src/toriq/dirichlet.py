"""Exact Euler-product coefficient expansion, the cyclic-sextic census identity,
and Tauberian-style partial-sum exponent fitting."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .arith import primes_upto
from .fields.cyclic import cyclic_cubic_conductors
from .fields.quadratic import quadratic_indicator_vector


class OverlappingPredicates(ValueError):
    """Two factor predicates claim the same prime."""


class DegenerateGrid(ValueError):
    """Fit grid too short or not strictly increasing."""


@dataclass(frozen=True)
class EulerFactorSpec:
    """A product over primes of local factors 1 + sum coeff * p^(-k*s).

    components: (predicate, factor) pairs; predicate is either
      ("prime", p)                  - the single prime p
      ("mod", m, (r1, r2, ...))     - primes in the given residues mod m
      ("all",)                      - every prime
    factor: tuple of (k, coeff), the nonconstant terms of the local factor.
    """

    components: tuple[tuple[tuple, tuple[tuple[int, int], ...]], ...]

    def local_factor(self, p: int) -> tuple[tuple[int, int], ...] | None:
        match = None
        for pred, factor in self.components:
            hit = (
                (pred[0] == "prime" and p == pred[1])
                or (pred[0] == "mod" and p % pred[1] in pred[2])
                or pred[0] == "all"
            )
            if hit:
                if match is not None:
                    raise OverlappingPredicates(f"prime {p} matched twice")
                match = factor
        return match


def expand_euler(spec: EulerFactorSpec, n_max: int) -> list[int]:
    """Exact coefficients a[0..n_max] (a[0] unused, a[1] = 1) of the Euler product."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    a = [0] * (n_max + 1)
    a[1] = 1
    for p in primes_upto(n_max):
        factor = spec.local_factor(p)
        if not factor:
            continue
        # push contributions from indices coprime to p onto multiples of p^k
        for n in range(1, n_max // p + 1):
            if n % p == 0:
                continue
            an = a[n]
            if an:
                for k, coeff in factor:
                    idx = n * p**k
                    if idx <= n_max:
                        a[idx] += coeff * an
    return a


# the four series of the cyclic-sextic conductor identity
H_SPEC = EulerFactorSpec(
    (
        (("prime", 2), ((6, 1), (9, 2))),
        (("prime", 3), ((3, 1), (4, 2), (5, 2))),
    )
)
G1_SPEC = EulerFactorSpec(
    (
        (("mod", 6, (1,)), ((2, 2), (3, 3))),
        (("mod", 6, (5,)), ((3, 1),)),
    )
)
G2_SPEC = EulerFactorSpec(
    (
        (("prime", 2), ((2, 1), (3, 2))),
        (("mod", 2, (1,)), ((1, 1),)),
    )
)
G3_SPEC = EulerFactorSpec(
    (
        (("prime", 3), ((4, 2),)),
        (("mod", 6, (1,)), ((2, 2),)),
    )
)
# the split-prime quartic family: 1 + 3/p^s over p = +-1 mod 7
LEMMA25_SPEC = EulerFactorSpec(((("mod", 7, (1, 6)), ((1, 3),)),))

SERIES_SPECS = {
    "h": H_SPEC,
    "g1": G1_SPEC,
    "g2": G2_SPEC,
    "g3": G3_SPEC,
    "lemma25": LEMMA25_SPEC,
}


def dirichlet_convolve(a: Sequence[int], b: Sequence[int], n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for i in range(1, n_max + 1):
        ai = a[i]
        if ai:
            for j in range(1, n_max // i + 1):
                if b[j]:
                    out[i * j] += ai * b[j]
    return out


def lemma42_rhs(n_max: int) -> list[int]:
    """Coefficients of (h*g1 - g2(3s) - g3 + 1)/2: the cyclic-sextic census series.

    All arithmetic is exact; the trailing halving is checked to be exact.
    """
    h = expand_euler(H_SPEC, n_max)
    g1 = expand_euler(G1_SPEC, n_max)
    hg1 = dirichlet_convolve(h, g1, n_max)
    g2 = expand_euler(G2_SPEC, max(_icbrt(n_max), 1))
    g3 = expand_euler(G3_SPEC, n_max)
    out = hg1
    for n in range(1, len(g2)):
        if g2[n] and n**3 <= n_max:
            out[n**3] -= g2[n]
    for n in range(1, n_max + 1):
        out[n] -= g3[n]
    out[1] += 1
    for n in range(1, n_max + 1):
        assert out[n] % 2 == 0, f"odd numerator at n={n}"
        out[n] //= 2
        assert out[n] >= 0
    out[0] = 0
    return out


def census_c6(n_max: int) -> list[int]:
    """Direct census: a[n] = number of cyclic sextic fields whose conductor
    quotient lcm(|d|^3, |d| f^2) equals n, by double enumeration over quadratic
    discriminants d and cyclic cubic conductors f."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    a = [0] * (n_max + 1)
    quad = quadratic_indicator_vector(_icbrt(n_max))
    cubics = cyclic_cubic_conductors(math.isqrt(n_max))
    for m in range(3, len(quad)):
        if not quad[m]:
            continue
        m3 = m**3
        if m3 > n_max:
            break
        for f, count in cubics:
            v = m * f * f
            if v > n_max:
                break
            n = math.lcm(m3, v)
            if n <= n_max:
                a[n] += quad[m] * count
    return a


def _icbrt(n: int) -> int:
    r = round(n ** (1 / 3))
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def census_c6_count(x: float) -> int:
    """#{cyclic sextic fields : lcm(|d|^3, |d| f^2) <= x} without a coefficient array."""
    total = 0
    xi = int(x)
    quad = quadratic_indicator_vector(_icbrt(xi))
    cubics = cyclic_cubic_conductors(math.isqrt(xi))
    for m in range(3, len(quad)):
        if not quad[m]:
            continue
        m3 = m**3
        if m3 > xi:
            break
        for f, count in cubics:
            if m * f * f > xi:
                break
            if math.lcm(m3, m * f * f) <= xi:
                total += quad[m] * count
    return total


# ---------------------------------------------------------------------------
# partial-sum fitting


@dataclass(frozen=True)
class PartialSumFit:
    grid: tuple[float, ...]
    sums: tuple[float, ...]
    a_hat: float
    w_hat: float
    r2: float


def tauberian_fit(grid: Sequence[float], sums: Sequence[float]) -> PartialSumFit:
    """Least squares of log S(X) = a log X + (w - 1) log log X + const."""
    if len(grid) != len(sums) or len(grid) < 4:
        raise DegenerateGrid("need at least 4 grid points")
    if any(y <= 0 for y in sums) or any(x <= math.e for x in grid):
        raise DegenerateGrid("sums must be positive and grid beyond e")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DegenerateGrid("grid must be strictly increasing")
    import numpy as np

    lx = np.log(np.asarray(grid, dtype=float))
    lls = np.log(lx)
    ly = np.log(np.asarray(sums, dtype=float))
    design = np.column_stack([lx, lls, np.ones_like(lx)])
    coef, *_ = np.linalg.lstsq(design, ly, rcond=None)
    fitted = design @ coef
    ss_res = float(np.sum((ly - fitted) ** 2))
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return PartialSumFit(
        grid=tuple(float(x) for x in grid),
        sums=tuple(float(y) for y in sums),
        a_hat=float(coef[0]),
        w_hat=float(coef[1]) + 1.0,
        r2=r2,
    )


def partial_sums_at(coeffs: Sequence[int], grid: Sequence[int]) -> list[int]:
    out = []
    acc = 0
    pos = 1
    for x in grid:
        while pos <= min(x, len(coeffs) - 1):
            acc += coeffs[pos]
            pos += 1
        out.append(acc)
    return out


def default_grid(lo_exp: int = 8, hi_exp: int = 18) -> list[int]:
    """Geometric grid X = 10^(k/2), k = lo_exp..hi_exp."""
    return [int(round(10 ** (k / 2))) for k in range(lo_exp, hi_exp + 1)]


# ---------------------------------------------------------------------------
# divisor power sums


def divisor_power_sums(t: float, grid: Sequence[int]) -> list[tuple[int, float, float]]:
    """(X, sum of tau(n)^t for n <= X, ratio to X (log X)^(2^t - 1)) at each grid X.

    Integer t gives exact integer sums (within int64 range); fractional t is
    evaluated in double precision on the exact tau values.
    """
    import numpy as np

    grid = sorted(set(int(x) for x in grid))
    n_max = grid[-1]
    integer_t = float(t).is_integer()
    acc_int = 0
    acc_float = 0.0
    results = []
    lo = 1
    primes = primes_upto(math.isqrt(n_max))
    for x in grid:
        for blo in range(lo, x + 1, 10**7):
            bhi = min(blo + 10**7, x + 1)
            tau = _tau_block(blo, bhi, primes, np)
            if integer_t:
                acc_int += int((tau.astype(np.int64) ** int(t)).sum())
            else:
                acc_float += float(np.power(tau.astype(np.float64), t).sum())
        lo = x + 1
        total = acc_int if integer_t else acc_float
        ratio = total / (x * math.log(x) ** (2**t - 1))
        results.append((x, total, ratio))
    return results


def _tau_block(lo: int, hi: int, primes, np):
    rem = np.arange(lo, hi, dtype=np.int64)
    tau = np.ones(hi - lo, dtype=np.int64)
    for p in primes:
        start = ((lo + p - 1) // p) * p - lo
        if start >= hi - lo:
            continue
        sub = rem[start::p]
        e = np.ones(len(sub), dtype=np.int64)
        sub //= p
        while True:
            mask = sub % p == 0
            if not mask.any():
                break
            sub[mask] //= p
            e[mask] += 1
        tau[start::p] *= e + 1
    tau[rem > 1] *= 2
    return tau


def divisor_power_sum(t: float, x: int) -> tuple[float, float]:
    """Exact sum of tau(n)^t for n <= x and its ratio to x (log x)^(2^t - 1)."""
    if x < 2:
        raise ValueError("x must be at least 2")
    (res,) = divisor_power_sums(t, [x])
    return res[1], res[2]


def tau_sum_hyperbola(x: int) -> int:
    """Exact sum of tau(n) for n <= x via the hyperbola method (cross-oracle)."""
    r = math.isqrt(x)
    return 2 * sum(x // d for d in range(1, r + 1)) - r * r
