"""Signed integers in factored form."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import factorize


@dataclass(frozen=True)
class FactoredInt:
    """A nonzero integer as sign * prod(p^e), factors sorted, exponents >= 1."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError("factors must be sorted primes with exponent >= 1")
            last = p

    @classmethod
    def from_int(cls, n: int) -> "FactoredInt":
        if n == 0:
            raise ValueError("FactoredInt is nonzero")
        return cls(1 if n > 0 else -1, tuple(sorted(factorize(n).items())))

    def to_int(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v

    def exponents(self) -> dict[int, int]:
        return dict(self.factors)

    def valuation(self, p: int) -> int:
        return self.exponents().get(p, 0)

    def __abs__(self) -> "FactoredInt":
        return FactoredInt(1, self.factors)

    def __mul__(self, other: "FactoredInt") -> "FactoredInt":
        exps = self.exponents()
        for p, e in other.factors:
            exps[p] = exps.get(p, 0) + e
        return FactoredInt(
            self.sign * other.sign,
            tuple(sorted((p, e) for p, e in exps.items() if e)),
        )

    def pow(self, k: int) -> "FactoredInt":
        if k < 0:
            raise ValueError("negative power")
        if k == 0:
            return FactoredInt(1, ())
        return FactoredInt(
            self.sign if k % 2 else 1,
            tuple((p, e * k) for p, e in self.factors),
        )

    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


ONE = FactoredInt(1, ())


def fi(n: int) -> FactoredInt:
    return FactoredInt.from_int(n)


def lcm_abs(a: FactoredInt, b: FactoredInt) -> FactoredInt:
    """lcm of absolute values."""
    exps = a.exponents()
    for p, e in b.factors:
        exps[p] = max(exps.get(p, 0), e)
    return FactoredInt(1, tuple(sorted(exps.items())))


def gcd_abs(a: FactoredInt, b: FactoredInt) -> FactoredInt:
    eb = b.exponents()
    exps = {p: min(e, eb[p]) for p, e in a.factors if p in eb}
    return FactoredInt(1, tuple(sorted((p, e) for p, e in exps.items() if e)))
