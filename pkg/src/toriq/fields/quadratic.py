"""Quadratic fields: fundamental discriminant streams and exact counting."""

from __future__ import annotations

from typing import Iterator

from ..arith import fundamental_count, squarefree_sieve
from ..factored import FactoredInt
from .records import FieldRecord, QuadraticProvenance

DEFAULT_BOUND = 10**8
_BLOCK = 1 << 16


def _fundamental_in_block(lo: int, hi: int) -> list[int]:
    """Fundamental discriminants with lo <= |d| < hi, sorted by (|d|, d)."""
    flags = squarefree_sieve(lo, hi)
    mlo = max(lo // 4, 1)
    mflags = squarefree_sieve(mlo, hi // 4 + 1)
    out = []
    for n in range(lo, hi):
        r = n % 4
        if r == 3 and flags[n - lo]:
            out.append(-n)
        elif r == 1 and flags[n - lo] and n > 1:
            out.append(n)
        elif r == 0:
            m = n // 4
            if m >= mlo and mflags[m - mlo]:
                rm = m % 4
                if rm in (1, 2):
                    out.append(-n)
                if rm in (2, 3):
                    out.append(n)
    out.sort(key=lambda d: (abs(d), d))
    return out


def enum_quadratic(
    bound: int, block: int = _BLOCK, workers: int = 1
) -> Iterator[FieldRecord]:
    """All quadratic fields with |disc| <= bound, ascending |disc| (negative first
    on ties). Work is partitioned into fixed blocks so output is identical for
    any worker count."""
    if bound < 1:
        raise ValueError("bound must be positive")
    blocks = [(lo, min(lo + block, bound + 1)) for lo in range(1, bound + 1, block)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_block_worker, blocks)
            for chunk in chunks:
                yield from map(_record_from_pair, chunk)
    else:
        for lo, hi in blocks:
            for d in _fundamental_in_block(lo, hi):
                yield _make_record(d)


def _block_worker(span: tuple[int, int]) -> list[tuple[int, tuple]]:
    return [(d, tuple(FactoredInt.from_int(d).factors)) for d in _fundamental_in_block(*span)]


def _record_from_pair(pair: tuple[int, tuple]) -> FieldRecord:
    d, factors = pair
    return FieldRecord(
        degree=2,
        galois_label="C2",
        disc=FactoredInt(1 if d > 0 else -1, factors),
        provenance=QuadraticProvenance(d),
    )


def _make_record(d: int) -> FieldRecord:
    return FieldRecord(
        degree=2,
        galois_label="C2",
        disc=FactoredInt.from_int(d),
        provenance=QuadraticProvenance(d),
    )


def count_quadratic(bound: int) -> int:
    """#{quadratic fields : |disc| <= bound}, exact, O(sqrt bound)."""
    return fundamental_count(bound)


def quadratic_indicator_vector(n_max: int) -> list[int]:
    """v[n] = number of quadratic fields with |disc| = n, for 0 <= n <= n_max."""
    v = [0] * (n_max + 1)
    flags = squarefree_sieve(1, n_max + 1)
    for n in range(3, n_max + 1):
        r = n % 4
        if r == 3 and flags[n - 1]:
            v[n] += 1
        elif r == 1 and flags[n - 1]:
            v[n] += 1
        elif r == 0:
            m = n // 4
            if flags[m - 1]:
                rm = m % 4
                if rm == 2:
                    v[n] += 2
                elif rm in (1, 3):
                    v[n] += 1
    return v
