"""Cyclic cubic and cyclic quartic fields via conductors and characters."""

from __future__ import annotations

import math
from typing import Iterator

from ..arith import factorize, primes_upto
from ..factored import FactoredInt
from .records import CyclicCubicProvenance, CyclicQuarticProvenance, FieldRecord

# ---------------------------------------------------------------------------
# cyclic cubics: conductor f = 9^eps * p1...pk, p_i distinct primes = 1 mod 3;
# there are 2^(omega(f)-1) fields of conductor f, disc = f^2


def cyclic_cubic_conductors(f_max: int) -> list[tuple[int, int]]:
    """(conductor, number of fields) for all conductors <= f_max, ascending."""
    base = [p for p in primes_upto(f_max) if p % 3 == 1]
    items = [1]
    weights = {1: 0}  # omega
    for p in [9] + base if f_max >= 9 else base:
        new = []
        for m in items:
            v = m * p
            if v <= f_max:
                new.append(v)
                weights[v] = weights[m] + 1
        items.extend(new)
    out = []
    for m in sorted(items):
        if m == 1:
            continue
        out.append((m, 1 << (weights[m] - 1)))
    return out


def count_cyclic_cubic_fields(f: int) -> int:
    """Number of cyclic cubic fields with conductor exactly f (0 if inadmissible)."""
    fact = factorize(f)
    omega = 0
    for p, e in fact.items():
        if p == 3:
            if e != 2:
                return 0
        elif p % 3 != 1 or e != 1:
            return 0
        omega += 1
    return 0 if omega == 0 else 1 << (omega - 1)


def enum_cyclic_cubic(disc_bound: int) -> Iterator[FieldRecord]:
    """All cyclic cubic fields with disc = f^2 <= disc_bound, ascending disc."""
    if disc_bound < 1:
        raise ValueError("bound must be positive")
    f_max = math.isqrt(disc_bound)
    for f, count in cyclic_cubic_conductors(f_max):
        disc = FactoredInt(1, tuple((p, 2 * e) for p, e in sorted(factorize(f).items())))
        for index in range(count):
            yield FieldRecord(
                degree=3,
                galois_label="C3",
                disc=disc,
                provenance=CyclicCubicProvenance(f=f, index=index),
            )


def cyclic_cubic_disc_counts(n_max: int) -> dict[int, int]:
    """disc -> number of cyclic cubic fields, for disc <= n_max."""
    return {
        f * f: c for f, c in cyclic_cubic_conductors(math.isqrt(n_max))
    }


# ---------------------------------------------------------------------------
# cyclic quartics via primitive order-4 characters
#
# A quartic cyclic field corresponds to a conjugate pair {chi, chibar} of
# primitive order-4 characters; disc = f(chi)^2 * f(chi^2), and the quadratic
# subfield is the (real) field of chi^2.


def _local_quartic_components(p: int, allow_order4: bool):
    """Primitive character components at an odd prime p: (order, count, sqcond).

    order-2 components exist for every odd p (count 1, square has conductor 1);
    order-4 components exist iff p = 1 (mod 4) (count 2, square has conductor p).
    """
    comps = [(2, 1, 1)]
    if allow_order4 and p % 4 == 1:
        comps.append((4, 2, p))
    return comps


_TWO_PART = {
    # 2-part conductor -> list of (component order, count, conductor of square)
    1: [(1, 1, 1)],
    4: [(2, 1, 1)],
    8: [(2, 2, 1)],
    16: [(4, 4, 8)],
}


def cyclic_quartic_conductor_data(f: int) -> list[tuple[int, int]]:
    """For conductor f: [(quad_subfield_conductor, field_count), ...].

    Each unordered conjugate pair of primitive order-4 characters mod f gives
    one field; the square character's conductor determines the quadratic
    subfield (always real).
    """
    fact = factorize(f)
    two = 1
    odd_parts = []
    for p, e in fact.items():
        if p == 2:
            two = 2**e
        else:
            if e != 1:
                return []
            odd_parts.append(p)
    if two not in _TWO_PART:
        return []
    # assemble choices per prime
    choices = [_TWO_PART[two]] if two > 1 else []
    for p in odd_parts:
        choices.append(_local_quartic_components(p, allow_order4=True))
    if not choices:
        return []
    results: dict[int, int] = {}

    def rec(i: int, order_lcm: int, count: int, sqcond: int):
        if i == len(choices):
            if order_lcm == 4:
                results[sqcond] = results.get(sqcond, 0) + count
            return
        for order, cnt, sq in choices[i]:
            rec(i + 1, math.lcm(order_lcm, order), count * cnt, sqcond * sq)

    rec(0, 1, 1, 1)
    # character pairs {chi, chibar}: each field counted twice
    return sorted((sq, c // 2) for sq, c in results.items() if c)


def enum_cyclic_quartic(disc_bound: int) -> Iterator[FieldRecord]:
    """All cyclic quartic fields with disc = f^2 * f2 <= disc_bound, ascending disc.

    The record stores the character conductor f and the quadratic subfield
    discriminant (f2 as a positive fundamental discriminant).
    """
    if disc_bound < 1:
        raise ValueError("bound must be positive")
    items = []
    f_max = math.isqrt(disc_bound)
    for f in range(3, f_max + 1):
        for sqcond, count in cyclic_quartic_conductor_data(f):
            disc = f * f * sqcond
            if disc <= disc_bound:
                for i in range(count):
                    items.append((disc, f, sqcond, i))
    items.sort()
    for disc, f, sqcond, i in items:
        yield FieldRecord(
            degree=4,
            galois_label="C4",
            disc=FactoredInt.from_int(disc),
            provenance=CyclicQuarticProvenance(
                conductor=f, quad_disc=sqcond, char_exponents=(i,)
            ),
        )
