"""Exact 3x3 integer matrix arithmetic (row-major 9-tuples)."""

from __future__ import annotations

from itertools import combinations

Mat = tuple[int, int, int, int, int, int, int, int, int]

IDENTITY: Mat = (1, 0, 0, 0, 1, 0, 0, 0, 1)


def mat_mul(a: Mat, b: Mat) -> Mat:
    return tuple(
        a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j]
        for i in range(3)
        for j in range(3)
    )  # type: ignore[return-value]


def mat_det(a: Mat) -> int:
    return (
        a[0] * (a[4] * a[8] - a[5] * a[7])
        - a[1] * (a[3] * a[8] - a[5] * a[6])
        + a[2] * (a[3] * a[7] - a[4] * a[6])
    )


def mat_inv(a: Mat) -> Mat:
    """Inverse of a unimodular matrix (det = +-1), exact."""
    d = mat_det(a)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det={d})")
    cof = (
        a[4] * a[8] - a[5] * a[7],
        -(a[1] * a[8] - a[2] * a[7]),
        a[1] * a[5] - a[2] * a[4],
        -(a[3] * a[8] - a[5] * a[6]),
        a[0] * a[8] - a[2] * a[6],
        -(a[0] * a[5] - a[2] * a[3]),
        a[3] * a[7] - a[4] * a[6],
        -(a[0] * a[7] - a[1] * a[6]),
        a[0] * a[4] - a[1] * a[3],
    )
    return tuple(c * d for c in cof)  # type: ignore[return-value]


def mat_pow(a: Mat, n: int) -> Mat:
    if n < 0:
        return mat_pow(mat_inv(a), -n)
    r = IDENTITY
    while n:
        if n & 1:
            r = mat_mul(r, a)
        a = mat_mul(a, a)
        n >>= 1
    return r


def mat_sub_identity(a: Mat) -> Mat:
    return tuple(x - y for x, y in zip(a, IDENTITY))  # type: ignore[return-value]


def mat_rank(a: Mat) -> int:
    """Rank over Q, by exact minor tests (fraction-free)."""
    if mat_det(a) != 0:
        return 3
    for rows in combinations(range(3), 2):
        for cols in combinations(range(3), 2):
            m = (
                a[3 * rows[0] + cols[0]] * a[3 * rows[1] + cols[1]]
                - a[3 * rows[0] + cols[1]] * a[3 * rows[1] + cols[0]]
            )
            if m:
                return 2
    return 1 if any(a) else 0


def mat_order(a: Mat, cap: int = 64) -> int:
    """Multiplicative order, raising if it exceeds cap."""
    b, n = a, 1
    while b != IDENTITY:
        b = mat_mul(b, a)
        n += 1
        if n > cap:
            raise ValueError("element order exceeds cap (non-finite group?)")
    return n
