"""Non-Galois cubic fields via classes of integral binary cubic forms.

Classes of irreducible forms biject with cubic orders (disc preserved); maximal
orders are cut out by a per-prime sieve on forms. A class with positive
discriminant is represented by a form whose Hessian (P, Q, R) is reduced
(0 <= Q <= P <= R up to the orientation flip); with negative discriminant by a
form whose unique upper-half-plane root lies in the classical fundamental
domain. Enumeration regions are derived from exact inequalities:

  positive disc:  27 D a^2 <= 4 P^3,  P <= sqrt(D),  |b| <= 3a/2 + sqrt(P)
  negative disc:  a <= (16|D|/27)^(1/4),  |root| <= 1/2 + (|D|/(3a^4))^(1/4)
"""

from __future__ import annotations

import math
from typing import Iterator

from ..arith import factorize, is_square
from ..factored import FactoredInt
from .records import BinaryCubicForm, FieldRecord

Quad = tuple[int, int, int, int]


def form_disc(a: int, b: int, c: int, d: int) -> int:
    return (
        18 * a * b * c * d
        + b * b * c * c
        - 4 * a * c**3
        - 4 * b**3 * d
        - 27 * a * a * d * d
    )


def hessian(a: int, b: int, c: int, d: int) -> tuple[int, int, int]:
    return (b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d)


def apply_gl2(f: Quad, m: tuple[int, int, int, int]) -> Quad:
    """(f o m)(x, y) = f(px + qy, rx + sy) for m = (p, q, r, s)."""
    a, b, c, d = f
    p, q, r, s = m
    a2 = a * p**3 + b * p * p * r + c * p * r * r + d * r**3
    b2 = (
        3 * a * p * p * q
        + b * (p * p * s + 2 * p * q * r)
        + c * (2 * p * r * s + q * r * r)
        + 3 * d * r * r * s
    )
    c2 = (
        3 * a * p * q * q
        + b * (2 * p * q * s + q * q * r)
        + c * (p * s * s + 2 * q * r * s)
        + 3 * d * r * s * s
    )
    d2 = a * q**3 + b * q * q * s + c * q * s * s + d * s**3
    return (a2, b2, c2, d2)


_SMALL_GL2 = tuple(
    (p, q, r, s)
    for p in range(-2, 3)
    for q in range(-2, 3)
    for r in range(-2, 3)
    for s in range(-2, 3)
    if p * s - q * r in (1, -1)
)


def _form_eval(f: Quad, x: int, y: int) -> int:
    a, b, c, d = f
    return a * x**3 + b * x * x * y + c * x * y * y + d * y**3


def _has_rational_root(f: Quad) -> bool:
    """Rational root x/y (y | a-divisor, x | d-divisor) of the cubic form."""
    a, b, c, d = f
    if a == 0 or d == 0:
        return True
    for x in _divisors_signed(d):
        for y in _divisors_positive(a):
            if math.gcd(x, y) == 1 and _form_eval(f, x, y) == 0:
                return True
    return False


def _divisors_positive(n: int) -> list[int]:
    n = abs(n)
    out = []
    for i in range(1, math.isqrt(n) + 1):
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
    return out


def _divisors_signed(n: int) -> list[int]:
    pos = _divisors_positive(n)
    return pos + [-x for x in pos]


# ---------------------------------------------------------------------------
# weak reduction regions (used both by enumeration and boundary dedupe)


def _in_region_pos(f: Quad) -> bool:
    a = f[0]
    if a <= 0:
        return False
    P, Q, R = hessian(*f)
    return P > 0 and abs(Q) <= P <= R


def _in_region_neg(f: Quad) -> bool:
    a, b, c, d = f
    if a <= 0 or d == 0:
        return False
    # root tests: theta in [-(a+b)/a, (a-b)/a] and |product of complex pair| >= 1
    if _form_eval(f, a - b, a) < 0:
        return False
    if _form_eval(f, -(a + b), a) > 0:
        return False
    t = _form_eval(f, -d, a)
    return t >= 0 if d < 0 else t <= 0


def _canonical_key(f: Quad, positive: bool) -> Quad:
    """Lexicographic minimum over the small-transform orbit inside the region."""
    region = _in_region_pos if positive else _in_region_neg
    best = None
    for m in _SMALL_GL2:
        g = apply_gl2(f, m)
        if g[0] < 0:
            g = tuple(-x for x in g)
        if region(g):
            if best is None or g < best:
                best = g
    assert best is not None  # f itself is in the region via the identity
    return best


def _is_boundary_pos(f: Quad) -> bool:
    P, Q, R = hessian(*f)
    return Q == 0 or abs(Q) == P or P == R


def _is_boundary_neg(f: Quad) -> bool:
    a, b, c, d = f
    return (
        _form_eval(f, a - b, a) == 0
        or _form_eval(f, -(a + b), a) == 0
        or _form_eval(f, -d, a) == 0
        or _form_eval(f, -b, a) == 0  # u = 0
    )


# ---------------------------------------------------------------------------
# maximality sieve


def _fp_inv(x: int, p: int) -> int:
    return pow(x, p - 2, p)


def _multiple_roots_mod_p(f: Quad, p: int) -> tuple[list[int], bool]:
    """(finite multiple roots r of the form mod p, infinity multiple?)."""
    a, b, c, d = f
    if p <= 3:
        roots = []
        for r in range(p):
            v = _form_eval(f, r, 1) % p
            dv = (3 * a * r * r + 2 * b * r + c) % p
            if v == 0 and dv == 0:
                roots.append(r)
        return roots, (a % p == 0 and b % p == 0)
    ab, bb, cb, db = a % p, b % p, c % p, d % p
    if ab:
        # monic gcd(f, f') has degree <= 2 and is a power of one linear factor
        from ..dedekind import fp_gcd

        fbar = (db, cb, bb, ab)
        fder = (cb, 2 * bb % p, 3 * ab % p)
        g = fp_gcd(fbar, fder, p)
        if len(g) == 1:
            return [], False
        if len(g) == 2:
            r = (-g[0]) * _fp_inv(g[1], p) % p
            return [r], False
        # triple root: g = (x - r)^2
        r = (-g[1]) * _fp_inv(2 * g[2] % p, p) % p
        return [r], False
    if bb == 0:
        return [], True
    # infinity is a simple root; finite multiple root iff the quadratic part
    # b x^2 + c x + d has a double root
    disc_q = (cb * cb - 4 * bb * db) % p
    if disc_q == 0:
        r = (-cb) * _fp_inv(2 * bb % p, p) % p
        return [r], False
    return [], False


def form_is_maximal_at(f: Quad, p: int) -> bool:
    roots, at_inf = _multiple_roots_mod_p(f, p)
    p2 = p * p
    for r in roots:
        if _form_eval(f, r, 1) % p2 == 0:
            return False
    if at_inf and f[0] % p2 == 0:
        return False
    return True


def form_is_maximal(f: Quad, disc: int | None = None) -> bool:
    """Is the cubic order of the form maximal (i.e. disc is a field discriminant)?"""
    if disc is None:
        disc = form_disc(*f)
    for p, e in factorize(disc).items():
        if e >= 2 and not form_is_maximal_at(f, p):
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration


def _content(f: Quad) -> int:
    return math.gcd(math.gcd(f[0], f[1]), math.gcd(f[2], f[3]))


def reduced_forms_positive(x_bound: int) -> Iterator[Quad]:
    """One representative per class of irreducible forms with 0 < disc <= x_bound."""
    seen_boundary: set[Quad] = set()
    p_cap = math.isqrt(x_bound)
    a_max = math.isqrt(8 * p_cap // 27) + 1
    qb = math.isqrt(p_cap) + 1  # sqrt(P) <= X^(1/4)
    for a in range(1, a_max + 1):
        b_max = (3 * a) // 2 + qb + 1
        for b in range(-b_max, b_max + 1):
            c_lo = -((p_cap - b * b) // (3 * a))
            c_hi = (b * b - 1) // (3 * a)
            for c in range(c_lo, c_hi + 1):
                P = b * b - 3 * a * c
                if P <= 0 or P > p_cap:
                    continue
                bc = b * c
                step = 9 * a
                q0 = bc % step
                for Q in range(q0, P + 1, step):
                    d = (bc - Q) // step
                    R = c * c - 3 * b * d
                    if R < P:
                        continue
                    disc = (4 * P * R - Q * Q) // 3
                    if disc < 1 or disc > x_bound:
                        continue
                    f = (a, b, c, d)
                    if _content(f) != 1 or _has_rational_root(f):
                        continue
                    if Q == 0 or Q == P or P == R:
                        key = _canonical_key(f, positive=True)
                        if key in seen_boundary:
                            continue
                        seen_boundary.add(key)
                    yield f


def reduced_forms_negative(x_bound: int) -> Iterator[Quad]:
    """One representative per class of irreducible forms with -x_bound <= disc < 0."""
    seen_boundary: set[Quad] = set()
    a_max = int((16 * x_bound / 27) ** 0.25) + 1
    for a in range(1, a_max + 1):
        theta_max = 0.5 + (x_bound / (3 * a**4)) ** 0.25
        v2_max = (x_bound / (4 * a**4)) ** (1 / 3)
        b_max = int(a * (theta_max + 1)) + 1
        c_lo = int(a * (1 - theta_max)) - 1
        c_hi = int(a * (theta_max + 0.25 + v2_max)) + 1
        for b in range(-b_max, b_max + 1):
            for c in range(c_lo, c_hi + 1):
                for d in _d_candidates(a, b, c, x_bound):
                    f = (a, b, c, d)
                    if not _in_region_neg(f):
                        continue
                    if _form_eval(f, -b, a) < 0:  # canonical half: u >= 0
                        continue
                    disc = form_disc(a, b, c, d)
                    if disc >= 0 or disc < -x_bound:
                        continue
                    if _content(f) != 1 or _has_rational_root(f):
                        continue
                    if _is_boundary_neg(f):
                        key = _canonical_key(f, positive=False)
                        if key in seen_boundary:
                            continue
                        seen_boundary.add(key)
                    yield f


def _d_candidates(a: int, b: int, c: int, x_bound: int) -> Iterator[int]:
    """Integer d with -x_bound <= disc(a,b,c,d) <= -1 (disc concave quadratic in d)."""
    A2 = -27 * a * a
    B2 = 18 * a * b * c - 4 * b**3
    C2 = b * b * c * c - 4 * a * c**3
    # disc(d) >= -x_bound: A2 d^2 + B2 d + C2 + x_bound >= 0
    delta1 = B2 * B2 - 4 * A2 * (C2 + x_bound)
    if delta1 < 0:
        return
    sq1 = math.isqrt(delta1)
    lo = (-B2 + sq1) // (2 * A2)  # A2 < 0: roots ordered
    hi = (-B2 - sq1) // (2 * A2) + 1
    # disc(d) <= -1: outside the open interval of roots of disc + 1
    delta2 = B2 * B2 - 4 * A2 * (C2 + 1)
    if delta2 < 0:
        yield from range(lo - 1, hi + 2)
        return
    sq2 = math.isqrt(delta2)
    mid_lo = (-B2 + sq2) // (2 * A2)
    mid_hi = (-B2 - sq2) // (2 * A2) + 1
    yield from range(lo - 1, min(hi, mid_lo) + 2)
    yield from range(max(lo, mid_hi) - 1, hi + 2)


def enum_cubic_s3(
    x_bound: int, sign: int, with_forms: bool = False
) -> Iterator[FieldRecord]:
    """Non-cyclic cubic fields with 0 < sign*disc <= x_bound, ascending |disc|.

    Exactly one record per isomorphism class; each carries its reduced form.
    """
    if x_bound < 1:
        raise ValueError("bound must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    gen = (
        reduced_forms_positive(x_bound) if sign > 0 else reduced_forms_negative(x_bound)
    )
    items = []
    for f in gen:
        disc = form_disc(*f)
        fact = factorize(disc)
        if all(e % 2 == 0 for e in fact.values()) and sign > 0:
            continue  # square discriminant: cyclic cubic, not S3
        if not _maximal_given_fact(f, fact):
            continue
        items.append((abs(disc), disc, f, fact))
    items.sort()
    for absd, disc, f, fact in items:
        yield FieldRecord(
            degree=3,
            galois_label="S3-cubic",
            disc=FactoredInt(1 if disc > 0 else -1, tuple(sorted(fact.items()))),
            provenance=BinaryCubicForm(*f),
        )


def _maximal_given_fact(f: Quad, fact: dict[int, int]) -> bool:
    for p, e in fact.items():
        if e >= 2 and not form_is_maximal_at(f, p):
            return False
    return True


def maximal_cubic_classes(x_bound: int, sign: int) -> list[Quad]:
    """All maximal irreducible classes with 0 < sign*disc <= x_bound, squares included."""
    gen = (
        reduced_forms_positive(x_bound) if sign > 0 else reduced_forms_negative(x_bound)
    )
    return [f for f in gen if form_is_maximal(f)]
