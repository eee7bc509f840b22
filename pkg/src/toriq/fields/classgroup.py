"""Form class groups of quadratic fields (narrow for positive discriminants),
with 2- and 3-torsion counts via Gauss composition of reduced forms."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..arith import is_fundamental

DEFAULT_DISC_LIMIT = 10**6


class BoundExceeded(ValueError):
    """|d| beyond the configured class-group limit."""


@dataclass(frozen=True)
class ClassGroupData:
    d: int
    h: int  # narrow class number for d > 0, class number for d < 0
    p_torsion: dict[int, int]


Form = tuple[int, int, int]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def reduce_definite(f: Form) -> Form:
    """Classical reduction of a positive definite form (d < 0)."""
    a, b, c = f
    while True:
        if c < a or (c == a and b < 0):
            a, b, c = c, -b, a
            continue
        if b > a or b <= -a:
            # translate b into (-a, a]
            k = (a - b) // (2 * a)
            b2 = b + 2 * k * a
            c = a * k * k + b * k + c
            b = b2
            continue
        if a == c and b < 0:
            b = -b
            continue
        return (a, b, c)


def reduced_definite_forms(d: int) -> list[Form]:
    """All reduced positive definite forms of discriminant d < 0."""
    assert d < 0 and d % 4 in (0, 1)
    out = []
    bmax = math.isqrt(-d // 3)
    for b in range(d % 2, bmax + 1, 2):
        q = (b * b - d) // 4
        a = max(b, 1)
        while a * a <= q:
            if a != 0 and q % a == 0:
                c = q // a
                if a >= b and c >= a:
                    if b >= 0:
                        out.append((a, b, c))
                    if 0 < b < a < c:
                        out.append((a, -b, c))
            a += 1
    # normalize sign conventions: b >= 0 when |b| == a or a == c
    forms = sorted(set(reduce_definite(f) for f in out))
    return forms


def _rho(f: Form, d: int) -> Form:
    """Reduction step for indefinite forms (d > 0)."""
    a, b, c = f
    r = math.isqrt(d)
    ac = abs(c)
    if ac > r:
        # b' in (-|c|, |c|]
        b2 = -b % (2 * ac)
        if b2 > ac:
            b2 -= 2 * ac
    else:
        # b' in (r - 2|c|, r]
        b2 = -b % (2 * ac)
        b2 += ((r - b2) // (2 * ac)) * 2 * ac
    c2 = (b2 * b2 - d) // (4 * c)
    return (c, b2, c2)


def is_reduced_indefinite(f: Form, d: int) -> bool:
    # sqrt(d) - b < 2|a| < sqrt(d) + b, 0 < b < sqrt(d); d non-square so
    # floor comparisons are strict-safe: 2|a| in (r - b, r + b] with r = isqrt(d)
    a, b, c = f
    if b <= 0:
        return False
    r = math.isqrt(d)
    if r * r == d:
        raise ValueError("square discriminant")
    return b <= r and (r - b) < 2 * abs(a) <= (r + b)


def reduce_indefinite(f: Form, d: int) -> Form:
    g = f
    for _ in range(10_000):
        if is_reduced_indefinite(g, d):
            return g
        g = _rho(g, d)
    raise RuntimeError("indefinite reduction did not converge")


def _cycle(f: Form, d: int) -> frozenset[Form]:
    start = reduce_indefinite(f, d)
    seen = {start}
    g = _rho(start, d)
    while g != start:
        seen.add(g)
        g = _rho(g, d)
    return frozenset(seen)


def reduced_indefinite_forms(d: int) -> list[Form]:
    assert d > 0 and d % 4 in (0, 1)
    r = math.isqrt(d)
    out = []
    for b in range(1, r + 1):
        if (b - d) % 2:
            continue
        q = (d - b * b) // 4
        if q <= 0:
            continue
        # 4ac = b^2 - d < 0: ac = -q; r - b < 2|a| <= r + b
        for a in range((r - b) // 2 + 1, (r + b) // 2 + 1):
            if a >= 1 and q % a == 0 and (r - b) < 2 * a <= (r + b):
                out.append((a, b, -(q // a)))
                out.append((-a, b, q // a))
    return sorted(set(out))


def principal_form(d: int) -> Form:
    b = d % 2
    return (1, b, (b * b - d) // 4)


def _form_value_coprime_transform(f: Form, m: int, d: int) -> Form:
    """An equivalent form whose leading coefficient is coprime to m."""
    a, b, c = f
    if math.gcd(a, m) == 1:
        return f
    for x in range(1, 40):
        for y in range(-40, 41):
            if math.gcd(x, y) != 1 and not (x == 1 and y == 0):
                continue
            v = a * x * x + b * x * y + c * y * y
            if v != 0 and math.gcd(v, m) == 1:
                # complete (x, y) to a proper unimodular matrix [[x, z], [y, w]]
                g, w, z = _xgcd(x, y)
                if g < 0:
                    g, w, z = -g, -w, -z
                # x*w + y*z = 1, so det [[x, -z], [y, w]] = 1
                z = -z
                a2 = v
                b2 = 2 * a * x * z + b * (x * w + z * y) + 2 * c * y * w
                c2 = a * z * z + b * z * w + c * w * w
                return (a2, b2, c2)
    raise RuntimeError("no representative with coprime leading coefficient found")


def compose(f1: Form, f2: Form, d: int) -> Form:
    """Gauss composition of primitive forms of the same discriminant (not reduced)."""
    f2 = _form_value_coprime_transform(f2, 2 * f1[0], d)
    a1, b1, _ = f1
    a2, b2, _ = f2
    # leading coefficients now coprime: CRT for B == b1 (2a1), B == b2 (2a2)
    g, u, v = _xgcd(2 * a1, 2 * a2)
    assert (b2 - b1) % g == 0
    lcm = 2 * a1 * a2 * 2 // g
    b = (b1 + 2 * a1 * ((b2 - b1) // g) * u) % lcm
    A = a1 * a2
    assert (b * b - d) % (4 * A) == 0
    return (A, b, (b * b - d) // (4 * A))


class ClassGroup:
    """Class group of a fundamental discriminant via reduced forms.

    For d > 0 this is the narrow group: classes are cycles of reduced
    indefinite forms under proper equivalence.
    """

    def __init__(self, d: int, limit: int = DEFAULT_DISC_LIMIT):
        if abs(d) > limit:
            raise BoundExceeded(f"|d| = {abs(d)} beyond limit {limit}")
        if not is_fundamental(d):
            raise ValueError(f"{d} is not a fundamental discriminant")
        self.d = d
        if d < 0:
            self.forms = reduced_definite_forms(d)
            self._index = {f: i for i, f in enumerate(self.forms)}
        else:
            cycles = []
            seen: set[Form] = set()
            for f in reduced_indefinite_forms(d):
                if f in seen:
                    continue
                cyc = _cycle(f, d)
                seen |= cyc
                cycles.append(cyc)
            self.cycles = cycles
            self._index = {}
            for i, cyc in enumerate(cycles):
                for f in cyc:
                    self._index[f] = i
            self.forms = [min(c) for c in cycles]

    @property
    def h(self) -> int:
        return len(self.forms)

    def class_index(self, f: Form) -> int:
        if self.d < 0:
            return self._index[reduce_definite(f)]
        return self._index[reduce_indefinite(f, self.d)]

    def compose_idx(self, i: int, j: int) -> int:
        return self.class_index(compose(self.forms[i], self.forms[j], self.d))

    def identity_idx(self) -> int:
        return self.class_index(principal_form(self.d))

    def power_idx(self, i: int, k: int) -> int:
        e = self.identity_idx()
        acc = e
        base = i
        while k:
            if k & 1:
                acc = self.compose_idx(acc, base)
            k >>= 1
            if k:
                base = self.compose_idx(base, base)
        return acc

    def torsion_count(self, p: int) -> int:
        e = self.identity_idx()
        return sum(1 for i in range(self.h) if self.power_idx(i, p) == e)


def quad_class_group(d: int, limit: int = DEFAULT_DISC_LIMIT) -> ClassGroupData:
    """Exact class group data (narrow for d > 0) with 2- and 3-torsion sizes."""
    group = ClassGroup(d, limit=limit)
    return ClassGroupData(
        d=d,
        h=group.h,
        p_torsion={2: group.torsion_count(2), 3: group.torsion_count(3)},
    )
