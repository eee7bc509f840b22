"""Maximal-order discriminants for monic integer polynomials of degree <= 8.

Per prime p with p^2 | disc(f), p-maximality of Z[x]/(f) is decided by the
Dedekind criterion; at failing primes the order is enlarged by radical
idealizers until p-maximal, and the index correction is applied to the
polynomial discriminant.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import factorize
from .factored import FactoredInt

MAX_DEGREE = 8
MAX_HEIGHT = 10**40


class Reducible(ValueError):
    """Input polynomial is reducible over Q."""


class HeightExceeded(ValueError):
    """Coefficient height beyond the supported bound."""


# ---------------------------------------------------------------------------
# Z[x] and F_p[x] helpers; polynomials are coefficient tuples, ascending degree


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def pol_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def pol_mod_monic(a, m):
    """a mod m for monic m, exact over Z."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        q = a[-1]
        off = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[off + i] -= q * c
        a.pop()
    return _trim(a)


def pol_disc(f) -> int:
    """Discriminant of a monic polynomial, via a fraction-free Sylvester determinant."""
    n = len(f) - 1
    fp = [i * f[i] for i in range(1, n + 1)]
    # Sylvester matrix of f (degree n) and f' (degree n-1), size 2n-1
    size = 2 * n - 1
    rows = []
    for i in range(n - 1):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(fp)):
            row[i + j] = c
        rows.append(row)
    res = _bareiss_det(rows)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    m = [row[:] for row in m]
    prev = 1
    sign = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def fp_normalize(a, p):
    return _trim([c % p for c in a])


def fp_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p) if a[-1] != 1 else 1
    return tuple(c * inv % p for c in a)


def fp_divmod(a, b, p):
    a = [c % p for c in a]
    db = len(b) - 1
    binv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and any(a):
        while a and a[-1] % p == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        coef = a[-1] * binv % p
        off = len(a) - 1 - db
        q[off] = coef
        for i, c in enumerate(b):
            a[off + i] = (a[off + i] - coef * c) % p
        a.pop()
    return _trim([c % p for c in q]), _trim([c % p for c in a])


def fp_gcd(a, b, p):
    a, b = fp_normalize(a, p), fp_normalize(b, p)
    while b:
        a, b = b, fp_divmod(a, b, p)[1]
    return fp_monic(a, p)


def fp_deriv(a, p):
    return _trim([i * a[i] % p for i in range(1, len(a))])


def fp_pth_root(a, p):
    """p-th root of a(x) = h(x^p) over F_p (coefficients fixed by Frobenius)."""
    return _trim([a[i] for i in range(0, len(a), p)])


def fp_radical(a, p):
    """Product of the distinct monic irreducible factors of a over F_p."""
    a = fp_monic(fp_normalize(a, p), p)
    if len(a) <= 1:
        return (1,)
    da = fp_deriv(a, p)
    if not da:
        return fp_radical(fp_pth_root(a, p), p)
    d = fp_gcd(a, da, p)
    w = fp_divmod(a, d, p)[0]  # product of factors with multiplicity prime to p
    # strip w-factors from d, leaving the p-power part
    u = d
    while True:
        g = fp_gcd(u, w, p)
        if len(g) <= 1:
            break
        u = fp_divmod(u, g, p)[0]
    rest = fp_radical(u, p) if len(u) > 1 else (1,)
    return fp_monic(pol_mul(w, rest), p)


# ---------------------------------------------------------------------------
# Dedekind criterion


def dedekind_is_maximal(f: tuple[int, ...], p: int) -> bool:
    """Dedekind criterion: is Z[x]/(f) maximal at p (f monic, irreducible)?"""
    fbar = fp_normalize(f, p)
    g1 = fp_radical(fbar, p)
    h1, rem = fp_divmod(fbar, g1, p)
    assert not rem
    # lift to Z[x] (coefficients in [0, p)), monic by construction
    glift, hlift = list(g1), list(h1)
    prod = pol_mul(glift, hlift)
    prod = list(prod) + [0] * (len(f) - len(prod))
    big_f = [(prod[i] - f[i]) // p if i < len(f) else 0 for i in range(len(f))]
    assert all((prod[i] - f[i]) % p == 0 for i in range(len(f)))
    fbar2 = fp_normalize(big_f, p)
    g = fp_gcd(fp_gcd(fbar2, g1, p), h1, p)
    return len(g) <= 1


# ---------------------------------------------------------------------------
# small exact linear algebra


def hnf(rows: list[list[int]], n: int) -> list[list[int]]:
    """Row HNF (upper triangular, positive pivots) of a full-rank lattice in Z^n."""
    rows = [r[:] for r in rows if any(r)]
    basis: list[list[int] | None] = [None] * n
    for row in rows:
        for j in range(n):
            if row[j] == 0:
                continue
            if basis[j] is None:
                basis[j] = row
                break
            b = basis[j]
            while row[j]:
                q = b[j] // row[j]
                for k in range(n):
                    b[k], row[k] = row[k], b[k] - q * row[k]
            # row[j] == 0 now; continue to next column
        # fully reduced rows vanish
    out = []
    for j in range(n):
        b = basis[j]
        assert b is not None, "lattice not full rank"
        if b[j] < 0:
            b = [-x for x in b]
        out.append(b)
    # reduce entries above pivots
    for j in range(n - 1, -1, -1):
        for i in range(j):
            q = out[i][j] // out[j][j]
            if q:
                out[i] = [x - q * y for x, y in zip(out[i], out[j])]
    return out


def fp_nullspace(m: list[list[int]], p: int, ncols: int) -> list[list[int]]:
    """Basis of the left nullspace {v : v M = 0} over F_p."""
    nrows = len(m)
    a = [
        [m[i][j] % p for j in range(ncols)]
        + [1 if k == i else 0 for k in range(nrows)]
        for i in range(nrows)
    ]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                coef = a[i][c]
                a[i] = [(x - coef * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return [row[ncols:] for row in a[r:]]


# ---------------------------------------------------------------------------
# p-maximal order via radical idealizers


def _structure_constants(bmat, den, f):
    """Integer coords of w_i * w_j in the order basis; w_i = bmat[i]/den as polys mod f."""
    n = len(f) - 1
    binv = _fraction_inverse(bmat)
    table = []
    for i in range(n):
        row_i = []
        for j in range(n):
            prod = pol_mod_monic(pol_mul(bmat[i], bmat[j]), f)
            vec = [Fraction(prod[k] if k < len(prod) else 0, den) for k in range(n)]
            coords = [
                sum(vec[k] * binv[k][t] for k in range(n)) for t in range(n)
            ]
            ints = []
            for c in coords:
                assert c.denominator == 1, "basis is not multiplicatively closed"
                ints.append(int(c))
            row_i.append(ints)
        table.append(row_i)
    return table


def _fraction_inverse(bmat):
    n = len(bmat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(bmat)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c])
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                coef = a[i][c]
                a[i] = [x - coef * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def _mult(table, u, v, p):
    n = len(table)
    out = [0] * n
    for i, ci in enumerate(u):
        if ci % p == 0:
            continue
        for j, cj in enumerate(v):
            if cj % p == 0:
                continue
            coef = ci * cj % p
            trow = table[i][j]
            for k in range(n):
                out[k] = (out[k] + coef * trow[k]) % p
    return out


def p_index_valuation(f: tuple[int, ...], p: int) -> int:
    """v_p of the index [O_K : Z[x]/(f)] for monic irreducible f."""
    n = len(f) - 1
    if dedekind_is_maximal(f, p):
        return 0
    bmat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    den = 1
    total = 0
    while True:
        table = _structure_constants(bmat, den, f)
        # Frobenius power with p^m >= n
        m = 1
        while p**m < n:
            m += 1
        frob_rows = []
        for i in range(n):
            base = [1 if k == i else 0 for k in range(n)]
            acc = None
            expo = p**m
            while expo:
                if expo & 1:
                    acc = base if acc is None else _mult(table, acc, base, p)
                expo >>= 1
                if expo:
                    base = _mult(table, base, base, p)
            frob_rows.append(acc)
        kernel = fp_nullspace(frob_rows, p, n)
        # radical ideal I = kernel lift + pO, as an O-coordinate lattice
        lat = [[p if i == j else 0 for j in range(n)] for i in range(n)]
        lat += [[x % p for x in v] for v in kernel]
        gmat = hnf(lat, n)
        ginv = _fraction_inverse(gmat)
        # idealizer condition: y * g_j in p*I for all j
        cond_rows = []
        for i in range(n):
            e = [1 if k == i else 0 for k in range(n)]
            flat = []
            for gj in gmat:
                prod = _mult_int(table, e, gj)
                zcoords = [
                    sum(Fraction(prod[k]) * ginv[k][t] for k in range(n))
                    for t in range(n)
                ]
                for z in zcoords:
                    assert z.denominator == 1, "product left the ideal"
                    flat.append(int(z) % p)
            cond_rows.append(flat)
        y_basis = fp_nullspace(cond_rows, p, len(cond_rows[0]))
        lat2 = [[p if i == j else 0 for j in range(n)] for i in range(n)]
        lat2 += [[x % p for x in v] for v in y_basis]
        hmat = hnf(lat2, n)
        det_h = 1
        for i in range(n):
            det_h *= hmat[i][i]
        step = 0
        q = p**n // det_h
        while q > 1:
            q //= p
            step += 1
        if step == 0:
            return total
        total += step
        # O' basis: (hmat / p) * (bmat / den)
        new_b = [
            [sum(hmat[i][k] * bmat[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        den *= p
        from math import gcd

        g = den
        for row in new_b:
            for x in row:
                g = gcd(g, x)
        bmat = [[x // g for x in row] for row in new_b]
        den //= g
        bmat = hnf(bmat, n)


def _mult_int(table, u, v):
    n = len(table)
    out = [0] * n
    for i, ci in enumerate(u):
        if ci == 0:
            continue
        for j, cj in enumerate(v):
            if cj == 0:
                continue
            coef = ci * cj
            trow = table[i][j]
            for k in range(n):
                out[k] += coef * trow[k]
    return out


# ---------------------------------------------------------------------------
# public entry point


def is_irreducible(coeffs: tuple[int, ...]) -> bool:
    """Irreducibility over Q of a monic integer polynomial (ascending coeffs)."""
    if coeffs[0] == 0:
        return len(coeffs) == 2  # divisible by x
    deg = len(coeffs) - 1
    if deg == 1:
        return True
    # rational roots of a monic polynomial are integers dividing the constant term
    import math

    c0 = abs(coeffs[0])
    divisors = [d for d in range(1, math.isqrt(c0) + 1) if c0 % d == 0]
    roots = set()
    for d in divisors:
        roots.update((d, -d, c0 // d, -(c0 // d)))
    has_root = any(_eval_int(coeffs, r) == 0 for r in roots)
    if has_root:
        return False
    if deg <= 3:
        return True
    import sympy

    x = sympy.Symbol("x")
    poly = sum(c * x**i for i, c in enumerate(coeffs))
    return sympy.Poly(poly, x).is_irreducible


def _eval_int(coeffs, t):
    v = 0
    for c in reversed(coeffs):
        v = v * t + c
    return v


def maximal_order_disc(coeffs: list[int] | tuple[int, ...]) -> FactoredInt:
    """Field discriminant of Q[x]/(f) for monic irreducible integer f, deg <= 8."""
    coeffs = tuple(int(c) for c in coeffs)
    if not coeffs or coeffs[-1] != 1:
        raise ValueError("polynomial must be monic (ascending coefficients)")
    deg = len(coeffs) - 1
    if deg < 1 or deg > MAX_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_DEGREE}")
    if max(abs(c) for c in coeffs) > MAX_HEIGHT:
        raise HeightExceeded(f"coefficient height above {MAX_HEIGHT}")
    if not is_irreducible(coeffs):
        raise Reducible("polynomial is reducible over Q")
    if deg == 1:
        return FactoredInt(1, ())
    disc = pol_disc(coeffs)
    sign = 1 if disc > 0 else -1
    result: dict[int, int] = {}
    for p, e in factorize(disc).items():
        if e >= 2:
            e -= 2 * p_index_valuation(coeffs, p)
            assert e >= 0
        if e:
            result[p] = e
    return FactoredInt(sign, tuple(sorted(result.items())))
