"""Discriminant and conductor identities: family conductor evaluation, Galois
discriminant relations, tame compositum valuations, and equality verifiers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import fundamental_of_square_class, is_square
from .conductors import CONDUCTOR_EXPRESSIONS, ConductorExpression
from .factored import FactoredInt, fi, lcm_abs


class MissingRole(KeyError):
    """A role required by the family formula is not bound."""


class NonIntegralQuotient(ValueError):
    """Combined exponents went negative: inconsistent input discriminants."""


class Degenerate(ValueError):
    """Coinciding inputs where distinct fields are required."""


class CyclicInput(ValueError):
    """Square discriminant where a non-Galois cubic is required."""


class InconsistentPair(ValueError):
    """Discriminant pair violates the family's divisibility constraints."""


class WildPrime(ValueError):
    """Prime declared wild; the tame cycle formula does not apply."""


# ---------------------------------------------------------------------------
# conductor evaluation


def conductor_expression(label: str) -> ConductorExpression:
    try:
        return CONDUCTOR_EXPRESSIONS[label]
    except KeyError:
        raise KeyError(f"no conductor formula for {label!r}") from None


def _eval_monomial(mono, bindings: dict[str, FactoredInt]) -> FactoredInt:
    exps: dict[int, int] = {}
    sign = 1
    for role, e in mono:
        if role not in bindings:
            raise MissingRole(role)
        v = bindings[role]
        if e % 2:
            sign *= v.sign
        for p, pe in v.factors:
            exps[p] = exps.get(p, 0) + e * pe
    for p, pe in exps.items():
        if pe < 0:
            raise NonIntegralQuotient(f"negative exponent at prime {p}")
    if sign < 0:
        raise NonIntegralQuotient("signs do not cancel in quotient formula")
    return FactoredInt(1, tuple(sorted((p, e) for p, e in exps.items() if e)))


def conductor_eval(label: str, bindings: dict[str, FactoredInt]) -> FactoredInt:
    """Exact Artin conductor of the family, over absolute values of the bindings.

    Divisions must clear exactly; for pure-product formulas the absolute value
    is taken, for quotient/lcm formulas the formal sign must cancel.
    """
    expr = conductor_expression(label)
    has_quotient = any(e < 0 for mono in expr.monomials for _, e in mono)
    if not has_quotient:
        bindings = {k: abs(v) for k, v in bindings.items()}
    vals = [_eval_monomial(m, bindings) for m in expr.monomials]
    out = vals[0]
    for v in vals[1:]:
        out = lcm_abs(out, v)
    return out


# ---------------------------------------------------------------------------
# Galois discriminant relations


def v4_complete(d1: int, d2: int) -> tuple[int, int]:
    """Third quadratic discriminant and the quartic field discriminant of the
    compositum of two distinct quadratic fields."""
    if d1 == d2:
        raise Degenerate("equal discriminants give a degenerate compositum")
    d3 = fundamental_of_square_class(d1 * d2)
    return d3, d1 * d2 * d3


def s3_closure_disc(disc3: int) -> tuple[int, int]:
    """Quadratic-resolvent and sextic-closure discriminants of a non-Galois cubic."""
    if is_square(disc3):
        raise CyclicInput("square discriminant: cubic is cyclic")
    d2 = fundamental_of_square_class(disc3)
    return d2, disc3 * disc3 * d2


def a4_relations(d4: int, d3: int) -> tuple[int, int]:
    """Sextic and closure discriminants attached to a quartic with square
    resolvent discriminant d3 = f^2 and d4 = d3 * f'^2."""
    if d3 <= 0 or not is_square(d3):
        raise InconsistentPair("resolvent discriminant must be a positive square")
    if d4 % d3 != 0 or not is_square(d4 // d3):
        raise InconsistentPair("d4/d3 must be a perfect square")
    d6 = d4 * d3
    d_closure = d4 * d4 * d6
    assert d_closure == d4**3 * d3  # the three relations are mutually consistent
    return d6, d_closure


def s4_sextic_disc(d4: int, d3: int) -> int:
    """Sextic discriminant D6 = D4 * D3 for a quartic and its cubic resolvent."""
    return d4 * d3


def monic_cubic_from_form(coeffs: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """Monic defining cubic x^3 + b x^2 + ac x + a^2 d of the form's root field."""
    a, b, c, d = coeffs
    return (a * a * d, a * c, b, 1)  # ascending


def closure_generator_poly(form: tuple[int, int, int, int]) -> tuple[int, ...]:
    """A monic sextic (ascending coefficients) defining the Galois closure of
    the non-cyclic cubic cut out by the form: the minimal polynomial of a
    difference (or shifted sum) of two roots."""
    import sympy

    x, y = sympy.symbols("x y")
    g_coeffs = monic_cubic_from_form(form)
    disc3 = from_cubic_disc(form)
    if is_square(disc3):
        raise CyclicInput("square discriminant: closure is the cubic itself")
    g = sum(c * y**i for i, c in enumerate(g_coeffs))
    gx = sum(c * x**i for i, c in enumerate(g_coeffs))
    # roots alpha - beta: resultant has the diagonal factor x^3
    res = sympy.Poly(sympy.resultant(g, g.subs(y, x + y), y), x)
    quot, rem = sympy.div(res, sympy.Poly(x**3, x), domain="QQ")
    if rem.is_zero:
        cand = sympy.Poly(quot, x)
        if cand.degree() == 6 and cand.is_irreducible:
            return tuple(int(v) for v in reversed(cand.all_coeffs()))
    # fall back to alpha + c*beta for small c
    for shift in range(2, 8):
        res = sympy.Poly(sympy.resultant(g, gx.subs(x, x - shift * y), y), x)
        res = sympy.Poly(res / res.LC() * sympy.sign(res.LC()), x)
        lead = int(res.all_coeffs()[0])
        if lead < 0:
            res = sympy.Poly(-res.as_expr(), x)
            lead = -lead
        res = sympy.Poly(res.as_expr() / lead, x)
        diag = sympy.Poly(
            (1 + shift) ** 3 * gx.subs(x, x / sympy.Integer(1 + shift)), x
        )
        quot, rem = sympy.div(res, diag, domain="QQ")
        if not rem.is_zero:
            continue
        cand = sympy.Poly(quot, x)
        if cand.degree() == 6 and all(v == int(v) for v in cand.all_coeffs()):
            cand = sympy.Poly([sympy.Integer(int(v)) for v in cand.all_coeffs()], x)
            if cand.is_irreducible:
                return tuple(int(v) for v in reversed(cand.all_coeffs()))
    raise RuntimeError("no closure generator found (unexpected)")


def from_cubic_disc(form: tuple[int, int, int, int]) -> int:
    a, b, c, d = form
    return (
        18 * a * b * c * d
        + b * b * c * c
        - 4 * a * c**3
        - 4 * b**3 * d
        - 27 * a * a * d * d
    )


# ---------------------------------------------------------------------------
# tame compositum valuations


@dataclass(frozen=True)
class RamificationProfile:
    """Per-prime cycle type of a tame inertia generator; unramified elsewhere."""

    degree: int
    cycles: dict[int, tuple[int, ...]] = field(default_factory=dict)
    wild: frozenset[int] = frozenset()

    def __post_init__(self):
        for p, cyc in self.cycles.items():
            if sum(cyc) != self.degree:
                raise ValueError(f"cycle type at {p} does not sum to the degree")

    def cycle_type(self, p: int) -> tuple[int, ...]:
        return self.cycles.get(p, (1,) * self.degree)

    def disc_valuation(self, p: int) -> int:
        """v_p of the field discriminant (tame: degree minus number of cycles)."""
        cyc = self.cycle_type(p)
        return self.degree - len(cyc)


def compositum_valuation(
    prof1: RamificationProfile, prof2: RamificationProfile, p: int
) -> int:
    """v_p of the compositum discriminant of two linearly disjoint fields,
    both tame at p (disjoint closures are the caller's responsibility)."""
    if p in prof1.wild or p in prof2.wild:
        raise WildPrime(f"{p} is declared wild")
    c1, c2 = prof1.cycle_type(p), prof2.cycle_type(p)
    m1, m2 = prof1.degree, prof2.degree
    return m1 * m2 - sum(math.gcd(a, b) for a in c1 for b in c2)


def compositum_valuation_coprime(
    prof1: RamificationProfile, prof2: RamificationProfile, p: int
) -> int:
    """The coprime-lcm specialization v1*m2 + v2*m1 - v1*v2; requires the lcms
    of the two cycle types to be coprime."""
    if p in prof1.wild or p in prof2.wild:
        raise WildPrime(f"{p} is declared wild")
    c1, c2 = prof1.cycle_type(p), prof2.cycle_type(p)
    l1 = math.lcm(*c1)
    l2 = math.lcm(*c2)
    if math.gcd(l1, l2) != 1:
        raise ValueError("cycle-length lcms are not coprime")
    v1 = prof1.disc_valuation(p)
    v2 = prof2.disc_valuation(p)
    return v1 * prof2.degree + v2 * prof1.degree - v1 * v2


# ---------------------------------------------------------------------------
# equality verifiers for the sextic/octic/dodecic conductor identities


@dataclass(frozen=True)
class ResidualReport:
    ok: bool
    failures: tuple[tuple[str, int, int, int], ...]  # (comparison, prime, lhs valuation, rhs valuation)


# each identity: tuple of equal monomials over role names
_LEMMA_FORMS: dict[str, tuple[tuple[tuple[str, int], ...], ...]] = {
    # A4xC2 tower: D6/D3 = D8/(D4*D2) = D12*D4*D2/(D8*D6')
    "3.2": (
        (("D6", 1), ("D3", -1)),
        (("D8", 1), ("D4", -1), ("D2", -1)),
        (("D12", 1), ("D4", 1), ("D2", 1), ("D8", -1), ("D6p", -1)),
    ),
    # S4 tower, first chain: D6/D3 = D4 = D12*D4*D2/(D8*D6)
    "3.3": (
        (("D6", 1), ("D3", -1)),
        (("D4", 1),),
        (("D12", 1), ("D4", 1), ("D2", 1), ("D8", -1), ("D6", -1)),
    ),
    # S4 tower, second chain: D6''/D3 = D8/(D4*D2) = D12/(D6*D4)
    "3.4": (
        (("D6pp", 1), ("D3", -1)),
        (("D8", 1), ("D4", -1), ("D2", -1)),
        (("D12", 1), ("D6", -1), ("D4", -1)),
    ),
    # S4xC2 tower: D6/D3 = D8/(D4*D2) = D12*D4*D2'/(D8'*D6')
    "3.5": (
        (("D6", 1), ("D3", -1)),
        (("D8", 1), ("D4", -1), ("D2", -1)),
        (("D12", 1), ("D4", 1), ("D2p", 1), ("D8p", -1), ("D6p", -1)),
    ),
    # quadratic-triple, S3, A4 (three relations), S4 discriminant relations,
    # stated as monomial identities over the roles incl. the base field
    "22a": (
        (("DL", 1), ("DK", 2)),
        (("DK1", 1), ("DK2", 1), ("DK3", 1)),
    ),
    "22b": (
        (("DL", 1), ("DK", 2)),
        (("DL3", 2), ("DL2", 1)),
    ),
    "22c": (
        (("DL", 1), ("DK", 3)),
        (("DL4", 3), ("DL3", 1)),
    ),
    "22c2": (
        (("DL6", 1), ("DK", 1)),
        (("DL4", 1), ("DL3", 1)),
    ),
    "22c3": (
        (("DL", 1), ("DK", 2)),
        (("DL6", 1), ("DL4", 2)),
    ),
    "22d": (
        (("DL6", 1), ("DK", 1)),
        (("DL4", 1), ("DL3", 1)),
    ),
}

LEMMA_IDS = tuple(_LEMMA_FORMS)


def lemma_roles(lemma: str) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for mono in _LEMMA_FORMS[lemma]:
        for role, _ in mono:
            seen[role] = None
    return tuple(seen)


def verify_lemma_bundle(
    bundle: dict[str, FactoredInt], lemma: str
) -> ResidualReport:
    """Check the chained equalities of one identity exactly; report per-prime
    valuation mismatches of each failing comparison."""
    try:
        forms = _LEMMA_FORMS[lemma]
    except KeyError:
        raise KeyError(f"unknown identity {lemma!r}; choose from {LEMMA_IDS}") from None
    vals = []
    for mono in forms:
        exps: dict[int, int] = {}
        for role, e in mono:
            if role not in bundle:
                raise MissingRole(role)
            for p, pe in bundle[role].factors:
                exps[p] = exps.get(p, 0) + e * pe
        vals.append({p: e for p, e in exps.items() if e})
    failures = []
    base = vals[0]
    for i, other in enumerate(vals[1:], start=1):
        for p in sorted(set(base) | set(other)):
            l, r = base.get(p, 0), other.get(p, 0)
            if l != r:
                failures.append((f"form0=form{i}", p, l, r))
    return ResidualReport(ok=not failures, failures=tuple(failures))


def verify_lemma_ints(bundle: dict[str, int], lemma: str) -> ResidualReport:
    return verify_lemma_bundle({k: fi(v) for k, v in bundle.items()}, lemma)
