"""Per-family torus counts N(X; H), asymptotic exponent fits, and summary tables.

Each implemented family counts the constituent tuples named by its torus
construction (with the stated distinctness constraints), so N(X; H) is the
number of isomorphism classes of tori with conductor at most X. Families whose
constituents cannot be enumerated in-house (quartic D4/A4/S4 and octic data)
are Unimplemented unless an import supplies the fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import fundamental_count, fundamental_discs_upto, nth_root_floor
from .dirichlet import PartialSumFit, census_c6_count, tauberian_fit
from .fields.cubic import reduced_forms_negative, reduced_forms_positive, form_disc, _maximal_given_fact
from .fields.cyclic import cyclic_cubic_conductors, cyclic_quartic_conductor_data
from .fields.records import FieldRecord
from .groups import a_invariant, b_invariant, nontrivial_entries
from .arith import factorize, fundamental_of_square_class

DEFAULT_CUBIC_BOUND = 10**6
DEFAULT_PAIR_BOUND = 10**7  # quadratic-pair and biquadratic families


class Unimplemented(ValueError):
    """No in-house bijection (or missing import) for the requested family."""


@dataclass(frozen=True)
class CountReport:
    label: str
    grid: tuple[int, ...]
    counts: tuple[int, ...]
    a_hat: float
    w_hat: float  # log-power estimate; conjectured counterpart is b - 1
    a_conj: int
    b_conj: int
    verdict: str

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "grid": list(self.grid),
            "counts": list(self.counts),
            "a_hat": self.a_hat,
            "w_hat": self.w_hat,
            "a_conj": self.a_conj,
            "b_conj": self.b_conj,
            "verdict": self.verdict,
        }


# ---------------------------------------------------------------------------
# shared sub-counters


def _count_quad_disc_pow(x: int, k: int) -> int:
    """#{quadratic fields : |d|^k <= x}."""
    return fundamental_count(nth_root_floor(x, k)) if x >= 1 else 0


def _count_cyclic_cubic_by_disc(x: int) -> int:
    return sum(c for _, c in cyclic_cubic_conductors(math.isqrt(x)))


@lru_cache(maxsize=8)
def _quartic_fields(f_max: int) -> tuple[tuple[int, int, int], ...]:
    """(conductor f, quadratic-subfield disc, multiplicity) for all cyclic
    quartic fields with f <= f_max."""
    out = []
    for f in range(3, f_max + 1):
        for d2, count in cyclic_quartic_conductor_data(f):
            out.append((f, d2, count))
    return tuple(out)


def _count_c4_by_quotient(x: int) -> int:
    """#{cyclic quartics : D4/D2 = f^2 <= x}."""
    return sum(c for _, _, c in _quartic_fields(math.isqrt(x)))


def _count_c4_by_disc(x: int) -> int:
    """#{cyclic quartics : D4 = f^2 d2 <= x}."""
    total = 0
    for f, d2, count in _quartic_fields(math.isqrt(x)):
        if f * f * d2 <= x:
            total += count
    return total


def _count_ordered_weighted_pairs(x: int) -> int:
    """#{(d1, d3) distinct fundamental : |d1| |d3|^2 <= x}."""
    total = 0
    for d3 in fundamental_discs_upto(math.isqrt(x // 3)):
        y = x // (d3 * d3)
        total += fundamental_count(y)
        if abs(d3) <= y:
            total -= 1  # diagonal d1 = d3
    return total


def _count_product_pairs_ordered(x: int) -> int:
    """#{(d, d') fundamental ordered : |d d'| <= x}, diagonal included."""
    r = math.isqrt(x)
    total = 0
    for d in fundamental_discs_upto(r):
        total += 2 * fundamental_count(x // abs(d))
    return total - fundamental_count(r) ** 2


def _count_product_pairs_distinct_ordered(x: int) -> int:
    return _count_product_pairs_ordered(x) - fundamental_count(math.isqrt(x))


def _count_product_pairs_distinct_unordered(x: int) -> int:
    return _count_product_pairs_distinct_ordered(x) // 2


def _count_v4_fields(x: int) -> int:
    """#{biquadratic fields : |d1 d2 d3| <= x} (each field once)."""
    total = 0
    by_abs = fundamental_discs_upto(x // 9)  # |d1 d2 d3| >= 3 |da| |db|, |db| >= 3
    for i, da in enumerate(by_abs):
        if 3 * da * da > x:
            break
        for db in by_abs[i + 1 :]:
            if abs(da) * abs(db) * 3 > x:
                break
            d3 = fundamental_of_square_class(da * db)
            if abs(da * db * d3) <= x:
                total += 1
    assert total % 3 == 0, "each biquadratic field arises from exactly 3 pairs"
    return total // 3


def _count_c6_by_conductor_sq(x: int) -> int:
    """#{cyclic sextics : lcm(|d|, f)^2 <= x} (conductor-squared bound)."""
    lim = math.isqrt(x)
    cond_weight = [0] * (lim + 1)
    for f, c in cyclic_cubic_conductors(lim):
        cond_weight[f] = c
    quad = _quad_indicator(lim)
    divisors: list[list[int]] = [[] for _ in range(lim + 1)]
    for d in range(1, lim + 1):
        for n in range(d, lim + 1, d):
            divisors[n].append(d)
    total = 0
    for n in range(1, lim + 1):
        divs = divisors[n]
        quads = [m for m in divs if quad[m]]
        cubs = [f for f in divs if cond_weight[f]]
        if not quads or not cubs:
            continue
        for m in quads:
            for f in cubs:
                if math.lcm(m, f) == n:
                    total += quad[m] * cond_weight[f]
    return total


@lru_cache(maxsize=4)
def _quad_indicator(n: int) -> tuple[int, ...]:
    from .fields.quadratic import quadratic_indicator_vector

    return tuple(quadratic_indicator_vector(n))


def _count_quad_times_c3(x: int) -> int:
    """#{(quadratic, cyclic cubic) : |d| f^2 <= x}."""
    total = 0
    for f, c in cyclic_cubic_conductors(math.isqrt(x // 3)):
        total += c * fundamental_count(x // (f * f))
    return total


@lru_cache(maxsize=8)
def _cubic_disc_table(bound: int) -> tuple[tuple[int, int], ...]:
    """(disc, |resolvent disc|) of non-cyclic cubic fields with |disc| <= bound."""
    out = []
    for gen in (reduced_forms_positive(bound), reduced_forms_negative(bound)):
        for f in gen:
            disc = form_disc(*f)
            fact = factorize(disc)
            if all(e % 2 == 0 for e in fact.values()):
                continue  # cyclic
            if not _maximal_given_fact(f, fact):
                continue
            kernel = 1
            for p, e in fact.items():
                if e % 2:
                    kernel *= p
            if disc < 0:
                kernel = -kernel
            d2 = kernel if kernel % 4 == 1 else 4 * kernel
            out.append((disc, abs(d2)))
    out.sort(key=lambda t: abs(t[0]))
    return tuple(out)


def _count_s3_by_disc(x: int, bound: int) -> int:
    if x > bound:
        raise Unimplemented(
            f"cubic enumeration bound {bound} below requested X={x}"
        )
    table = _cubic_disc_table(bound)
    return sum(1 for disc, _ in table if abs(disc) <= x)


def _count_s3_by_resolvent_product(x: int, bound: int) -> int:
    if x // 3 > bound:
        raise Unimplemented(
            f"cubic enumeration bound {bound} below requested X/3={x // 3}"
        )
    table = _cubic_disc_table(min(bound, x // 3))
    return sum(1 for disc, d2 in table if abs(disc) * d2 <= x)


def _count_quad_times_c4quot(x: int) -> int:
    """#{(quadratic, cyclic quartic) : |d| f^2 <= x, d != quartic's subfield disc}."""
    total = 0
    for f, d2, count in _quartic_fields(math.isqrt(x // 3)):
        y = x // (f * f)
        q = fundamental_count(y)
        if d2 <= y:
            q -= 1
        total += count * q
    return total


def _count_imported_d6_sextics(x: int, imports: list[FieldRecord] | None) -> int:
    """Count imported dihedral sextics by D6/(D2 D3) <= x.

    Convention: subfield_discs lists the quadratic disc first, then the cubic
    disc (increasing subfield degree).
    """
    if not imports:
        raise Unimplemented(
            "needs an imported sextic table with quadratic and cubic subfield discs"
        )
    total = 0
    for rec in imports:
        if rec.degree != 6:
            continue
        subs = rec.provenance.subfield_discs
        if len(subs) != 2:
            raise ValueError(
                f"sextic {rec.provenance.source_label}: need [quadratic; cubic] subfield discs"
            )
        d2, d3 = abs(subs[0]), abs(subs[1])
        d6 = abs(rec.disc_int)
        if d6 % (d2 * d3):
            raise ValueError(
                f"sextic {rec.provenance.source_label}: subfield discs do not divide the sextic disc"
            )
        if d6 // (d2 * d3) <= x:
            total += 1
    return total


# ---------------------------------------------------------------------------
# family registry


@dataclass(frozen=True)
class FamilySpec:
    label: str
    description: str
    counter: object  # callable (x, ctx) -> int
    clip: str | None = None  # "cubic" families clip to the cubic bound


def _registry() -> dict[str, FamilySpec]:
    reg: dict[str, FamilySpec] = {}

    def add(labels, description, counter, clip=None):
        for lab in labels:
            reg[lab] = FamilySpec(lab, description, counter, clip)

    add(
        ["H_{2,a}", "H_{2,c}"],
        "quadratic fields with |d|^2 <= X",
        lambda x, ctx: _count_quad_disc_pow(x, 2),
    )
    add(
        ["H_{2,b}", "H_{2,d}"],
        "quadratic fields with |d| <= X",
        lambda x, ctx: _count_quad_disc_pow(x, 1),
    )
    add(
        ["H_{2,e}"],
        "quadratic fields with |d|^3 <= X",
        lambda x, ctx: _count_quad_disc_pow(x, 3),
    )
    add(
        ["H_{3,a}", "H_{3,b}"],
        "cyclic cubic fields with f^2 <= X",
        lambda x, ctx: _count_cyclic_cubic_by_disc(x),
    )
    add(
        ["H_{4,a}", "H_{4,c}"],
        "cyclic quartic fields with D4/D2 <= X",
        lambda x, ctx: _count_c4_by_quotient(x),
    )
    add(
        ["H_{4,b}", "H_{4,d}"],
        "cyclic quartic fields with D4 <= X",
        lambda x, ctx: _count_c4_by_disc(x),
    )
    add(
        ["H_{4,e}", "H_{4,k}"],
        "ordered distinct quadratic pairs with |d1| |d3|^2 <= X",
        lambda x, ctx: _count_ordered_weighted_pairs(x),
    )
    add(
        ["H_{4,f}", "H_{4,h}", "H_{4,l}", "H_{4,n}"],
        "biquadratic fields with |disc| <= X",
        lambda x, ctx: _count_v4_fields(x),
        clip="pair",
    )
    add(
        ["H_{4,g}", "H_{4,i}", "H_{4,m}", "H_{4,o}"],
        "unordered distinct quadratic pairs with |d d'| <= X",
        lambda x, ctx: _count_product_pairs_distinct_unordered(x),
    )
    add(
        ["H_{4,j}"],
        "ordered distinct quadratic pairs with |d d'| <= X",
        lambda x, ctx: _count_product_pairs_distinct_ordered(x),
    )
    add(
        ["H_{6,a}"],
        "cyclic sextic fields with conductor^2 <= X",
        lambda x, ctx: _count_c6_by_conductor_sq(x),
    )
    add(
        ["H_{6,b}"],
        "(quadratic, cyclic cubic) pairs with |d| f^2 <= X",
        lambda x, ctx: _count_quad_times_c3(x),
    )
    add(
        ["H_{6,c}", "H_{6,d}"],
        "cyclic sextic fields with lcm(|d|^3, |d| f^2) <= X",
        lambda x, ctx: census_c6_count(x),
    )
    add(
        ["H_{6,e}", "H_{6,g}", "H_{6,i}"],
        "non-cyclic cubic fields with |D2 D3| <= X",
        lambda x, ctx: _count_s3_by_resolvent_product(x, ctx["cubic_bound"]),
        clip="cubic3",
    )
    add(
        ["H_{6,f}", "H_{6,h}", "H_{6,j}"],
        "non-cyclic cubic fields with |D3| <= X",
        lambda x, ctx: _count_s3_by_disc(x, ctx["cubic_bound"]),
        clip="cubic",
    )
    add(
        ["H_{8,a}", "H_{8,b}"],
        "(quadratic, cyclic quartic) pairs with |d| D4'/D2' <= X, d != D2'",
        lambda x, ctx: _count_quad_times_c4quot(x),
    )
    add(
        ["H_{12,c}"],
        "imported dihedral sextics with D6/(D3 D2) <= X",
        lambda x, ctx: _count_imported_d6_sextics(x, ctx.get("imports")),
    )
    return reg


FAMILIES: dict[str, FamilySpec] = _registry()

IMPORT_LIMITED = (
    "H_{8,g}",
    "H_{8,h}",
    "H_{8,i}",
    "H_{8,j}",
    "H_{8,k}",
    "H_{8,l}",
    "H_{8,m}",
    "H_{8,n}",
    "H_{16,a}",
    "H_{16,b}",
)


def count_family(
    label: str,
    x: int,
    *,
    cubic_bound: int = DEFAULT_CUBIC_BOUND,
    imports: list[FieldRecord] | None = None,
) -> int:
    """Exact N(X; H) for the implemented families; Unimplemented otherwise."""
    spec = FAMILIES.get(label)
    if spec is None:
        detail = (
            "only countable from imported field tables"
            if label in IMPORT_LIMITED or label.startswith(("H_{24", "H_{48"))
            else "no explicit counting bijection"
        )
        raise Unimplemented(f"{label}: {detail}")
    ctx = {"cubic_bound": cubic_bound, "imports": imports}
    return spec.counter(int(x), ctx)


def family_grid(
    label: str,
    grid: list[int],
    *,
    cubic_bound: int = DEFAULT_CUBIC_BOUND,
    pair_bound: int = DEFAULT_PAIR_BOUND,
) -> list[int]:
    """Clip a grid to what the family's enumerators can reach."""
    spec = FAMILIES.get(label)
    if spec is None:
        return list(grid)
    if spec.clip == "cubic":
        return [x for x in grid if x <= cubic_bound]
    if spec.clip == "cubic3":
        return [x for x in grid if x // 3 <= cubic_bound]
    if spec.clip == "pair":
        return [x for x in grid if x <= pair_bound]
    return list(grid)


def fit_family(
    label: str,
    grid: list[int],
    *,
    cubic_bound: int = DEFAULT_CUBIC_BOUND,
    imports: list[FieldRecord] | None = None,
    drop_first_decade: bool = True,
) -> CountReport:
    """Count along the grid and fit (a_hat, w_hat); compare with (1/a(H), b(H)).

    The report's w_hat is the fitted log-power, to be compared with b(H) - 1.
    """
    from .groups import catalog_entry

    entry = catalog_entry(label)
    a_conj = a_invariant(entry.group)
    b_conj = b_invariant(entry.group)
    use = family_grid(label, sorted(set(int(x) for x in grid)), cubic_bound=cubic_bound)
    if drop_first_decade and len(use) > 4:
        cutoff = use[0] * 10
        trimmed = [x for x in use if x >= cutoff]
        if len(trimmed) >= 4:
            use = trimmed
    counts = [
        count_family(label, x, cubic_bound=cubic_bound, imports=imports) for x in use
    ]
    fit: PartialSumFit | None = None
    if len(use) >= 4 and counts[0] > 0:
        fit = tauberian_fit(use, counts)
    a_hat = fit.a_hat if fit else float("nan")
    w_hat = (fit.w_hat - 1.0) if fit else float("nan")
    verdict = "no-fit"
    if fit:
        ok_a = abs(a_hat - 1.0 / a_conj) <= 0.1
        ok_w = abs(w_hat - (b_conj - 1)) <= 1.0
        verdict = "consistent" if (ok_a and ok_w) else "tension"
    return CountReport(
        label=label,
        grid=tuple(use),
        counts=tuple(counts),
        a_hat=a_hat,
        w_hat=w_hat,
        a_conj=a_conj,
        b_conj=b_conj,
        verdict=verdict,
    )


def summary_table() -> list[dict]:
    """One row per nontrivial catalog class: invariants plus implementation status."""
    rows = []
    for entry in nontrivial_entries():
        spec = FAMILIES.get(entry.label)
        rows.append(
            {
                "label": entry.label,
                "order": entry.order,
                "iso": entry.iso_label,
                "a": a_invariant(entry.group),
                "b": b_invariant(entry.group),
                "implemented": spec is not None,
                "family": spec.description if spec else "unimplemented",
            }
        )
    return rows
