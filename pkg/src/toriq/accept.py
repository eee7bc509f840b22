"""The acceptance suite: one callable per criterion, each exact-tolerance check
pinned here, shared by the CLI runner and the test suite."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

# Golden invariant rows (label -> (a, b)) for the 72 nontrivial classes.
# The two order-3 rows are pinned to the values forced by the definition: an
# order-3 element of GL3(Z) fixes a 1-dimensional subspace, so rank(h - I) = 2
# for both nonidentity elements, giving a = 2; the single power-map orbit
# {h, h^2} gives b = 1. Transcriptions showing (1, 1) for these two rows are
# inconsistent with that computation and with the X^(1/2) growth of the
# conductor count for these families (conductor = f^2 <= X means f <= sqrt X).
TABLE1: dict[str, tuple[int, int]] = {
    "H_{2,a}": (2, 1), "H_{2,b}": (1, 1), "H_{2,c}": (2, 1), "H_{2,d}": (1, 1),
    "H_{2,e}": (3, 1),
    "H_{3,a}": (2, 1), "H_{3,b}": (2, 1),
    "H_{4,a}": (2, 2), "H_{4,b}": (2, 1), "H_{4,c}": (2, 2), "H_{4,d}": (2, 1),
    "H_{4,e}": (1, 1), "H_{4,f}": (2, 3), "H_{4,g}": (1, 2), "H_{4,h}": (2, 3),
    "H_{4,i}": (1, 2), "H_{4,j}": (1, 2), "H_{4,k}": (1, 1), "H_{4,l}": (2, 3),
    "H_{4,m}": (1, 2), "H_{4,n}": (2, 3), "H_{4,o}": (1, 2),
    "H_{6,a}": (2, 3), "H_{6,b}": (1, 1), "H_{6,c}": (2, 1), "H_{6,d}": (2, 1),
    "H_{6,e}": (2, 2), "H_{6,f}": (1, 1), "H_{6,g}": (2, 2), "H_{6,h}": (1, 1),
    "H_{6,i}": (2, 2), "H_{6,j}": (1, 1),
    "H_{8,a}": (1, 1), "H_{8,b}": (1, 1), "H_{8,c}": (1, 3), "H_{8,d}": (1, 3),
    "H_{8,e}": (1, 3), "H_{8,f}": (1, 3), "H_{8,g}": (2, 4), "H_{8,h}": (1, 2),
    "H_{8,i}": (1, 1), "H_{8,j}": (1, 1), "H_{8,k}": (2, 4), "H_{8,l}": (1, 2),
    "H_{8,m}": (1, 1), "H_{8,n}": (1, 1),
    "H_{12,a}": (1, 1), "H_{12,b}": (2, 5), "H_{12,c}": (1, 2), "H_{12,d}": (1, 2),
    "H_{12,e}": (1, 2), "H_{12,f}": (1, 1), "H_{12,g}": (1, 1), "H_{12,h}": (1, 1),
    "H_{12,i}": (2, 2), "H_{12,j}": (2, 2), "H_{12,k}": (2, 2),
    "H_{16,a}": (1, 3), "H_{16,b}": (1, 3),
    "H_{24,a}": (1, 1), "H_{24,b}": (1, 1), "H_{24,c}": (1, 1), "H_{24,d}": (1, 3),
    "H_{24,e}": (2, 4), "H_{24,f}": (1, 1), "H_{24,g}": (2, 4), "H_{24,h}": (1, 1),
    "H_{24,i}": (2, 4), "H_{24,j}": (1, 1),
    "H_{48,a}": (1, 2), "H_{48,b}": (1, 2), "H_{48,c}": (1, 2),
}

# rows where transcribed reference values disagree with the definition (see above)
TABLE1_TRANSCRIPTION_NOTES = {
    "H_{3,a}": "transcribed (1,1); definition forces (2,1)",
    "H_{3,b}": "transcribed (1,1); definition forces (2,1)",
}


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extras = ", ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"criterion {self.number:2d} [{status}] {self.name} ({self.seconds:.1f}s) {extras}"


def _timed(fn):
    t0 = time.time()
    passed, detail = fn()
    return passed, time.time() - t0, detail


def criterion_1() -> CriterionResult:
    """Invariant-table oracle: all 72 (a, b) pairs."""

    def run():
        from .groups import invariant_table

        rows = invariant_table()
        mismatches = []
        for label, order, iso, a, b in rows:
            if (a, b) != TABLE1[label]:
                mismatches.append((label, (a, b), TABLE1[label]))
        detail = {
            "rows": len(rows),
            "matched": len(rows) - len(mismatches),
            "pinned_transcription_fixes": sorted(TABLE1_TRANSCRIPTION_NOTES),
        }
        if mismatches:
            detail["mismatches"] = mismatches[:8]
        return not mismatches, detail

    passed, secs, detail = _timed(run)
    return CriterionResult(1, "invariant table (a,b) 72/72", passed, secs, detail)


def criterion_2(n_max: int = 10**5) -> CriterionResult:
    """Exact coefficient identity: direct census equals the series expansion."""

    def run():
        from .dirichlet import census_c6, lemma42_rhs

        rhs = lemma42_rhs(n_max)
        cen = census_c6(n_max)
        first_bad = next((n for n in range(1, n_max + 1) if rhs[n] != cen[n]), None)
        return first_bad is None, {
            "n_max": n_max,
            "total_fields": sum(cen),
            "first_mismatch": first_bad,
        }

    passed, secs, detail = _timed(run)
    return CriterionResult(2, "cyclic-sextic census = series expansion", passed, secs, detail)


def criterion_3() -> CriterionResult:
    """Conductor-quotient count grows like X^(1/2) with no log factor.

    Free fit over X in [1e5, 1e9]: a_hat within [0.47, 0.53]; the log-power
    estimate is required within +-1 of 1 (same tolerance the family fits use),
    and the top-decade local exponent is reported as corroboration.
    """

    def run():
        from .dirichlet import census_c6_count, tauberian_fit

        grid = [int(10 ** (k / 2)) for k in range(10, 19)]
        sums = [census_c6_count(x) for x in grid]
        fit = tauberian_fit(grid, sums)
        local = math.log10(sums[-1] / sums[-3])  # slope over the top decade
        ok = 0.47 <= fit.a_hat <= 0.53 and abs(fit.w_hat - 1.0) <= 1.0
        return ok, {
            "a_hat": round(fit.a_hat, 4),
            "w_hat": round(fit.w_hat, 4),
            "top_decade_slope": round(local, 4),
            "r2": round(fit.r2, 6),
        }

    passed, secs, detail = _timed(run)
    return CriterionResult(3, "sextic quotient count ~ X^(1/2)", passed, secs, detail)


def criterion_4() -> CriterionResult:
    """Family fits: H_{4,e}, H_{6,a}, H_{8,a} recover their predicted exponents."""

    def run():
        from .census import fit_family
        from .dirichlet import default_grid

        grid = default_grid(8, 18)
        checks = {}
        ok = True
        rep = fit_family("H_{4,e}", grid)
        checks["H_{4,e}"] = round(rep.a_hat, 4)
        ok &= 0.95 <= rep.a_hat <= 1.05
        rep = fit_family("H_{6,a}", grid)
        checks["H_{6,a}"] = (round(rep.a_hat, 4), round(rep.w_hat + 1, 4))
        ok &= 0.45 <= rep.a_hat <= 0.55 and abs((rep.w_hat + 1) - 3) <= 1.0
        rep = fit_family("H_{8,a}", grid)
        checks["H_{8,a}"] = round(rep.a_hat, 4)
        ok &= 0.95 <= rep.a_hat <= 1.05
        return bool(ok), checks

    passed, secs, detail = _timed(run)
    return CriterionResult(4, "family exponent fits", passed, secs, detail)


def criterion_5(limit: int = 5000) -> CriterionResult:
    """Reflection cross-oracle: (h3(d) - 1)/2 cubic fields per fundamental d."""

    def run():
        from .arith import fundamental_discs_upto
        from .fields.classgroup import quad_class_group
        from .fields.cubic import enum_cubic_s3

        by_disc: dict[int, int] = {}
        for sign in (1, -1):
            for rec in enum_cubic_s3(limit, sign):
                by_disc[rec.disc_int] = by_disc.get(rec.disc_int, 0) + 1
        bad = []
        discs = fundamental_discs_upto(limit)
        for d in discs:
            expect = (quad_class_group(d).p_torsion[3] - 1) // 2
            if expect != by_disc.get(d, 0):
                bad.append((d, expect, by_disc.get(d, 0)))
        return not bad, {
            "fundamental_discs": len(discs),
            "cubic_fields": sum(by_disc.values()),
            "mismatches": bad[:5],
        }

    passed, secs, detail = _timed(run)
    return CriterionResult(5, "3-torsion reflection cross-oracle", passed, secs, detail)


def criterion_6(per_sign: int = 20) -> CriterionResult:
    """Closure-discriminant oracle: maximal-order disc of a sextic closure
    generator equals D3^2 * D2 for the smallest cubics of each sign."""

    def run():
        from .dedekind import maximal_order_disc
        from .discs import closure_generator_poly, s3_closure_disc
        from .fields.cubic import enum_cubic_s3

        checked = []
        for sign in (1, -1):
            count = 0
            for rec in enum_cubic_s3(3000, sign):
                disc3 = rec.disc_int
                form = rec.provenance
                d2, d6 = s3_closure_disc(disc3)
                poly = closure_generator_poly(form.coeffs())
                d6_oracle = maximal_order_disc(poly).to_int()
                checked.append((disc3, d6, d6_oracle))
                count += 1
                if count >= per_sign:
                    break
        bad = [(d3, d6, o) for d3, d6, o in checked if d6 != o]
        return not bad, {"checked": len(checked), "mismatches": bad[:5]}

    passed, secs, detail = _timed(run)
    return CriterionResult(6, "sextic closure disc = independent maximal-order disc", passed, secs, detail)


def criterion_7(n_max: int = 10**6) -> CriterionResult:
    """Euler coefficients match enumeration: quadratic indicator and cyclic
    cubic per-disc counts, exactly, to 1e6."""

    def run():
        from .dirichlet import G2_SPEC, G3_SPEC, expand_euler
        from .fields.cyclic import cyclic_cubic_disc_counts
        from .fields.quadratic import quadratic_indicator_vector

        g2 = expand_euler(G2_SPEC, n_max)
        quad = quadratic_indicator_vector(n_max)
        first_bad = None
        for n in range(2, n_max + 1):
            if g2[n] != quad[n]:
                first_bad = ("quadratic", n, g2[n], quad[n])
                break
        if first_bad is None:
            g3 = expand_euler(G3_SPEC, n_max)
            counts = cyclic_cubic_disc_counts(n_max)
            for n in range(2, n_max + 1):
                expect = g3[n] // 2  # (g3 - 1)/2 off the constant term
                if g3[n] % 2:
                    first_bad = ("cubic-parity", n, g3[n])
                    break
                if expect != counts.get(n, 0):
                    first_bad = ("cubic", n, expect, counts.get(n, 0))
                    break
        return first_bad is None, {"n_max": n_max, "first_mismatch": first_bad}

    passed, secs, detail = _timed(run)
    return CriterionResult(7, "Euler coefficients = field enumeration", passed, secs, detail)


def criterion_8(trials: int = 1000, seed: int = 20260810) -> CriterionResult:
    """Tame compositum valuations: general cycle formula vs the coprime-lcm
    specialization, plus biquadratic agreement with the quadratic-triple identity."""

    def run():
        from .discs import (
            RamificationProfile,
            compositum_valuation,
            compositum_valuation_coprime,
            v4_complete,
        )
        from .arith import valuation

        rng = random.Random(seed)
        primes = [5, 7, 11, 13, 17, 19, 23]
        bad = []
        agree = 0
        for _ in range(trials):
            p = rng.choice(primes)
            profs = []
            for _ in range(2):
                deg = rng.randint(2, 6)
                parts = []
                left = deg
                while left:
                    c = rng.randint(1, left)
                    parts.append(c)
                    left -= c
                profs.append(RamificationProfile(deg, {p: tuple(sorted(parts, reverse=True))}))
            v_general = compositum_valuation(profs[0], profs[1], p)
            l1 = math.lcm(*profs[0].cycle_type(p))
            l2 = math.lcm(*profs[1].cycle_type(p))
            if math.gcd(l1, l2) == 1:
                v_special = compositum_valuation_coprime(profs[0], profs[1], p)
                if v_general != v_special:
                    bad.append((p, profs[0].cycles, profs[1].cycles, v_general, v_special))
                else:
                    agree += 1
        # biquadratic: valuations of d1*d2*d3 at odd tame primes from profiles
        quad_bad = []
        discs = [d for d in range(-60, 61) if d and _is_fund(d)]
        for _ in range(trials // 4):
            d1, d2 = rng.sample(discs, 2)
            d3, d_l = v4_complete(d1, d2)
            for p in (3, 5, 7, 11, 13):
                if d1 % 2 == 0 and p == 2:
                    continue
                c1 = (2,) if d1 % p == 0 else (1, 1)
                c2 = (2,) if d2 % p == 0 else (1, 1)
                v = compositum_valuation(
                    RamificationProfile(2, {p: c1}), RamificationProfile(2, {p: c2}), p
                )
                if v != valuation(d_l, p):
                    quad_bad.append((d1, d2, p, v, valuation(d_l, p)))
        ok = not bad and not quad_bad
        return ok, {
            "coprime_agreements": agree,
            "formula_mismatches": bad[:3],
            "biquadratic_mismatches": quad_bad[:3],
        }

    passed, secs, detail = _timed(run)
    return CriterionResult(8, "tame compositum valuation identities", passed, secs, detail)


def _is_fund(d: int) -> bool:
    from .arith import is_fundamental

    return is_fundamental(d)


def criterion_9(n_max: int = 10**7) -> CriterionResult:
    """Split-prime quartic family series has a simple pole at s = 1: partial
    sums of the 1 + 3/p^s product fit exponent 1 within 5 percent."""

    def run():
        from .dirichlet import LEMMA25_SPEC, expand_euler, partial_sums_at, tauberian_fit

        coeffs = expand_euler(LEMMA25_SPEC, n_max)
        grid = [int(10 ** (k / 2)) for k in range(8, 15) if 10 ** (k / 2) <= n_max]
        sums = partial_sums_at(coeffs, grid)
        fit = tauberian_fit(grid, sums)
        ok = 0.95 <= fit.a_hat <= 1.05
        return ok, {"a_hat": round(fit.a_hat, 4), "w_hat": round(fit.w_hat, 4), "S_max": sums[-1]}

    passed, secs, detail = _timed(run)
    return CriterionResult(9, "split-prime Euler product: simple pole at s=1", passed, secs, detail)


def criterion_10(x_max: int = 10**8) -> CriterionResult:
    """Divisor power sums stay within a bounded ratio of X (log X)^(2^t - 1)."""

    def run():
        from .dirichlet import divisor_power_sums

        grid = [10**k for k in range(4, 9) if 10**k <= x_max]
        detail = {}
        ok = True
        for t in (1, 2, math.log(3) / math.log(2)):
            rows = divisor_power_sums(t, grid)
            ratios = [r for _, _, r in rows]
            spread = max(ratios) / min(ratios)
            key = f"t={t:.3f}" if isinstance(t, float) and not float(t).is_integer() else f"t={int(t)}"
            detail[key] = round(spread, 3)
            ok &= spread < 3.0
        return bool(ok), detail

    passed, secs, detail = _timed(run)
    return CriterionResult(10, "divisor power sums bounded vs X(log X)^(2^t-1)", passed, secs, detail)


QUICK_SET = (1, 2, 5, 8)

_CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run_acceptance(numbers=None, quick: bool = False) -> list[CriterionResult]:
    if quick:
        numbers = QUICK_SET
    if numbers is None:
        numbers = sorted(_CRITERIA)
    return [_CRITERIA[n]() for n in numbers]
