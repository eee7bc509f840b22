"""Command-line entry point: groups / fields / verify / dirichlet / count / accept."""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from pathlib import Path

from . import __version__
from .config import Config, load_config

USAGE_EXIT = 2


class UsageError(ValueError):
    pass


def _invocation_hash(argv: list[str], cfg: Config) -> str:
    blob = json.dumps([__version__, argv, repr(cfg)], sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def _header_line(argv, cfg) -> str:
    return f"# toriq {__version__} {_invocation_hash(argv, cfg)}"


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _emit_json(path: str | None, payload: dict, argv, cfg) -> None:
    payload = {"_meta": {"tool": "toriq", "version": __version__, "invocation": _invocation_hash(argv, cfg)}, **payload}
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _normalize_label(raw: str) -> str:
    label = raw.strip()
    if label.startswith("H_{"):
        return label
    parts = label.replace("H_", "", 1).replace("-", "_").split("_")
    if len(parts) == 2:
        return f"H_{{{parts[0]},{parts[1]}}}"
    raise UsageError(f"cannot parse family label {raw!r}")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_groups(args, cfg, argv) -> int:
    from .groups import invariant_table

    if args.action != "table":
        raise UsageError("groups supports only: table")
    buf = io.StringIO()
    buf.write(_header_line(argv, cfg) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "order", "iso", "a", "b"])
    for label, order, iso, a, b in invariant_table():
        writer.writerow([label, order, iso, a, b])
    _write_text(args.out, buf.getvalue())
    return 0


def _fields_rows(kind: str, bound: int, sign: str, cfg: Config):
    if kind == "quad":
        from .fields.quadratic import enum_quadratic

        for rec in enum_quadratic(bound, workers=cfg.workers):
            yield rec, ""
    elif kind == "c3":
        from .fields.cyclic import enum_cyclic_cubic

        for rec in enum_cyclic_cubic(bound):
            yield rec, ""
    elif kind == "s3":
        from .fields.cubic import enum_cubic_s3
        from .discs import s3_closure_disc

        signs = [1, -1] if sign == "both" else [1 if sign == "+" else -1]
        for s in signs:
            for rec in enum_cubic_s3(bound, s):
                d2, _ = s3_closure_disc(rec.disc_int)
                yield rec, str(d2)
    elif kind == "c4":
        from .fields.cyclic import enum_cyclic_quartic

        for rec in enum_cyclic_quartic(bound):
            yield rec, str(rec.provenance.quad_disc)
    else:
        raise UsageError(f"unknown kind {kind!r}")


def _cmd_fields(args, cfg, argv) -> int:
    if args.action != "enum":
        raise UsageError("fields supports only: enum")
    bound = args.bound or {
        "quad": cfg.quad_bound,
        "c3": cfg.cyclic_cubic_bound,
        "s3": cfg.s3_cubic_bound,
        "c4": cfg.c4_bound,
    }[args.kind]
    buf = io.StringIO()
    buf.write(_header_line(argv, cfg) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "degree", "galois_label", "disc", "subfield_discs"])
    for i, (rec, subs) in enumerate(_fields_rows(args.kind, int(bound), args.sign, cfg)):
        writer.writerow(
            [f"{args.kind}-{i}", rec.degree, rec.galois_label, rec.disc_int, subs]
        )
    _write_text(args.out, buf.getvalue())
    return 0


def _cmd_verify(args, cfg, argv) -> int:
    from .discs import LEMMA_IDS, lemma_roles, verify_lemma_ints

    if args.action != "identities":
        raise UsageError("verify supports only: identities")
    lemma = args.lemma
    if lemma not in LEMMA_IDS:
        raise UsageError(f"unknown lemma {lemma!r}; choose from {LEMMA_IDS}")
    roles = lemma_roles(lemma)
    rows = []
    with open(args.infile, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(row for row in fh if not row.startswith("#"))
        missing = [r for r in roles if r not in (reader.fieldnames or [])]
        if missing:
            raise UsageError(f"bundle CSV missing role columns: {missing}")
        for row in reader:
            bundle = {r: int(row[r]) for r in roles}
            report = verify_lemma_ints(bundle, lemma)
            rows.append(
                {
                    "bundle": bundle,
                    "ok": report.ok,
                    "failures": [
                        {"comparison": c, "prime": p, "lhs": l, "rhs": r}
                        for c, p, l, r in report.failures
                    ],
                }
            )
    payload = {
        "lemma": lemma,
        "rows": rows,
        "all_ok": all(r["ok"] for r in rows),
    }
    _emit_json(args.report, payload, argv, cfg)
    return 0


def _cmd_dirichlet(args, cfg, argv) -> int:
    if args.action == "expand":
        from .dirichlet import SERIES_SPECS, expand_euler, lemma42_rhs

        n = int(float(args.N))
        if args.series == "lemma42":
            coeffs = lemma42_rhs(n)
        elif args.series in SERIES_SPECS:
            coeffs = expand_euler(SERIES_SPECS[args.series], n)
        else:
            raise UsageError(f"unknown series {args.series!r}")
        buf = io.StringIO()
        buf.write(_header_line(argv, cfg) + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "a_n"])
        for i in range(1, n + 1):
            writer.writerow([i, coeffs[i]])
        _write_text(args.out, buf.getvalue())
        return 0
    if args.action == "fit":
        from .dirichlet import tauberian_fit

        ns, cs = [], []
        with open(args.infile, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(row for row in fh if not row.startswith("#"))
            for row in reader:
                ns.append(int(row["n"]))
                cs.append(int(row["a_n"]))
        acc = 0
        grid, sums = [], []
        lo, hi = cfg.fit_grid
        marks = {int(round(10 ** (k / 2))) for k in range(lo, hi + 1)}
        for n, c in zip(ns, cs):
            acc += c
            if n in marks:
                grid.append(n)
                sums.append(acc)
        fit = tauberian_fit(grid, sums)
        _emit_json(
            args.report,
            {
                "grid": list(fit.grid),
                "sums": list(fit.sums),
                "a_hat": fit.a_hat,
                "w_hat": fit.w_hat,
                "r2": fit.r2,
            },
            argv,
            cfg,
        )
        return 0
    raise UsageError("dirichlet supports: expand, fit")


def _cmd_count(args, cfg, argv) -> int:
    from .census import count_family, fit_family, summary_table

    imports = None
    if cfg.import_path:
        from .fields.imports import import_fields_csv

        imports = import_fields_csv(cfg.import_path)
    if args.all_implemented:
        from .census import FAMILIES
        from .dirichlet import default_grid

        grid = default_grid(*cfg.fit_grid)
        reports = []
        for label in sorted(FAMILIES, key=_label_key):
            if label == "H_{12,c}" and not imports:
                continue
            rep = fit_family(
                label, grid, cubic_bound=cfg.census_cubic_bound, imports=imports
            )
            reports.append(rep.to_json_dict())
        _emit_json(args.out, {"reports": reports, "summary": summary_table()}, argv, cfg)
        return 0
    if not args.family:
        raise UsageError("count needs --family or --all-implemented")
    label = _normalize_label(args.family)
    if args.grid:
        from .dirichlet import default_grid

        grid = [x for x in default_grid(*cfg.fit_grid) if x <= int(float(args.X))]
        rep = fit_family(label, grid, cubic_bound=cfg.census_cubic_bound, imports=imports)
        _emit_json(args.out, rep.to_json_dict(), argv, cfg)
        return 0
    x = int(float(args.X))
    value = count_family(label, x, cubic_bound=cfg.census_cubic_bound, imports=imports)
    _emit_json(args.out, {"label": label, "X": x, "count": value}, argv, cfg)
    return 0


def _label_key(label: str):
    order, letter = label[3:-1].split(",")
    return (int(order), letter)


def _cmd_accept(args, cfg, argv) -> int:
    from .accept import run_acceptance

    numbers = None
    if args.criteria:
        numbers = [int(t) for t in args.criteria.split(",")]
    results = run_acceptance(numbers=numbers, quick=args.quick)
    for res in results:
        print(res.line())
    payload = {
        "results": [
            {
                "criterion": r.number,
                "name": r.name,
                "passed": r.passed,
                "detail": {k: repr(v) for k, v in r.detail.items()},
            }
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    if args.out:
        _emit_json(args.out, payload, argv, cfg)
    return 0 if payload["all_passed"] else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toriq",
        description="Exact arithmetic for 3-dimensional tori over Q: invariants, conductors, censuses.",
    )
    parser.add_argument("--config", default=None, help="key=value config file")
    parser.add_argument("--workers", type=int, default=None, help="worker count (>= 1)")
    parser.add_argument("--import", dest="import_path", default=None, help="field table CSV")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("groups", help="catalog invariant table")
    p.add_argument("action", choices=["table"])
    p.add_argument("--out", default=None)

    p = sub.add_parser("fields", help="field enumeration")
    p.add_argument("action", choices=["enum"])
    p.add_argument("--kind", required=True, choices=["quad", "c3", "s3", "c4"])
    p.add_argument("--bound", type=lambda s: int(float(s)), default=None)
    p.add_argument("--sign", choices=["+", "-", "both"], default="both")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="discriminant identity verification")
    p.add_argument("action", choices=["identities"])
    p.add_argument("--lemma", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--report", default=None)

    p = sub.add_parser("dirichlet", help="series expansion and fitting")
    p.add_argument("action", choices=["expand", "fit"])
    p.add_argument("--series", default=None)
    p.add_argument("--N", default=None)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--report", default=None)

    p = sub.add_parser("count", help="torus family counting")
    p.add_argument("--family", default=None)
    p.add_argument("--X", default="1e6")
    p.add_argument("--grid", action="store_true")
    p.add_argument("--all-implemented", action="store_true")
    p.add_argument("--out", default=None)

    p = sub.add_parser("accept", help="acceptance criteria suite")
    p.add_argument("--quick", action="store_true", help="criteria 1, 2, 5, 8 only")
    p.add_argument("--criteria", default=None, help="comma-separated criterion numbers")
    p.add_argument("--out", default=None)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help()
            return USAGE_EXIT
        cfg = load_config(args.config)
        if args.workers is not None:
            from dataclasses import replace

            cfg = replace(cfg, workers=args.workers)
        if args.import_path is not None:
            from dataclasses import replace

            cfg = replace(cfg, import_path=args.import_path)
        handler = {
            "groups": _cmd_groups,
            "fields": _cmd_fields,
            "verify": _cmd_verify,
            "dirichlet": _cmd_dirichlet,
            "count": _cmd_count,
            "accept": _cmd_accept,
        }[args.command]
        return handler(args, cfg, argv)
    except UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}), file=sys.stderr)
        return USAGE_EXIT
    except SystemExit as exc:  # argparse errors
        code = exc.code if isinstance(exc.code, int) else USAGE_EXIT
        return USAGE_EXIT if code not in (0,) else 0
    except Exception as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
