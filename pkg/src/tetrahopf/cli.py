"""Command-line front end.

Usage::

    tetrahopf build     [--config FILE] [--lambda LIT]
    tetrahopf verify    [--config FILE] [--suite NAME] [--g LABEL]
    tetrahopf simples   [--config FILE]
    tetrahopf decompose  --g LABEL [--config FILE]
    tetrahopf tables    [--g LABEL] [--config FILE]

Every subcommand accepts ``--lambda``, ``--out``, ``--format`` and ``--jobs``.
Without ``--config`` the extended (F4 x| C6) x C4 realization is used.

Group labels follow the grammar::

    label   := pair | pair "*" "(" power ")"
    pair    := "(" f4 "," power ")"
    f4      := "0" | "1" | "w" | "w^2"      (also accepts the omega symbol)
    power   := "1" | sym | sym "^" n

for example ``(0,t^3)``, ``(w^2,1)`` or ``(0,t^3)*(g^1)``.

Exit codes: 0 when every check passes, 1 on a verification failure, 2 on a
configuration or usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor

from . import verify as V
from .algebra import AlgebraContext, verify_bibj
from .realization import ConfigError, realization_from_config, validate_realization, z_weight_is_e
from .report import Report
from .repr import classify_simples, decompose, radical_top_socle, tables_csv, verma
from .rewrite import CompletionError, BasisError
from .scalars import scalar_str

log = logging.getLogger("tetrahopf")

DEFAULT_CONFIG = {"kind": "extended", "m": 1, "k": 0, "extra": "C4", "chi1_exponent": 1}
VERIFY_SUITES = ("basis", "bibj", "tables", "integrals", "spherical", "idempotents", "simples", "vermas", "ext", "all")


class UsageError(Exception):
    pass


# -- configuration ------------------------------------------------------------

def load_config(path: str | None) -> dict:
    if path is None:
        return dict(DEFAULT_CONFIG)
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise UsageError(f"{path}: the config must be a JSON object")
    return doc


def build_context(args) -> AlgebraContext:
    doc = load_config(args.config)
    lam = args.lam if args.lam is not None else doc.get("lambda", 1)
    try:
        r = realization_from_config(doc)
    except (ConfigError, ValueError, TypeError, IndexError) as exc:
        raise UsageError(f"invalid realization: {exc}") from None
    check = validate_realization(r)
    if not check:
        bad = check.first_failure()
        raise UsageError(f"realization fails validation: {bad.name} ({bad.witness})")
    try:
        return AlgebraContext(r, str(lam))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid lambda {lam!r}: {exc}") from None


def element(ctx: AlgebraContext, label: str) -> int:
    try:
        return ctx.group.element(label)
    except KeyError:
        raise UsageError(f"unknown group element {label!r}") from None


def _need_deformed(ctx: AlgebraContext, what: str) -> None:
    if ctx.is_bosonization:
        raise UsageError(f"{what} needs the deformed case (lambda != 0 and chi_z != 1)")


def _default_g(ctx: AlgebraContext, label: str | None) -> int:
    if label is not None:
        g = element(ctx, label)
        if ctx.in_kernel(g):
            raise UsageError(f"{label} lies in ker chi_z; choose g outside the kernel")
        return g
    return V.outside_kernel(ctx)[0]


# -- output ---------------------------------------------------------------------

def _rows_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    keys = list(rows[0]) if rows else []
    w = csv.DictWriter(buf, keys, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: "; ".join(v) if isinstance(v, list) else v for k, v in r.items()})
    return buf.getvalue()


def _report_csv(rep: Report) -> str:
    return _rows_csv([{"suite": rep.suite, **c.to_dict(), "witness": "" if c.witness is None else str(c.witness)} for c in rep.checks])


def render_report(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return rep.to_json() + "\n"
    if fmt == "csv":
        return _report_csv(rep)
    return rep.to_text() + "\n"


def emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ------------------------------------------------------------------

def build_summary(ctx: AlgebraContext) -> dict:
    if not ctx.lam:
        mode = "bosonization (lambda = 0)"
    elif len(ctx.kernel) == ctx.group.size:
        mode = "bosonization (χ_z = 1)"
    else:
        mode = "deformed"
    return {
        "group_order": ctx.group.size,
        "dim": ctx.dim,
        "kernel_order": len(ctx.kernel),
        "z_weight_e": z_weight_is_e(ctx.realization),
        "mode": mode,
        "lambda": scalar_str(ctx.lam),
        "rules": len(ctx.rules),
    }


def cmd_build(args) -> int:
    ctx = build_context(args)
    s = build_summary(ctx)
    if args.format == "json":
        text = json.dumps(s, indent=2, ensure_ascii=False) + "\n"
    elif args.format == "csv":
        text = _rows_csv([s])
    else:
        text = "".join(f"{k}: {v}\n" for k, v in s.items())
    emit(args, text)
    return 0


def _parallel(args, fn, items):
    """Run ``fn`` over ``items``; results come back in input order."""
    if args.jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        return list(pool.map(fn, items))


def run_suite(ctx: AlgebraContext, name: str, args) -> Report:
    if name == "basis":
        return V.suite_basis(ctx)
    if name == "bibj":
        return verify_bibj(ctx)
    if name == "tables":
        _need_deformed(ctx, "the tables suite")
        return V.suite_tables(ctx, _default_g(ctx, args.g))[0]
    if name == "integrals":
        return V.suite_integrals(ctx)
    if name == "spherical":
        return V.suite_spherical(ctx)
    if name == "idempotents":
        rep = Report("idempotents")
        for sub in _parallel(args, lambda g: V.suite_idempotents(ctx, [g]), list(ctx.group.elements())):
            rep.extend(sub)
        return rep
    if name == "simples":
        return V.suite_simples(ctx)
    if name == "vermas":
        return V.suite_vermas(ctx)
    if name == "ext":
        return V.suite_ext(ctx)
    raise UsageError(f"unknown suite {name!r}")


def cmd_verify(args) -> int:
    ctx = build_context(args)
    if args.suite == "all":
        names = ["basis", "bibj", "idempotents", "integrals", "spherical"]
        if not ctx.is_bosonization:
            names += ["tables", "simples", "vermas", "ext"]
        rep = Report("all")
        for n in names:
            rep.extend(run_suite(ctx, n, args), f"{n}: ")
    else:
        rep = run_suite(ctx, args.suite, args)
    emit(args, render_report(rep, args.format))
    return 0 if rep.ok else 1


def cmd_simples(args) -> int:
    ctx = build_context(args)
    G = ctx.group
    classes = classify_simples(ctx) if not ctx.is_bosonization else None
    rows = []
    if classes is None:
        for h in G.elements():
            rows.append({"class": f"k[{G.label(h)}]", "kind": "one", "dim": 1, "support": [G.label(h)], "rep": G.label(h)})
    else:
        for c in classes:
            rep_label = G.label(c.rep[0]) if c.kind == "one" else f"({c.rep[0]}, {G.label(c.rep[1])})"
            rows.append({
                "class": c.label(ctx),
                "kind": c.kind,
                "dim": c.dim,
                "support": sorted(G.label(x) for x in c.support),
                "rep": rep_label,
            })
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        text = _rows_csv(rows)
    else:
        ones = sum(r["dim"] == 1 for r in rows)
        lines = [f"{ones} one-dimensional, {len(rows) - ones} twelve-dimensional"]
        lines += [f"{r['class']}  dim {r['dim']}  support {{{', '.join(r['support'])}}}" for r in rows]
        text = "\n".join(lines) + "\n"
    emit(args, text)
    return 0


def cmd_decompose(args) -> int:
    ctx = build_context(args)
    G = ctx.group
    g = element(ctx, args.g)
    M = verma(ctx, g)
    if ctx.in_kernel(g) or ctx.is_bosonization:
        rd = radical_top_socle(ctx, M)
        out = {
            "g": G.label(g),
            "kind": "free",
            "dim": M.dim,
            "top": [G.label(w) for w in rd.top_weights],
            "socle": [G.label(w) for w in rd.socle_weights],
        }
        text_lines = [
            f"M[{out['g']}]: free module of rank 1 over the Nichols algebra, dim {M.dim}",
            f"top k[{', '.join(out['top'])}]",
            f"soc k[{', '.join(out['socle'])}]",
        ]
    else:
        d = decompose(ctx, M)
        out = {
            "g": G.label(g),
            "kind": "semisimple",
            "dim": M.dim,
            "summands": [{"class": lab, "dim": 12, "multiplicity": m} for lab, m in sorted(d.multiplicities.items())],
            "residual_dim": d.residual.dim,
        }
        text_lines = [f"M[{out['g']}] (dim {M.dim}) = " + " + ".join(
            f"{s['class']}" + (f"^{s['multiplicity']}" if s["multiplicity"] > 1 else "") for s in out["summands"]
        )]
        if d.residual.dim:
            text_lines.append(f"residual of dim {d.residual.dim}")
    if args.format == "json":
        text = json.dumps(out, indent=2) + "\n"
    elif args.format == "csv":
        rows = out.get("summands") or [{"class": "free", "dim": M.dim, "multiplicity": 1}]
        text = _rows_csv(rows)
    else:
        text = "\n".join(text_lines) + "\n"
    emit(args, text)
    return 0


def cmd_tables(args) -> int:
    ctx = build_context(args)
    _need_deformed(ctx, "tables")
    g = _default_g(ctx, args.g)
    rep, parts = V.suite_tables(ctx, g)
    fmt = args.format
    if fmt == "csv":
        text = tables_csv(parts)
    else:
        text = render_report(rep, fmt)
    emit(args, text)
    return 0 if rep.ok else 1


# -- entry point ----------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="realization JSON document")
    common.add_argument("--lambda", dest="lam", help="deformation parameter, e.g. 1, 3/2 or 1 + z^1")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for per-element checks")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="tetrahopf", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common], help="build the algebra and summarize it")
    pv = sub.add_parser("verify", parents=[common], help="run a verification suite")
    pv.add_argument("--suite", choices=VERIFY_SUITES, default="all")
    pv.add_argument("--g", help="element outside ker chi_z for the tables suite")
    sub.add_parser("simples", parents=[common], help="list simple module classes")
    pd = sub.add_parser("decompose", parents=[common], help="decompose the Verma module M_g")
    pd.add_argument("--g", required=True, help="group element label")
    pt = sub.add_parser("tables", parents=[common], help="compare the L_i^g action tables")
    pt.add_argument("--g", help="element outside ker chi_z")
    return p


COMMANDS = {"build": cmd_build, "verify": cmd_verify, "simples": cmd_simples, "decompose": cmd_decompose, "tables": cmd_tables}


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CompletionError, BasisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
