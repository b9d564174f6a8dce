"""Command-line front end: ``milnor analyze`` and ``milnor catalog``.

Exit codes: 0 success, 2 input error, 3 non-isolated singularities,
4 limit exceeded (chart retries, degree cap).  Catalog runs also exit 1
when some entry does not match its expected values.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .catalog import CatalogEntry, compare, load_catalog
from .errors import InputError, MilnorError
from .invariants import INFINITY, InvariantReport, analyze_hypersurface
from .ring import VariableSet, format_polynomial, infer_positional_vars, parse_polynomial
from .singlocus import DEFAULT_MAX_RETRIES

EXIT_OK = 0
EXIT_MISMATCH = 1

# JSON key -> report attribute, in output order
JSON_FIELDS = [
    ("n", "n"),
    ("d", "d"),
    ("T", "T"),
    ("smooth", "smooth"),
    ("dims", "dims"),
    ("smooth_dims", "smooth_dims"),
    ("tau", "tau"),
    ("ct", "ct"),
    ("st", "st"),
    ("mdr", "mdr"),
    ("def", "def_value"),
    ("lc", "lc"),
    ("num_singularities", "num_singularities"),
    ("nodal", "nodal"),
    ("rigidity_dimension", "rigidity_dimension"),
    ("projectively_rigid", "projectively_rigid"),
    ("seed", "seed"),
    ("chart_matrix", "chart_matrix"),
    ("chart_index", "chart_index"),
    ("timings_ms", "timings_ms"),
]
SINGULAR_ONLY = {"ct", "st", "mdr", "def", "lc", "num_singularities", "nodal"}
INVARIANT_ORDER = [("tau", "tau"), ("ct", "ct"), ("st", "st"), ("mdr", "mdr"), ("def", "def_value"), ("lc", "lc")]


# -- serialisation ------------------------------------------------------------

def report_to_dict(report: InvariantReport) -> dict:
    out: dict = {}
    if report.name is not None:
        out["name"] = report.name
    if report.polynomial is not None:
        out["polynomial"] = report.polynomial
    for key, attr in JSON_FIELDS:
        if report.smooth and key in SINGULAR_ONLY:
            continue
        out[key] = getattr(report, attr)
    if report.syzygies is not None:
        out["syzygies"] = report.syzygies
    return out


def report_from_dict(data: dict) -> InvariantReport:
    kwargs = {attr: data[key] for key, attr in JSON_FIELDS if key in data}
    for key in ("name", "polynomial", "syzygies"):
        if key in data:
            kwargs[key] = data[key]
    return InvariantReport(**kwargs)


def _series_term(c: int, k: int) -> str:
    if k == 0:
        return str(c)
    t = "t" if k == 1 else f"t^{k}"
    return t if c == 1 else f"{c}{t}"


def format_series(coeffs) -> str:
    return "+".join(_series_term(c, k) for k, c in enumerate(coeffs) if c) or "0"


def format_stable_series(dims, st: int, tau: int) -> str:
    """Prefix up to ``st - 1`` followed by the constant tail ``tau(t^st+...)``."""
    head = [_series_term(c, k) for k, c in enumerate(dims[:st]) if c]
    tail = f"({_series_term(1, st)}+...)"
    if tau != 1:
        tail = f"{tau}{tail}"
    return "+".join(head + [tail])


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _render_text(r: InvariantReport) -> str:
    lines = []
    if r.name is not None:
        lines.append(f"name: {r.name}")
    if r.polynomial is not None:
        lines.append(f"f = {r.polynomial}")
    lines.append(f"n = {r.n}, d = {r.d}, T = {r.T}")
    smooth_poly = format_series(r.smooth_dims[: r.T + 1])
    if r.smooth:
        lines.append("smooth hypersurface; S(t) = F(t)")
        lines.append(f"F(t) = {smooth_poly}")
    else:
        lines.append(f"S(t) = {format_stable_series(r.dims, r.st, r.tau)}")
        lines.append(f"F(t) = {smooth_poly}")
        lines.append(" ".join(f"{key}={getattr(r, attr)}" for key, attr in INVARIANT_ORDER))
        lines.extend(f"  {key} = {getattr(r, attr)}" for key, attr in INVARIANT_ORDER)
        if r.num_singularities is not None:
            lines.append(f"singular points: {r.num_singularities}")
            lines.append(f"nodal: {_yes_no(r.nodal)}")
    if r.rigidity_dimension is None:
        lines.append("rigidity: not computed (d > T)")
    else:
        lines.append(f"rigidity dimension: {r.rigidity_dimension}")
        lines.append(f"projectively rigid: {_yes_no(r.projectively_rigid)}")
    if r.chart_matrix is not None:
        lines.append(f"chart: seed {r.seed}, matrix {r.chart_matrix}, dehomogenised at y{r.chart_index}")
    if r.syzygies is not None:
        lines.append(f"nontrivial syzygies of degree {r.syzygies['degree']}:")
        lines.extend(f"  ({', '.join(v)})" for v in r.syzygies["basis"])
    return "\n".join(lines) + "\n"


def markdown_header() -> str:
    return "| name | tau | ct | st | mdr | def | lc | nodal | rigid |\n|---|---|---|---|---|---|---|---|---|\n"


def _render_row(r: InvariantReport) -> str:
    def cell(v):
        if v is None:
            return "-"
        if isinstance(v, bool):
            return _yes_no(v)
        return str(v)

    values = [r.name or "", r.tau]
    values += [None] * 5 if r.smooth else [r.ct, r.st, r.mdr, r.def_value, r.lc]
    values += [None if r.smooth else r.nodal, r.projectively_rigid]
    return "| " + " | ".join(cell(v) for v in values) + " |\n"


def render_report(report: InvariantReport, fmt: str = "text") -> str:
    if fmt == "text":
        return _render_text(report)
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2) + "\n"
    if fmt == "markdown-row":
        return _render_row(report)
    raise ValueError(f"unknown format {fmt!r}")


# -- commands -----------------------------------------------------------------

def _plane_curve_syzygies(f, mdr: int, vars_: VariableSet) -> dict:
    from .syzygy import syzygies_of_degree

    space = syzygies_of_degree(f, mdr)
    basis = [[format_polynomial(c, vars_) for c in v.components] for v in space.nontrivial_basis]
    return {"degree": mdr, "basis": basis}


def cmd_analyze(args) -> int:
    vars_ = VariableSet.parse(args.vars) if args.vars else infer_positional_vars(args.polynomial)
    f = parse_polynomial(args.polynomial, vars_)
    if args.syzygies and f.nvars != 3:
        raise InputError("--syzygies is only available for plane curves (three variables)")
    report = analyze_hypersurface(f, seed=args.seed, degree_cap=args.degree_cap, max_retries=args.max_retries)
    report.polynomial = format_polynomial(f, vars_)
    if args.syzygies and not report.smooth:
        report.syzygies = _plane_curve_syzygies(f, report.mdr, vars_)
    sys.stdout.write(render_report(report, "json" if args.json else "text"))
    return EXIT_OK


def _analyze_entry(entry: CatalogEntry, seed: int) -> tuple[InvariantReport | None, str | None]:
    try:
        report = analyze_hypersurface(entry.parse(), seed=seed)
    except MilnorError as exc:
        return None, f"{type(exc).__name__}: {exc}"
    report.name = entry.name
    report.polynomial = format_polynomial(entry.parse(), entry.vars)
    return report, None


def run_catalog(entries: list[CatalogEntry], seed: int = 0, jobs: int = 1):
    """Analyse every entry; results come back in catalog order."""
    if jobs <= 1 or len(entries) <= 1:
        return [_analyze_entry(e, seed) for e in entries]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_analyze_entry, entries, [seed] * len(entries)))


def cmd_catalog(args) -> int:
    entries = load_catalog(args.file)
    jobs = args.jobs or os.cpu_count() or 1
    results = run_catalog(entries, seed=args.seed, jobs=jobs)
    failures = 0
    rows = []
    for entry, (report, error) in zip(entries, results):
        problems = [f"error: {error}"] if error else compare(entry, report)
        if problems:
            failures += 1
            print(f"FAIL  {entry.name}: " + "; ".join(problems))
        else:
            print(f"PASS  {entry.name}")
        if report is not None:
            rows.append(render_report(report, "markdown-row"))
    print(f"{len(entries) - failures}/{len(entries)} entries passed")
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(markdown_header() + "".join(rows))
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="milnor", description="Milnor algebra invariants of projective hypersurfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyse one homogeneous polynomial")
    a.add_argument("polynomial")
    a.add_argument("--vars", help="comma-separated variable names (default: infer x(0), x(1), ...)")
    a.add_argument("--json", action="store_true", help="emit a JSON report")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--syzygies", action="store_true", help="plane curves: print nontrivial syzygies of degree mdr")
    a.add_argument("--degree-cap", type=int, default=None, help="refuse analyses needing Gröbner degree above N")
    a.add_argument("--max-retries", type=int, default=DEFAULT_MAX_RETRIES)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("catalog", help="analyse a JSON catalog and check expected values")
    c.add_argument("file")
    c.add_argument("--report", help="write a markdown table of the results")
    c.add_argument("--jobs", type=int, default=None, help="parallel workers (default: number of CPUs)")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MilnorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
