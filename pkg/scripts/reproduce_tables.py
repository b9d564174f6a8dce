"""Recompute the invariant tables for every shipped example and write them as markdown.

    python scripts/reproduce_tables.py                 # fast examples, tables.md
    python scripts/reproduce_tables.py --octics        # also the two octics (~1 min)
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from milnor.catalog import compare, shipped_catalog
from milnor.cli import format_stable_series, markdown_header, render_report, run_catalog


@dataclass
class TableConfig:
    octics: bool = False
    seed: int = 0
    jobs: int = 1
    out: str = "tables.md"


def run(cfg: TableConfig) -> int:
    entries = shipped_catalog("examples") + (shipped_catalog("octics") if cfg.octics else [])
    results = run_catalog(entries, seed=cfg.seed, jobs=cfg.jobs)
    rows, series, failures = [], [], 0
    for entry, (report, error) in zip(entries, results):
        problems = [error] if error else compare(entry, report)
        failures += bool(problems)
        if report is None:
            continue
        rows.append(render_report(report, "markdown-row"))
        s = "S(t) = F(t)" if report.smooth else "S(t) = " + format_stable_series(report.dims, report.st, report.tau)
        mark = "" if not problems else "  MISMATCH: " + "; ".join(problems)
        series.append(f"- {entry.name}: {s}{mark}\n")
    with open(cfg.out, "w") as fh:
        fh.write("## Invariants\n\n" + markdown_header() + "".join(rows))
        fh.write("\n## Hilbert series\n\n" + "".join(series))
    print(f"wrote {cfg.out}; {len(entries) - failures}/{len(entries)} entries match their expected values")
    return 0 if failures == 0 else 1


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--octics", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="tables.md")
    sys.exit(run(TableConfig(**vars(p.parse_args()))))


if __name__ == "__main__":
    main()
