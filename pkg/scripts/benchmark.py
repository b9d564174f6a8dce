"""Per-stage timings (Gröbner basis, Hilbert function, census) for catalog entries.

    python scripts/benchmark.py                    # fast catalog
    python scripts/benchmark.py --catalog octics   # the two octics, about a minute
    python scripts/benchmark.py --out bench.md
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from milnor.catalog import shipped_catalog
from milnor.invariants import analyze_hypersurface


@dataclass
class BenchConfig:
    catalog: str = "examples"
    seed: int = 0
    repeat: int = 1
    only: str | None = None
    out: str | None = None


def run(cfg: BenchConfig) -> list[dict]:
    rows = []
    for entry in shipped_catalog(cfg.catalog):
        if cfg.only and cfg.only not in entry.name:
            continue
        f = entry.parse()
        best = None
        for _ in range(cfg.repeat):
            t = time.perf_counter()
            report = analyze_hypersurface(f, seed=cfg.seed)
            total = time.perf_counter() - t
            if best is None or total < best[0]:
                best = (total, report)
        total, report = best
        rows.append(
            {
                "name": entry.name,
                "n": report.n,
                "d": report.d,
                "tau": report.tau,
                "groebner_ms": report.timings_ms.get("groebner", 0.0),
                "hilbert_ms": report.timings_ms.get("hilbert", 0.0),
                "census_ms": report.timings_ms.get("census", 0.0),
                "total_s": round(total, 3),
            }
        )
        print(f"{entry.name:32s} {total:8.3f}s", flush=True)
    return rows


def to_markdown(rows: list[dict]) -> str:
    keys = list(rows[0]) if rows else []
    lines = ["| " + " | ".join(keys) + " |", "|" + "---|" * len(keys)]
    lines += ["| " + " | ".join(str(r[k]) for k in keys) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--catalog", default="examples", choices=["examples", "octics"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=1, help="keep the fastest of N runs")
    p.add_argument("--only", help="substring filter on entry names")
    p.add_argument("--out", help="write a markdown table here")
    cfg = BenchConfig(**vars(p.parse_args()))
    rows = run(cfg)
    table = to_markdown(rows)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(table)
    else:
        print(table)


if __name__ == "__main__":
    main()
