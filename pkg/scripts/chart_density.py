"""How chart choice affects the census: screening pass rate and cost vs shear density.

For each entry, draws charts at several shear densities, screens them with the
hyperplane test, validates survivors and times the basis plus radical.  The
results motivate sparse shears as the default.

    python scripts/chart_density.py --entries Kummer "Burkhardt quartic" --trials 10
"""
from __future__ import annotations

import argparse
import random
import statistics
import time
from dataclasses import dataclass, field

import milnor.singlocus as sl
from milnor.catalog import shipped_catalog
from milnor.hilbert import vector_space_dimension
from milnor.invariants import analyze_hypersurface


@dataclass
class DensityConfig:
    entries: list[str] = field(default_factory=lambda: ["Kummer", "Burkhardt quartic", "quintic 3-fold, 125 nodes"])
    densities: list[float] = field(default_factory=lambda: [0.25, 0.5, 1.0])
    trials: int = 8
    seed: int = 0
    timeout_s: float = 120.0


def sample_chart(rng: random.Random, nvars: int, density: float) -> sl.ChartTransform:
    saved = sl.SHEAR_DENSITY
    sl.SHEAR_DENSITY = density
    try:
        return sl.random_chart(rng, nvars)
    finally:
        sl.SHEAR_DENSITY = saved


def run(cfg: DensityConfig) -> None:
    entries = {e.name: e for e in shipped_catalog("examples")}
    for name in cfg.entries:
        f = entries[name].parse()
        tau = analyze_hypersurface(f, census=False).tau
        for density in cfg.densities:
            rng = random.Random(cfg.seed)
            passed, valid, costs = 0, 0, []
            for _ in range(cfg.trials):
                chart = sample_chart(rng, f.nvars, density)
                if not sl.hyperplane_misses_locus(f, chart):
                    continue
                passed += 1
                t = time.perf_counter()
                G = sl.affine_jacobian_basis(f, chart)
                if vector_space_dimension(G) != tau:
                    continue
                valid += 1
                sl.zero_dimensional_radical(G)
                costs.append(time.perf_counter() - t)
                if costs[-1] > cfg.timeout_s:
                    break
            med = f"{statistics.median(costs):.3f}s" if costs else "-"
            print(f"{name:28s} density={density:<5} screened {passed}/{cfg.trials} valid {valid} median {med}", flush=True)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--entries", nargs="+", default=DensityConfig().entries)
    p.add_argument("--densities", nargs="+", type=float, default=DensityConfig().densities)
    p.add_argument("--trials", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timeout-s", type=float, default=120.0)
    run(DensityConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    main()
