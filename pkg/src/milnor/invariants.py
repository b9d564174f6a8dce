"""Hilbert-function invariants of a projective hypersurface and its rigidity.

All invariants are read off two sequences: ``dims[k] = dim M(f)_k`` and the
smooth comparison sequence of the same ``(n, d)``, both for ``k = 0..T+1``
where ``T = (n+1)(d-2)``.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Union

from .errors import InputError, LimitExceededError, NonIsolatedSingularitiesError
from .groebner import buchberger
from .hilbert import INFINITE, HilbertData, hilbert_data
from .ring import Polynomial, jacobian
from .singlocus import DEFAULT_MAX_RETRIES, MEETS_LOCUS, singularity_census

INFINITY = "infinity"

LcValue = Union[int, str]


def _require_singular(h: HilbertData) -> int:
    tau = h.stable_value
    if tau == 0:
        raise ValueError("invariant undefined for a smooth hypersurface")
    return tau


def global_tjurina(h: HilbertData) -> int:
    """Stable value ``dims[T+1]``; checks that the sequence has stabilised."""
    tau = h.stable_value
    if tau and h.dims[h.T] != tau:
        raise NonIsolatedSingularitiesError(
            f"Hilbert function not stable at T={h.T}: dims[T]={h.dims[h.T]}, dims[T+1]={tau}"
        )
    return tau


def coincidence_threshold(h: HilbertData) -> int:
    _require_singular(h)
    q = -1
    for a, s in zip(h.dims, h.smooth_dims):
        if a != s:
            break
        q += 1
    return q


def stability_threshold(h: HilbertData, tau: int) -> int:
    if tau <= 0:
        raise ValueError("invariant undefined for a smooth hypersurface")
    q = len(h.dims)
    while q > 0 and h.dims[q - 1] == tau:
        q -= 1
    return q


def minimal_syzygy_degree(ct: int, d: int) -> int:
    if ct < d - 2:
        raise ValueError(f"ct={ct} < d-2={d - 2}: inconsistent with ct = mdr + d - 2")
    return ct - (d - 2)


def defect_invariant(h: HilbertData, ct: int) -> int:
    _require_singular(h)
    if ct + 1 > h.T + 1:
        raise ValueError("coincidence threshold beyond the computed range")
    return h.dims[ct + 1] - h.smooth_dims[ct + 1]


def log_concavity_threshold(h: HilbertData, st: int) -> LcValue:
    """Largest ``q`` with ``dims[0..q]`` log-concave; ``"infinity"`` once ``q > st``."""
    _require_singular(h)
    a = h.dims
    for i in range(1, len(a) - 1):
        if a[i - 1] * a[i + 1] > a[i] * a[i]:
            return INFINITY if i >= st + 1 else i
        if i >= st + 1:
            return INFINITY
    return INFINITY


def rigidity_dimension(h: HilbertData, tau: int, d: int) -> int:
    """``dim Ĵ_d / J_d = a_d - f_d + a_(T-d) - tau``."""
    if d > h.T:
        raise ValueError(f"d={d} > T={h.T}: rigidity formula does not apply")
    return h.dims[d] - h.smooth_dims[d] + h.dims[h.T - d] - tau


@dataclass
class InvariantReport:
    n: int
    d: int
    T: int
    smooth: bool
    dims: list[int]
    smooth_dims: list[int]
    tau: int
    ct: int | None = None
    st: int | None = None
    mdr: int | None = None
    def_value: int | None = None
    lc: LcValue | None = None
    num_singularities: int | None = None
    nodal: bool | None = None
    rigidity_dimension: int | None = None
    projectively_rigid: bool | None = None
    seed: int | None = None
    chart_matrix: list[list[int]] | None = None
    chart_index: int | None = None
    name: str | None = None
    polynomial: str | None = None
    timings_ms: dict[str, float] = field(default_factory=dict)
    syzygies: dict | None = None

    def as_dict(self) -> dict:
        return asdict(self)


def analyze_hypersurface(
    f: Polynomial,
    seed: int = 0,
    degree_cap: int | None = None,
    max_retries: int = DEFAULT_MAX_RETRIES,
    census: bool = True,
) -> InvariantReport:
    """Full analysis: Hilbert function to ``T+1``, invariants, census, rigidity.

    ``degree_cap`` is a resource limit: the analysis needs the Gröbner basis
    up to degree ``T+1`` and refuses to run if that exceeds the cap.
    """
    if f.is_zero():
        raise InputError("zero polynomial")
    d, homogeneous = f.degree(), f.is_homogeneous()
    if not homogeneous:
        raise InputError("polynomial is not homogeneous")
    n = f.nvars - 1
    if n < 1 or d < 2:
        raise InputError(f"need at least 2 variables and degree >= 2 (got {f.nvars} variables, degree {d})")
    T = (n + 1) * (d - 2)
    if degree_cap is not None and T + 1 > degree_cap:
        raise LimitExceededError(f"analysis needs degree {T + 1} > degree cap {degree_cap}")

    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    G = buchberger(jacobian(f), degree_cap=T + 1)
    t1 = time.perf_counter()
    timings["groebner"] = round((t1 - t0) * 1000, 3)
    h = hilbert_data(G, n, d)
    t2 = time.perf_counter()
    timings["hilbert"] = round((t2 - t1) * 1000, 3)

    tau = global_tjurina(h)
    report = InvariantReport(
        n=n, d=d, T=T, smooth=tau == 0, dims=list(h.dims), smooth_dims=list(h.smooth_dims), tau=tau, seed=seed
    )
    if d <= T:
        # for smooth f the saturation is S itself and the formula still holds
        report.rigidity_dimension = rigidity_dimension(h, tau, d)
        report.projectively_rigid = report.rigidity_dimension == 0
    if tau == 0:
        report.timings_ms = timings
        return report

    report.ct = coincidence_threshold(h)
    report.st = stability_threshold(h, tau)
    report.mdr = minimal_syzygy_degree(report.ct, d)
    report.def_value = defect_invariant(h, report.ct)
    report.lc = log_concavity_threshold(h, report.st)

    if census:
        t3 = time.perf_counter()
        try:
            summary = singularity_census(f, tau, seed=seed, max_retries=max_retries)
        except LimitExceededError as exc:
            if all(a in (INFINITE, MEETS_LOCUS) for a in getattr(exc, "attempts", (0,))):
                raise NonIsolatedSingularitiesError(str(exc)) from exc
            raise
        timings["census"] = round((time.perf_counter() - t3) * 1000, 3)
        if summary.tau_affine != tau:
            raise NonIsolatedSingularitiesError("affine Tjurina number disagrees with the Hilbert function")
        report.num_singularities = summary.num_points
        report.nodal = summary.nodal
        report.chart_matrix = [list(r) for r in summary.chart.matrix]
        report.chart_index = summary.chart.dehom_index
    report.timings_ms = timings
    return report
