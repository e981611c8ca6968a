"""Empirical growth rates over n-sweeps."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import mpmath
import numpy as np
import pandas as pd
from loguru import logger

from src.construct import Params, build_Fn
from src.errors import DivergenceError, InvalidInputError
from src.evaluate import form_coefficients, growth_constants, verify_form

SLOPE_COLUMNS = {
    "log_max_c": "slope_log_max_c",
    "log_max_ell": "slope_log_max_ell",
    "log_max_form": "slope_log_max_form",
}


def measured_growth(values: Sequence[Tuple[int, Any]]) -> float:
    """Least-squares slope of log(magnitude) against n.

    Raises:
        InvalidInputError: With fewer than 3 points, a non-positive magnitude, or a single n
    """
    if len(values) < 3:
        raise InvalidInputError(f"need at least 3 points, got {len(values)}")
    ns, logs = [], []
    for n, magnitude in values:
        if magnitude <= 0:
            raise InvalidInputError(f"magnitude at n={n} must be positive, got {magnitude}")
        ns.append(float(n))
        logs.append(float(mpmath.log(magnitude)))
    if len(set(ns)) < 2:
        raise InvalidInputError("all points share the same n")
    slope, _ = np.polyfit(np.array(ns), np.array(logs), 1)
    return float(slope)


def _log10_abs(value: int) -> float:
    return float(mpmath.log10(abs(value))) if value else float("nan")


def sweep_row(params: Params, precision: int = 30, backend: str = "auto") -> Dict[str, Any]:
    """Construct, compute every admissible form and verify those whose series converges."""
    construction = build_Fn(params, backend=backend)
    table = construction.table
    max_ell = 0
    form_sizes: List[mpmath.mpf] = []
    for p, k in params.admissible_pairs():
        ell = form_coefficients(table, params, p, k)
        max_ell = max(max_ell, *(abs(v) for v in ell))
        try:
            record = verify_form(table, params, p, k, precision)
        except DivergenceError:
            continue
        form_sizes.append(record.lhs.magnitude())

    constants = growth_constants(params)
    row: Dict[str, Any] = {
        "n": params.n,
        "max_c": str(table.max_abs()),
        "max_ell": str(max_ell),
        "log_max_c": float(mpmath.log(table.max_abs())),
        "log_max_ell": float(mpmath.log(max_ell)) if max_ell else float("nan"),
        "log_max_form": float(mpmath.log(max(form_sizes))) if form_sizes else float("nan"),
        "log_min_form": float(mpmath.log(min(form_sizes))) if form_sizes else float("nan"),
        "forms_verified": len(form_sizes),
        "log_chi": constants.log_chi,
        "log_beta": constants.log_beta,
        "log_alpha0": constants.log_alpha0,
    }
    logger.info(f"sweep n={params.n}: max|c| ~ 10^{_log10_abs(table.max_abs()):.1f}")
    return row


def _sweep_job(args: Tuple[Dict[str, Any], int, str]) -> Dict[str, Any]:
    payload, precision, backend = args
    return sweep_row(Params.model_validate(payload), precision, backend)


@dataclass
class SweepResults:
    frame: pd.DataFrame
    slopes: Dict[str, float] = field(default_factory=dict)

    def to_csv(self, path: Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.frame.to_csv(path, index=False)
        logger.info(f"sweep written to {path}")


class GrowthSweep:
    """Runs the pipeline for a list of n and fits log-magnitude slopes."""

    def __init__(self, precision: int = 30, backend: str = "auto", max_workers: int = 1):
        self.precision = precision
        self.backend = backend
        self.max_workers = max_workers

    def run(self, template: Params, n_values: Sequence[int]) -> SweepResults:
        """Sweep ``template`` over ``n_values``.

        Every instance is validated (rn, ωn, Ωn, κn integral) before any work.

        Returns:
            One row per n plus slope columns (NaN when fewer than 3 finite points)
        """
        instances = [template.with_n(n) for n in sorted(set(n_values))]
        logger.info(f"sweeping n in {[p.n for p in instances]} with {self.max_workers} workers")
        jobs = [(p.model_dump(), self.precision, self.backend) for p in instances]
        if self.max_workers > 1:
            with ProcessPoolExecutor(max_workers=self.max_workers) as pool:
                rows = list(pool.map(_sweep_job, jobs))
        else:
            rows = [_sweep_job(job) for job in jobs]

        frame = pd.DataFrame(rows).sort_values("n").reset_index(drop=True)
        slopes: Dict[str, float] = {}
        for column, slope_column in SLOPE_COLUMNS.items():
            finite = frame[np.isfinite(frame[column])]
            points = [(int(n), mpmath.exp(v)) for n, v in zip(finite["n"], finite[column])]
            slopes[slope_column] = measured_growth(points) if len(points) >= 3 else float("nan")
            frame[slope_column] = slopes[slope_column]
        logger.success(f"sweep finished: {slopes}")
        return SweepResults(frame, slopes)


def sweep(
    template: Params,
    n_values: Sequence[int],
    output: Optional[Path] = None,
    precision: int = 30,
    backend: str = "auto",
    max_workers: int = 1,
) -> SweepResults:
    results = GrowthSweep(precision, backend, max_workers).run(template, n_values)
    if output is not None:
        results.to_csv(output)
    return results
