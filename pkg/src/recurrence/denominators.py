"""δ_k = d_k^2 Δ_{a,max(k,n)} and the integrality/size sweep over θ."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Dict, List

from loguru import logger

from src.arith import FactoredInt, delta, lcm_range
from src.errors import IntegralityError, InvalidInputError, InvariantViolation
from src.recurrence.engine import as_setup
from src.recurrence.theta import probe_states


def denominator(k: int, a: int, n: int) -> FactoredInt:
    """δ_k for a rows of degree <= n."""
    if min(k, a, n) < 1:
        raise InvalidInputError(f"denominator needs k, a, n >= 1, got {(k, a, n)}")
    return lcm_range(k) ** 2 * delta(a, max(k, n))


def scaled_factor(k: int, a: int, n: int) -> Fraction:
    """δ_k / (k-1)! as an exact rational."""
    return Fraction(denominator(k, a, n).value, factorial(k - 1))


@dataclass
class IntegralityReport:
    """Outcome of the δ_k θ / (k-1)! sweep."""

    a: int
    n: int
    k_max: int
    checked: int = 0
    nonzero: int = 0
    max_ratio_upper: float = 0.0
    max_ratio_zero: float = 0.0
    per_level: Dict[int, int] = field(default_factory=dict)
    violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def max_ratio(self) -> float:
        return max(self.max_ratio_upper, self.max_ratio_zero)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": self.a,
            "n": self.n,
            "k_max": self.k_max,
            "checked": self.checked,
            "nonzero": self.nonzero,
            "violations": len(self.violations),
            "violation_entries": self.violations,
            "max_ratio_upper": self.max_ratio_upper,
            "max_ratio_zero": self.max_ratio_zero,
        }


def _record(
    report: IntegralityReport, error: InvariantViolation, kind: str, strict: bool
) -> None:
    if strict:
        raise error
    logger.warning(str(error))
    report.violations.append(
        {"index": list(error.index or ()), "value": str(error.observed), "kind": kind}
    )


def integrality_report(params: Any, k_max: int, strict: bool = True) -> IntegralityReport:
    """Check δ_k θ / (k-1)! ∈ Z and its size bound for every θ with k <= k_max.

    The bound is k^a 2^n δ_k for rows i >= 1 and max(α0, α1) k^{a+1} 8^{max(n,k)} δ_k
    for row 0. In strict mode the first failure is raised with its (k, i, j, i', j')
    index; otherwise every failure is recorded in ``report.violations``.

    Args:
        params: Params or RecurrenceSetup
        k_max: Last level swept
        strict: Raise on the first failure instead of collecting

    Returns:
        Counts, maximal bound ratios and collected violations

    Raises:
        IntegralityError: If a scaled θ has a denominator (strict)
        InvariantViolation: If a scaled θ exceeds its bound (strict)
    """
    setup = as_setup(params)
    a, n = setup.a, setup.n
    if a > 4 or n > 8 or k_max > 20:
        logger.warning(f"integrality sweep beyond desk scale: a={a}, n={n}, k_max={k_max}")

    report = IntegralityReport(a, n, k_max)
    deltas = {k: denominator(k, a, n).value for k in range(1, k_max + 1)}
    alpha_max = max(setup.alpha)

    for i_ in range(1, a + 1):
        for j_ in range(n + 1):
            for state in probe_states(setup, i_, j_, k_max):
                k = state.level
                scale = Fraction(deltas[k], factorial(k - 1))
                bound_upper = k**a * 2**n * deltas[k]
                bound_zero = alpha_max * k ** (a + 1) * 8 ** max(n, k) * deltas[k]
                for i, poly in enumerate(state.polys):
                    for j, theta in enumerate(poly.numerator):
                        report.checked += 1
                        if theta == 0:
                            continue
                        index = (k, i, j, i_, j_)
                        value = scale * theta
                        report.nonzero += 1
                        report.per_level[k] = report.per_level.get(k, 0) + 1
                        if value.denominator != 1:
                            error = IntegralityError(
                                "δ_k θ / (k-1)! is not an integer", index=index, observed=value
                            )
                            _record(report, error, "integrality", strict)
                            continue
                        bound = bound_zero if i == 0 else bound_upper
                        ratio = Fraction(abs(value.numerator), bound)
                        if ratio > 1:
                            error = InvariantViolation(
                                "scaled θ exceeds its bound", index=index, observed=value
                            )
                            _record(report, error, "bound", strict)
                        if i == 0:
                            report.max_ratio_zero = max(report.max_ratio_zero, float(ratio))
                        else:
                            report.max_ratio_upper = max(report.max_ratio_upper, float(ratio))

    logger.success(
        f"integrality sweep a={a} n={n} k_max={k_max}: {report.nonzero} nonzero entries, "
        f"max ratio {report.max_ratio:.3g}"
    )
    return report
