"""lcm(1..N), Δ_{a,N} and their brute-force oracles."""

import math
from functools import reduce
from typing import Set

import mpmath
from loguru import logger
from sympy import primerange

from src.arith.factored import FactoredInt
from src.errors import InvalidInputError, RangeGuardError

BRUTEFORCE_MAX_A = 6
BRUTEFORCE_MAX_N = 40


def _require_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise InvalidInputError(f"{name} must be >= 1, got {value}")


def _prime_powers(p: int, N: int):
    """Yield p, p^2, ... while <= N."""
    q = p
    while q <= N:
        yield q
        q *= p


def lcm_range(N: int) -> FactoredInt:
    """d_N = lcm(1, ..., N); prime p carries exponent floor(log N / log p)."""
    _require_positive(N=N)
    return FactoredInt({p: sum(1 for _ in _prime_powers(p, N)) for p in primerange(2, N + 1)})


def delta(a: int, N: int) -> FactoredInt:
    """Δ_{a,N} as the product over prime powers p^e <= N of p^{min(a, floor(N / p^e))}.

    Args:
        a: Maximal number of factors in the products
        N: Range bound for the factors

    Returns:
        Δ_{a,N} in factored form
    """
    _require_positive(a=a, N=N)
    factors = {
        p: sum(min(a, N // q) for q in _prime_powers(p, N)) for p in primerange(2, N + 1)
    }
    return FactoredInt(factors)


def delta_bruteforce(a: int, N: int) -> int:
    """lcm of every product of at most a distinct non-zero integers of [-N, N] with spread <= N.

    Tuples are generated in increasing order, so the spread of a tuple is its last
    entry minus its first and the search can stop a branch as soon as it is exceeded.
    """
    _require_positive(a=a, N=N)
    if a > BRUTEFORCE_MAX_A or N > BRUTEFORCE_MAX_N:
        raise RangeGuardError(
            f"delta_bruteforce limited to a <= {BRUTEFORCE_MAX_A}, N <= {BRUTEFORCE_MAX_N}; "
            f"got a={a}, N={N}"
        )

    values = [v for v in range(-N, N + 1) if v != 0]
    products: Set[int] = {1}

    def extend(start: int, lowest: int, depth: int, product: int) -> None:
        for idx in range(start, len(values)):
            v = values[idx]
            if v - lowest > N:
                break
            extended = product * v
            products.add(abs(extended))
            if depth + 1 < a:
                extend(idx + 1, lowest, depth + 1, extended)

    for idx, first in enumerate(values):
        products.add(abs(first))
        if a > 1:
            extend(idx + 1, first, 1, first)

    logger.debug(f"delta_bruteforce(a={a}, N={N}): {len(products)} distinct products")
    return reduce(math.lcm, products, 1)


def binomial_lcm(N: int) -> int:
    """lcm of C(N, i) for 0 <= i <= N, computed directly."""
    _require_positive(N=N)
    return reduce(math.lcm, (math.comb(N, i) for i in range(N + 1)), 1)


def delta_log_bound(a: int, N: int) -> mpmath.mpf:
    """N * (γ + log(a+1)), the leading term of the bound on log Δ_{a,N}."""
    _require_positive(a=a, N=N)
    return N * (mpmath.euler + mpmath.log(a + 1))
