"""Shared pytest fixtures for the zeta linear forms toolkit."""

import random
from pathlib import Path
from typing import Callable, Dict, List, Optional

import pytest

from src.construct import Construction, Params, build_Fn


# ============================================================================
# Parameter Fixtures
# ============================================================================


@pytest.fixture
def small_params() -> Params:
    """(a, ω, Ω, r, n) = (4, 1, 2, 1, 4): three vanishing conditions, 20 unknowns."""
    return Params(a=4, n=4, r=1, omega=1, Omega=2)


@pytest.fixture(scope="session")
def zeta_params() -> Params:
    """Zeta-mode desk instance with admissible pairs p in 0..2, k in 6..7."""
    return Params(a=5, n=2, r=1, omega=4, Omega=4, kappa="7/2", h=2)


@pytest.fixture(scope="session")
def polylog_params() -> Params:
    """Polylog-mode desk instance at z0 = -2 with pairs p in 0..1, k in 5..8."""
    return Params(a=5, n=2, r=1, omega=4, Omega=4, kappa=4, h=1, mode="polylog", z0=-2, q=2)


@pytest.fixture(scope="session")
def rank_params() -> Params:
    """Wide window for the rank pipeline: k in 6..10, p in 0..3."""
    return Params(a=3, n=2, r=1, omega="5/2", Omega="5/2", kappa=5, h=3)


# ============================================================================
# Construction Fixtures
# ============================================================================


@pytest.fixture(scope="session")
def zeta_construction(zeta_params: Params) -> Construction:
    return build_Fn(zeta_params)


@pytest.fixture(scope="session")
def polylog_construction(polylog_params: Params) -> Construction:
    return build_Fn(polylog_params)


@pytest.fixture(scope="session")
def rank_construction(rank_params: Params) -> Construction:
    return build_Fn(rank_params)


# ============================================================================
# Random Tables
# ============================================================================


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator; the seed matches the default ZETAFORMS_SEED."""
    return random.Random(20240101)


@pytest.fixture
def random_rows(rng: random.Random) -> Callable[[int, int], List[List[int]]]:
    def make(a: int, n: int, bound: int = 5) -> List[List[int]]:
        return [[rng.randint(-bound, bound) for _ in range(n + 1)] for _ in range(a)]

    return make


# ============================================================================
# Config Files
# ============================================================================


@pytest.fixture
def write_toml(tmp_path: Path) -> Callable[..., Path]:
    """Write a run file with a [params] table and an optional [run] table."""

    def write(
        params: Dict[str, object], run: Optional[Dict[str, object]] = None, name: str = "run.toml"
    ) -> Path:
        def render(value: object) -> str:
            if isinstance(value, bool):
                return "true" if value else "false"
            if isinstance(value, (int, float)):
                return str(value)
            return f'"{value}"'

        lines = ["[params]"] + [f"{k} = {render(v)}" for k, v in params.items()]
        if run:
            lines += ["", "[run]"] + [f"{k} = {render(v)}" for k, v in run.items()]
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return write


@pytest.fixture
def test_env_vars(monkeypatch):
    """Deterministic environment for settings."""
    monkeypatch.setenv("LOG_LEVEL", "WARNING")
    monkeypatch.setenv("ZETAFORMS_DIGITS", "40")
    monkeypatch.setenv("ZETAFORMS_BACKEND", "auto")
    monkeypatch.setenv("ZETAFORMS_SEED", "20240101")
    monkeypatch.setenv("MAX_WORKERS", "1")
    monkeypatch.delenv("LOG_FILE", raising=False)


# ============================================================================
# Cleanup
# ============================================================================


@pytest.fixture(autouse=True)
def reset_settings():
    """Drop cached settings so environment changes in one test do not leak."""
    import src.config

    src.config._settings = None
    yield
    src.config._settings = None
