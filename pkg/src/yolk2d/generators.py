"""Seeded point-set generators for experiments, benchmarks and the CLI."""

from __future__ import annotations

import math

import numpy as np

GENERATOR_NAMES = ("uniform", "gaussian", "grid", "collinear")
PRNG_NAME = "numpy-PCG64"


def generate_points(name: str, n: int, seed: int) -> np.ndarray:
    """(n, 2) array of distinct points from the named family."""
    if n < 1:
        raise ValueError("need n >= 1")
    rng = np.random.default_rng(seed)
    if name == "uniform":
        return rng.random((n, 2))
    if name == "gaussian":
        return rng.standard_normal((n, 2))
    if name == "grid":
        side = math.ceil(math.sqrt(n))
        denom = float(max(side - 1, 1))
        ii, jj = np.divmod(np.arange(n), side)
        return np.column_stack([jj / denom, ii / denom])
    if name == "collinear":
        t = np.linspace(0.0, 1.0, n)
        return np.column_stack([t, 0.5 * t + 0.25])
    raise ValueError(f"unknown generator {name!r}")
