"""Seeded random polylines for fuzzing."""
from __future__ import annotations

import math

import numpy as np

from .geometry import Polyline

PROFILES = ("smooth", "spiky", "gridded")


def _normalize(xy: np.ndarray) -> np.ndarray:
    lo = xy.min(axis=0)
    span = float((xy.max(axis=0) - lo).max())
    if span == 0.0:
        return np.zeros_like(xy)
    return (xy - lo) / span


def gen_random(n: int, seed: int, profile: str = "smooth") -> Polyline:
    """Deterministic polyline with coordinates in the unit square.

    ``smooth`` is a random walk with small turns, ``spiky`` uniform points,
    ``gridded`` a lattice walk on a 16x16 grid.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {PROFILES}")
    rng = np.random.default_rng([int(seed), n, PROFILES.index(profile)])
    if profile == "spiky":
        xy = rng.random((n, 2))
    elif profile == "smooth":
        heading = rng.uniform(0, 2 * math.pi)
        steps = []
        for _ in range(n - 1):
            heading += rng.normal(0.0, 0.6)
            length = rng.uniform(0.5, 1.5)
            steps.append((length * math.cos(heading), length * math.sin(heading)))
        xy = _normalize(np.vstack([[0.0, 0.0], np.cumsum(steps, axis=0)]))
    else:
        moves = np.array([(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)])
        pos = rng.integers(0, 16, size=2)
        cells = [pos.copy()]
        while len(cells) < n:
            step = moves[rng.integers(len(moves))] * rng.integers(1, 4)
            nxt = np.clip(pos + step, 0, 15)
            if (nxt != pos).any():
                pos = nxt
                cells.append(pos.copy())
        xy = np.array(cells, dtype=float) / 15.0
    pts = [(float(x), float(y)) for x, y in xy]
    # uniform draws never repeat in practice; the lattice walk is guarded above
    return Polyline(pts)
