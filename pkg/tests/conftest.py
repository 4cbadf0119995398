"""Shared oracles: brute numeric checks that share no code with the library."""
import random

import numpy as np
import pytest

from polysimp.random_polylines import PROFILES, gen_random

EPS_LEVELS = [0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5]


def resample(P, per_edge):
    """Points along P, ``per_edge`` per edge plus the last vertex."""
    A = np.asarray(list(P), dtype=float)
    if len(A) == 1:
        return A
    t = np.linspace(0.0, 1.0, per_edge, endpoint=False)[:, None]
    parts = [A[k] + t * (A[k + 1] - A[k]) for k in range(len(A) - 1)]
    return np.vstack(parts + [A[-1:]])


def seg_dist(X, B):
    """Distance of every row of X to polyline B (exact per segment)."""
    B = np.asarray(list(B), dtype=float)
    if len(B) == 1:
        return np.linalg.norm(X - B[0], axis=1)
    best = np.full(len(X), np.inf)
    for a, b in zip(B[:-1], B[1:]):
        d = b - a
        dd = d @ d
        u = np.zeros(len(X)) if dd == 0 else np.clip((X - a) @ d / dd, 0.0, 1.0)
        best = np.minimum(best, np.linalg.norm(X - (a + u[:, None] * d), axis=1))
    return best


def sampled_directed_hausdorff(A, B, per_edge=10_000, refine=8):
    """Max over dense samples of A, refined by re-sampling around the best few."""
    X = resample(A, per_edge)
    d = seg_dist(X, B)
    if refine and len(X) > 1:
        for k in np.argsort(d)[-refine:]:
            lo, hi = X[max(k - 1, 0)], X[min(k + 1, len(X) - 1)]
            t = np.linspace(0.0, 1.0, 2001)[:, None]
            d = np.append(d, seg_dist(lo + t * (hi - lo), B).max())
    return float(d.max())


def discrete_frechet(X, Y):
    """Classic coupling DP over two point sequences."""
    D = np.linalg.norm(X[:, None, :] - Y[None, :, :], axis=2)
    n, m = D.shape
    ca = np.empty_like(D)
    ca[0, 0] = D[0, 0]
    for i in range(1, n):
        ca[i, 0] = max(ca[i - 1, 0], D[i, 0])
    for j in range(1, m):
        ca[0, j] = max(ca[0, j - 1], D[0, j])
    for i in range(1, n):
        prev = ca[i - 1]
        row = ca[i]
        for j in range(1, m):
            row[j] = max(min(prev[j], prev[j - 1], row[j - 1]), D[i, j])
    return float(ca[-1, -1])


def frechet_bounds(A, B, per_edge=60):
    """Bracket for the continuous Fréchet distance from dense resampling."""
    X, Y = resample(A, per_edge), resample(B, per_edge)
    hx = max(np.linalg.norm(np.diff(X, axis=0), axis=1).max(initial=0.0), 0.0)
    hy = max(np.linalg.norm(np.diff(Y, axis=0), axis=1).max(initial=0.0), 0.0)
    d = discrete_frechet(X, Y)
    return d - max(hx, hy) / 2, d


def fuzz_case(seed, n_lo=4, n_hi=10):
    """Deterministic (polyline, eps) pair used by the oracle suites."""
    rnd = random.Random(seed)
    n = rnd.randint(n_lo, n_hi)
    P = gen_random(n, seed, PROFILES[seed % 3])
    return P, rnd.choice(EPS_LEVELS)


def random_pair(seed):
    rnd = random.Random(10_000 + seed)
    A = gen_random(rnd.randint(2, 7), 2 * seed, PROFILES[seed % 3])
    B = gen_random(rnd.randint(2, 7), 2 * seed + 1, PROFILES[(seed + 1) % 3])
    return A, B


@pytest.fixture
def apex():
    from polysimp import Polyline
    return Polyline([(0, 0), (1, 1), (2, 0)]), Polyline([(0, 0), (2, 0)])
