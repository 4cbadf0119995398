"""Exact Hausdorff-type optima.

``optimal_hausdorff_qp`` solves the output-to-input direction in polynomial
time. The other two Hausdorff variants are NP-hard; ``brute_force_optimal``
solves them (and Fréchet) exactly by enumeration on small inputs.
"""
from __future__ import annotations

from itertools import combinations

from .distances import DistanceMeasure, decide
from .geometry import TOL, Segment, as_polyline, capsule_interval, covers_unit
from .simplify import LinkGraph, SimplificationResult

DEFAULT_GUARD = 20


class GuardExceeded(ValueError):
    """Raised when an instance is too large to enumerate."""


def link_in_region(P, i: int, j: int, eps: float, tol: float = TOL) -> bool:
    """Does segment ``P[i]P[j]`` lie inside the ``eps``-neighbourhood of ``P``?"""
    P = as_polyline(P)
    link = Segment(P[i], P[j])
    r = eps + tol
    parts = []
    for e in range(P.n_edges):
        iv = capsule_interval(link, P.edge(e), r)
        if iv is not None:
            if iv[0] <= 0.0 and iv[1] >= 1.0:
                return True
            parts.append(iv)
    return covers_unit(parts)


def optimal_hausdorff_qp(P, eps: float) -> SimplificationResult:
    """Fewest vertices such that the output stays within ``eps`` of the input.

    A link is usable iff it lies entirely in the ``eps``-region of ``P``; the
    answer is a min-link path over usable links (O(n) capsule tests per link).
    """
    P = as_polyline(P)
    n = len(P)
    if n <= 2:
        idx = tuple(range(n))
    else:
        graph = LinkGraph.build(n, lambda i, j: j == i + 1 or link_in_region(P, i, j, eps))
        idx = graph.min_link_path()
    return SimplificationResult(idx, eps, DistanceMeasure.HAUSDORFF_QP, "opth-qp")


def brute_force_optimal(P, eps: float, measure=DistanceMeasure.HAUSDORFF_PQ,
                        guard: int = DEFAULT_GUARD, tol: float = TOL) -> SimplificationResult:
    """Smallest subsequence (first in lexicographic order) passing ``measure``.

    Exponential; refuses inputs with more than ``guard`` vertices.
    """
    P = as_polyline(P)
    measure = DistanceMeasure(measure)
    n = len(P)
    if n > guard:
        raise GuardExceeded(f"brute force refuses n={n} > guard={guard}")
    name = f"brute-{measure.value}"
    if n <= 2:
        return SimplificationResult(tuple(range(n)), eps, measure, name)
    inner = range(1, n - 1)
    for size in range(0, n - 1):
        for mid in combinations(inner, size):
            idx = (0,) + mid + (n - 1,)
            if decide(measure, P, P.take(idx), eps, tol):
                return SimplificationResult(idx, eps, measure, name)
    raise AssertionError("the input itself must qualify")  # pragma: no cover
