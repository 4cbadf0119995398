"""Hausdorff and Fréchet decision procedures, values, and single-link reach.

Decisions are exact up to a fixed absolute slack (``TOL``) added to ``eps``;
values come from bisection over the decisions.
"""
from __future__ import annotations

from enum import Enum
from typing import List, Optional

from .geometry import (
    SLACK,
    TOL,
    PathParam,
    Polyline,
    Segment,
    as_polyline,
    capsule_interval,
    covers_unit,
    disk_interval,
    dist,
    eval_param,
    max_vertex_distance,
)

BISECT_ITERS = 60


class DistanceMeasure(str, Enum):
    HAUSDORFF_PQ = "hausdorff_directed_PQ"
    HAUSDORFF_QP = "hausdorff_directed_QP"
    HAUSDORFF = "hausdorff_undirected"
    FRECHET = "frechet"


# -- Hausdorff ---------------------------------------------------------------

def hausdorff_directed_decision(A, B, eps: float, tol: float = TOL) -> bool:
    """True iff every point of ``A`` lies within ``eps`` of ``B``.

    Each edge of ``A`` is tested by covering its parameter range with the
    capsules around the edges of ``B``.
    """
    A, B = as_polyline(A), as_polyline(B)
    r = eps + tol
    b_edges = [B.edge(j) for j in range(B.n_edges)] or [Segment(B[0], B[0])]
    if len(A) == 1:
        seg = Segment(A[0], A[0])
        return any(capsule_interval(seg, core, r) is not None for core in b_edges)
    for i in range(A.n_edges):
        seg = A.edge(i)
        parts = []
        for core in b_edges:
            iv = capsule_interval(seg, core, r)
            if iv is not None:
                if iv[0] <= 0.0 and iv[1] >= 1.0:
                    parts = None
                    break
                parts.append(iv)
        if parts is not None and not covers_unit(parts):
            return False
    return True


def _bisect(decide, lo: float, hi: float) -> float:
    if decide(lo):
        return lo
    for _ in range(BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        if decide(mid):
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-12:
            break
    return hi


def hausdorff_directed_value(A, B) -> float:
    A, B = as_polyline(A), as_polyline(B)
    return _bisect(lambda e: hausdorff_directed_decision(A, B, e, tol=0.0),
                   0.0, max_vertex_distance(A, B))


def hausdorff_undirected_value(A, B) -> float:
    return max(hausdorff_directed_value(A, B), hausdorff_directed_value(B, A))


def hausdorff_decision(A, B, eps: float, tol: float = TOL) -> bool:
    return (hausdorff_directed_decision(A, B, eps, tol)
            and hausdorff_directed_decision(B, A, eps, tol))


# -- Fréchet -----------------------------------------------------------------

def frechet_decision(A, B, eps: float, tol: float = TOL) -> bool:
    """Free-space reachability test for Fréchet distance ``<= eps``.

    ``A`` runs along the horizontal axis of the diagram, ``B`` along the
    vertical one. Only reachable boundary intervals are kept, column by column.
    """
    P, Q = as_polyline(A).vertices, as_polyline(B).vertices
    r = eps + tol
    n, m = len(P), len(Q)
    if dist(P[0], Q[0]) > r or dist(P[-1], Q[-1]) > r:
        return False
    if n == 1:
        return all(dist(P[0], q) <= r for q in Q)
    if m == 1:
        return all(dist(Q[0], p) <= r for p in P)

    # column i = 0: vertical boundary at P[0] over every edge of Q
    left: List[Optional[tuple]] = []
    ok = True
    for j in range(m - 1):
        iv = disk_interval(P[0], Q[j], Q[j + 1], r) if ok else None
        if iv is not None and iv[0] > 0.0:
            iv = None
        left.append(iv)
        ok = iv is not None and iv[1] >= 1.0
    bottom_ok = True  # horizontal boundary along Q[0] still connected

    for i in range(n - 1):
        a, b = P[i], P[i + 1]
        # bottom boundary of cell (i, 0), reachable only along Q[0]
        if bottom_ok:
            bot = disk_interval(Q[0], a, b, r)
            if bot is not None and bot[0] > 0.0:
                bot = None
        else:
            bot = None
        bottom_ok = bot is not None and bot[1] >= 1.0
        right: List[Optional[tuple]] = []
        for j in range(m - 1):
            lv = left[j]
            if lv is None and bot is None:
                right.append(None)
                continue
            c, d = Q[j], Q[j + 1]
            rf = disk_interval(b, c, d, r)
            if rf is not None and bot is None:
                rf = (max(rf[0], lv[0]), rf[1]) if rf[1] >= lv[0] else None
            right.append(rf)
            tf = disk_interval(d, a, b, r)
            if tf is not None and lv is None:
                tf = (max(tf[0], bot[0]), tf[1]) if tf[1] >= bot[0] else None
            bot = tf
        if bot is not None and i == n - 2 and bot[1] >= 1.0:
            return True
        left = right
    last = left[m - 2]
    return last is not None and last[1] >= 1.0


def frechet_value(A, B) -> float:
    A, B = as_polyline(A), as_polyline(B)
    lo = max(dist(A[0], B[0]), dist(A[-1], B[-1]))
    return _bisect(lambda e: frechet_decision(A, B, e, tol=0.0), lo, max(lo, max_vertex_distance(A, B)))


def decide(measure: DistanceMeasure, P, Q, eps: float, tol: float = TOL) -> bool:
    """Is simplification ``Q`` within ``eps`` of input ``P`` under ``measure``?"""
    measure = DistanceMeasure(measure)
    if measure is DistanceMeasure.HAUSDORFF_PQ:
        return hausdorff_directed_decision(P, Q, eps, tol)
    if measure is DistanceMeasure.HAUSDORFF_QP:
        return hausdorff_directed_decision(Q, P, eps, tol)
    if measure is DistanceMeasure.HAUSDORFF:
        return hausdorff_decision(P, Q, eps, tol)
    return frechet_decision(P, Q, eps, tol)


# -- single free-space row ---------------------------------------------------

def link_reach(P: Polyline, link: Segment, s: PathParam, eps: float,
               tol: float = TOL) -> List[Optional[PathParam]]:
    """Farthest parameter on every edge of ``P`` matchable to ``link`` from ``s``.

    Entry ``e`` is the largest ``t >= s`` on edge ``e`` with
    ``d_F(link, P[s, t]) <= eps``, in canonical form, or None. Propagation
    walks a single free-space row (the link against ``P``) and stops as soon
    as nothing more is reachable.
    """
    P = as_polyline(P)
    pts = P.vertices
    n = len(pts)
    a, b = link
    r = eps + tol
    if dist(a, eval_param(P, s)) > r + SLACK:
        raise ValueError("link source is not within eps of the start parameter")
    out: List[Optional[PathParam]] = [None] * max(n - 1, 0)
    if n == 1:
        return out
    s = P.canonical(*s)
    e = s.edge
    bf = disk_interval(a, pts[e], pts[e + 1], r)
    if bf is None or bf[1] < s.lam:
        # start point only survives the rounding slack; treat it as a point
        bot = (s.lam, s.lam)
    else:
        bot = (s.lam, bf[1])
    lv = None
    while True:
        p0, p1 = pts[e], pts[e + 1]
        xmin = 0.0 if lv is not None else bot[0]
        tf = disk_interval(b, p0, p1, r)
        if tf is not None and tf[1] >= xmin:
            out[e] = P.canonical(e, tf[1])
        if e == n - 2:
            break
        rf = disk_interval(p1, a, b, r)
        if rf is not None and bot is None:
            rf = (max(rf[0], lv[0]), rf[1]) if rf[1] >= lv[0] else None
        nbot = None
        if bot is not None and bot[1] >= 1.0:
            nb = disk_interval(a, p1, pts[e + 2], r)
            if nb is not None and nb[0] <= 0.0:
                nbot = nb
        if rf is None and nbot is None:
            break
        lv, bot = rf, nbot
        e += 1
    return out
