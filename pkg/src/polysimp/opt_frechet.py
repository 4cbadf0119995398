"""Optimal vertex-restricted simplification under the Fréchet distance.

Dynamic programming over reachable points. For ``k`` links and target vertex
``i`` the table keeps, per edge of the input, the farthest parameter ``t`` such
that some ``k``-link simplification of ``p_0..p_i`` is within ``eps`` of
``P[0, t]``. Keeping only the farthest point per edge loses nothing: the stretch
of an edge between any reachable point and the farthest one stays inside the
``eps``-disk around ``p_i``, so any continuation from the former also works
from the latter. Keeping a single point per vertex is *not* enough (see
``instances.gen_notsuf``); ``greedy=True`` reproduces that flawed variant for
tests.
"""
from __future__ import annotations

from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Tuple

from .distances import DistanceMeasure, frechet_decision, link_reach
from .geometry import SLACK, TOL, PathParam, Segment, as_polyline, dist, eval_param, subcurve
from .simplify import SimplificationResult

_TIE = 1e-12


class ReachEntry(NamedTuple):
    t: PathParam
    h: int      # previous vertex, -1 at the first level
    src: int    # edge slot of the source entry at (k-1, h)


class ReachTable:
    """``levels[k-1][i][e]`` is the ReachEntry for k links ending at ``p_i``."""

    def __init__(self, n: int):
        self.n = n
        self.levels: List[Dict[int, List[Optional[ReachEntry]]]] = []

    def entry_count(self) -> int:
        return sum(1 for lvl in self.levels for row in lvl.values() for x in row if x is not None)

    def path(self, k: int, i: int, e: int) -> Tuple[int, ...]:
        out = [i]
        while k > 0:
            ent = self.levels[k - 1][i][e]
            if ent.h < 0:
                out.append(0)
                break
            i, e = ent.h, ent.src
            out.append(i)
            k -= 1
        return tuple(reversed(out))


def _better(table: ReachTable, k: int, cand: ReachEntry, cur: Optional[ReachEntry]) -> bool:
    if cur is None:
        return True
    ct, ot = cand.t.flat(), cur.t.flat()
    if ct > ot + _TIE:
        return True
    if ct < ot - _TIE:
        return False
    # equal reach: prefer the lexicographically smaller vertex sequence
    return _prefix(table, k, cand) < _prefix(table, k, cur)


def _prefix(table: ReachTable, k: int, ent: ReachEntry) -> Tuple[int, ...]:
    if ent.h < 0:
        return (0,)
    return table.path(k - 1, ent.h, ent.src)


def _thin(row: List[Optional[ReachEntry]]) -> List[Optional[ReachEntry]]:
    """Keep only the farthest entry of a row (the greedy variant)."""
    best = None
    for e, ent in enumerate(row):
        if ent is not None and (best is None or ent.t.flat() > row[best].t.flat() + _TIE):
            best = e
    out: List[Optional[ReachEntry]] = [None] * len(row)
    if best is not None:
        out[best] = row[best]
    return out


def _first_level(P, eps, tol, greedy):
    pts = P.vertices
    level = {}
    for i in range(1, len(pts)):
        row = [None if t is None else ReachEntry(t, -1, -1)
               for t in link_reach(P, Segment(pts[0], pts[i]), PathParam(0, 0.0), eps, tol)]
        if any(x is not None for x in row):
            level[i] = _thin(row) if greedy else row
    return level


def _next_level(table: ReachTable, P, eps, tol, greedy):
    """Level k+1 from level k via every (h, stored entry of (k, h)) pair."""
    pts = P.vertices
    n = len(pts)
    k = len(table.levels)
    prev = table.levels[-1]
    r = eps + tol
    level = {}
    for i in range(k + 1, n):
        row: List[Optional[ReachEntry]] = [None] * (n - 1)
        pi = pts[i]
        for h in range(k, i):
            src_row = prev.get(h)
            if src_row is None:
                continue
            ph = pts[h]
            link = Segment(ph, pi)
            for slot, ent in enumerate(src_row):
                # the matching must start within eps of p_h
                if ent is None or dist(ph, eval_param(P, ent.t)) > r + SLACK:
                    continue
                for e, t in enumerate(link_reach(P, link, ent.t, eps, tol)):
                    if t is None:
                        continue
                    cand = ReachEntry(t, h, slot)
                    if _better(table, k + 1, cand, row[e]):
                        row[e] = cand
        if any(x is not None for x in row):
            level[i] = _thin(row) if greedy else row
    return level


def optimal_frechet(P, eps: float, greedy: bool = False, tol: float = TOL,
                    max_links: Optional[int] = None) -> SimplificationResult:
    """Minimum-vertex subsequence of ``P`` with Fréchet distance ``<= eps``.

    Levels ``k = 1, 2, ...`` are built until the end of ``P`` is reached by a
    ``k``-link simplification ending at ``p_{n-1}``, so the running time is
    output-sensitive. With ``greedy=True`` each ``(k, i)`` keeps only its single
    farthest entry; that variant is not optimal and exists for testing.
    Returns the lexicographically smallest index sequence among those the
    table retains at the minimal ``k``.
    """
    P = as_polyline(P)
    n = len(P)
    name = "optf-greedy" if greedy else "optf"
    if n <= 2:
        return SimplificationResult(tuple(range(n)), eps, DistanceMeasure.FRECHET, name)
    last_edge = n - 2
    end = P.end()
    max_links = n - 1 if max_links is None else max_links
    table = ReachTable(n)
    table.levels.append(_first_level(P, eps, tol, greedy))
    while True:
        k = len(table.levels)
        fin = table.levels[-1].get(n - 1)
        if fin is not None and fin[last_edge] is not None and fin[last_edge].t == end:
            return SimplificationResult(table.path(k, n - 1, last_edge), eps,
                                        DistanceMeasure.FRECHET, name,
                                        {"table_entries": table.entry_count(), "levels": k})
        if k >= max_links:
            break
        table.levels.append(_next_level(table, P, eps, tol, greedy))
    # P itself always qualifies for eps >= 0, so only the greedy variant or a
    # max_links cap lands here
    raise NoSimplification(f"no simplification within {eps} using at most {max_links} links")


class NoSimplification(ValueError):
    pass


def reach_table(P, eps: float, k_max: int, tol: float = TOL) -> ReachTable:
    """Levels 1..k_max of the reach table, without early termination."""
    P = as_polyline(P)
    table = ReachTable(len(P))
    table.levels.append(_first_level(P, eps, tol, False))
    while len(table.levels) < k_max:
        table.levels.append(_next_level(table, P, eps, tol, False))
    return table


def partial_reach(P, indices, eps: float, tol: float = TOL) -> List[Optional[PathParam]]:
    """Per-edge farthest reach of one fixed partial simplification.

    ``indices`` must start at 0. Entry ``e`` is the farthest point on edge ``e``
    such that the links through ``indices`` are within ``eps`` of ``P`` up to it.
    """
    P = as_polyline(P)
    if not indices or indices[0] != 0:
        raise ValueError("a partial simplification starts at vertex 0")
    pts = P.vertices
    front: List[Optional[PathParam]] = [PathParam(0, 0.0)]
    r = eps + tol
    for h, i in zip(indices, indices[1:]):
        best: List[Optional[PathParam]] = [None] * P.n_edges
        for s in front:
            if s is None or dist(pts[h], eval_param(P, s)) > r + SLACK:
                continue
            for e, t in enumerate(link_reach(P, Segment(pts[h], pts[i]), s, eps, tol)):
                if t is not None and (best[e] is None or t > best[e]):
                    best[e] = t
        front = best
    return front


def fewest_completion_links(P, start: PathParam, first: int, eps: float,
                            limit: Optional[int] = None, tol: float = TOL) -> Optional[int]:
    """Fewest links of a subsequence ``p_first .. p_{n-1}`` within ``eps`` of ``P[start, end]``.

    Exhaustive over subsequences, smallest first; returns None if nothing with
    at most ``limit`` links works.
    """
    P = as_polyline(P)
    n = len(P)
    tail = subcurve(P, start, P.canonical(n - 2, 1.0))
    inner = range(first + 1, n - 1)
    limit = n - 1 - first if limit is None else limit
    for size in range(0, min(limit, n - 1 - first)):
        for mid in combinations(inner, size):
            # start may sit on the eps-circle around p_first, as reach points do
            if frechet_decision(P.take((first,) + mid + (n - 1,)), tail, eps, tol + SLACK):
                return size + 1
    return None
