"""Low-level planar geometry: polylines, path parameters, distances, capsules.

Points are plain ``(x, y)`` float tuples. All routines are pure functions;
the tight inner loops of the decision procedures call them millions of times,
so they avoid numpy on purpose.
"""
from __future__ import annotations

import math
from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np

Point = Tuple[float, float]
Interval = Tuple[float, float]

# Absolute slack added to eps by every decision procedure.
TOL = 1e-9
# rounding allowance when re-testing points that were constructed on an eps-circle
SLACK = 1e-12


class Segment(NamedTuple):
    a: Point
    b: Point


class PathParam(NamedTuple):
    """Position along a polyline: ``edge`` index plus fraction ``lam`` on it.

    Tuple ordering is the order along the curve, provided both params are
    canonical (see :meth:`Polyline.canonical`).
    """

    edge: int
    lam: float

    def flat(self) -> float:
        return self.edge + self.lam


class Polyline:
    """Immutable ordered vertex sequence.

    Consecutive duplicate vertices are rejected unless ``allow_degenerate``
    is set.
    """

    __slots__ = ("_pts",)

    def __init__(self, vertices, allow_degenerate: bool = False):
        pts = tuple((float(x), float(y)) for x, y in vertices)
        if not pts:
            raise ValueError("a polyline needs at least one vertex")
        for x, y in pts:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValueError(f"non-finite coordinate ({x}, {y})")
        if not allow_degenerate:
            for i in range(len(pts) - 1):
                if pts[i] == pts[i + 1]:
                    raise ValueError(f"duplicate consecutive vertex at index {i}")
        self._pts = pts

    @property
    def vertices(self) -> Tuple[Point, ...]:
        return self._pts

    def __len__(self) -> int:
        return len(self._pts)

    def __getitem__(self, i):
        return self._pts[i]

    def __iter__(self):
        return iter(self._pts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polyline) and self._pts == other._pts

    def __hash__(self) -> int:
        return hash(self._pts)

    def __repr__(self) -> str:
        return f"Polyline({list(self._pts)!r})"

    @property
    def n_edges(self) -> int:
        return max(len(self._pts) - 1, 0)

    def edge(self, e: int) -> Segment:
        return Segment(self._pts[e], self._pts[e + 1])

    def as_array(self) -> np.ndarray:
        return np.array(self._pts, dtype=float)

    def take(self, indices: Sequence[int]) -> "Polyline":
        """Sub-polyline on the given 0-based vertex indices."""
        return Polyline([self._pts[i] for i in indices], allow_degenerate=True)

    def start(self) -> PathParam:
        return PathParam(0, 0.0)

    def end(self) -> PathParam:
        return PathParam(max(len(self._pts) - 2, 0), 1.0)

    def canonical(self, edge: int, lam: float) -> PathParam:
        """Canonical form: ``lam < 1`` except at the global end."""
        last = max(len(self._pts) - 2, 0)
        if lam >= 1.0 and edge < last:
            return PathParam(edge + 1, 0.0)
        return PathParam(edge, min(max(lam, 0.0), 1.0))


def as_polyline(obj) -> Polyline:
    if isinstance(obj, Polyline):
        return obj
    return Polyline(obj, allow_degenerate=True)


def dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def lerp(a: Point, b: Point, u: float) -> Point:
    return (a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1]))


def eval_param(P: Polyline, t: PathParam) -> Point:
    """Point of ``P`` at parameter ``t`` (linear along edge ``t.edge``)."""
    n = len(P)
    if n == 1:
        if t.edge != 0:
            raise IndexError(f"edge {t.edge} out of range for a single vertex")
        return P[0]
    if not 0 <= t.edge <= n - 2:
        raise IndexError(f"edge {t.edge} out of range [0, {n - 2}]")
    return lerp(P[t.edge], P[t.edge + 1], t.lam)


def subcurve(P: Polyline, s: PathParam, t: PathParam) -> Polyline:
    """The piece of ``P`` from ``s`` to ``t`` including interior vertices."""
    s = P.canonical(*s)
    t = P.canonical(*t)
    if t < s:
        raise ValueError(f"subcurve start {s} lies after end {t}")
    first = eval_param(P, s)
    last = eval_param(P, t)
    if s == t:
        return Polyline([first], allow_degenerate=True)
    pts = [first]
    # vertices strictly between s and t: indices s.edge+1 .. t.edge,
    # the latter only when t sits past the start of its edge
    for v in range(s.edge + 1, t.edge + 1):
        if v == t.edge and t.lam == 0.0:
            break
        pts.append(P[v])
    pts.append(last)
    return Polyline(pts, allow_degenerate=True)


def point_segment_distance(q: Point, seg: Segment) -> float:
    (ax, ay), (bx, by) = seg
    dx, dy = bx - ax, by - ay
    dd = dx * dx + dy * dy
    if dd == 0.0:
        return math.hypot(q[0] - ax, q[1] - ay)
    u = ((q[0] - ax) * dx + (q[1] - ay) * dy) / dd
    u = 0.0 if u < 0.0 else (1.0 if u > 1.0 else u)
    return math.hypot(q[0] - ax - u * dx, q[1] - ay - u * dy)


def disk_interval(c: Point, a: Point, b: Point, r: float) -> Optional[Interval]:
    """Closed sub-interval ``{u in [0,1] : |a + u(b-a) - c| <= r}``, or None.

    Endpoints found inside the disk by direct distance test are snapped to
    exactly 0 and 1 so that free-space intervals chain without rounding gaps.
    """
    dx, dy = b[0] - a[0], b[1] - a[1]
    fx, fy = a[0] - c[0], a[1] - c[1]
    r2 = r * r
    a_in = fx * fx + fy * fy <= r2
    gx, gy = b[0] - c[0], b[1] - c[1]
    b_in = gx * gx + gy * gy <= r2
    if a_in and b_in:
        return (0.0, 1.0)
    dd = dx * dx + dy * dy
    if dd == 0.0:
        return None
    df = dx * fx + dy * fy
    disc = df * df - dd * (fx * fx + fy * fy - r2)
    if disc < 0.0:
        # tangency lost to rounding
        if disc > -1e-12 * dd * max(r2, 1.0):
            disc = 0.0
        else:
            return None
    root = math.sqrt(disc)
    lo = 0.0 if a_in else (-df - root) / dd
    hi = 1.0 if b_in else (-df + root) / dd
    lo = max(lo, 0.0)
    hi = min(hi, 1.0)
    if lo > hi:
        return None
    return (lo, hi)


def _linear_range(c0: float, c1: float, lo: float, hi: float) -> Optional[Interval]:
    """``{u in [0,1] : lo <= c0 + c1*u <= hi}``."""
    if c1 == 0.0:
        return (0.0, 1.0) if lo <= c0 <= hi else None
    u1 = (lo - c0) / c1
    u2 = (hi - c0) / c1
    if u1 > u2:
        u1, u2 = u2, u1
    u1 = max(u1, 0.0)
    u2 = min(u2, 1.0)
    if u1 > u2:
        return None
    return (u1, u2)


def capsule_interval(seg: Segment, core: Segment, eps: float) -> Optional[Interval]:
    """Parameters ``u`` of ``seg`` whose point lies within ``eps`` of ``core``.

    The distance to a segment is convex along a line, so the answer is a single
    closed interval; it is assembled from the two end disks and the slab.
    """
    a, b = seg
    c, d = core
    parts = [disk_interval(c, a, b, eps), disk_interval(d, a, b, eps)]
    wx, wy = d[0] - c[0], d[1] - c[1]
    ll = wx * wx + wy * wy
    if ll > 0.0:
        length = math.sqrt(ll)
        dx, dy = b[0] - a[0], b[1] - a[1]
        ax, ay = a[0] - c[0], a[1] - c[1]
        # projection onto core, in core-parameter units
        along = _linear_range((ax * wx + ay * wy) / ll, (dx * wx + dy * wy) / ll, 0.0, 1.0)
        # signed perpendicular offset from the core line
        across = _linear_range((wx * ay - wy * ax) / length, (wx * dy - wy * dx) / length, -eps, eps)
        if along is not None and across is not None:
            lo, hi = max(along[0], across[0]), min(along[1], across[1])
            if lo <= hi:
                parts.append((lo, hi))
    parts = [p for p in parts if p is not None]
    if not parts:
        return None
    return (min(p[0] for p in parts), max(p[1] for p in parts))


def covers_unit(intervals, gap: float = 1e-12) -> bool:
    """True if the union of ``intervals`` covers ``[0, 1]``."""
    reach = 0.0
    for lo, hi in sorted(intervals):
        if lo > reach + gap:
            return False
        if hi > reach:
            reach = hi
            if reach >= 1.0 - gap:
                return True
    return reach >= 1.0 - gap


def max_vertex_distance(A: Polyline, B: Polyline) -> float:
    return max(dist(p, q) for p in A for q in B)
