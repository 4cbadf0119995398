"""Constructions that separate the heuristics from the optima.

Each generator returns a :class:`GeneratedInstance`: a polyline, its ``eps``,
an enlargement factor, and a list of :class:`Claim` objects that can be run
against the algorithms in this package with :func:`verify_claims`.

Coordinates were found by constructive placement plus a small numeric search
and are frozen here; the claims are what matters. Vertex indices in claims are
0-based, so the vertex usually called ``p1`` is index 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from .distances import DistanceMeasure, frechet_decision
from .geometry import Polyline
from .opt_frechet import NoSimplification, fewest_completion_links, optimal_frechet, partial_reach
from .opt_hausdorff import DEFAULT_GUARD, brute_force_optimal, optimal_hausdorff_qp
from .random_polylines import PROFILES, gen_random
from .simplify import Criterion, douglas_peucker, imai_iri, link_graph, valid_link

__all__ = [
    "Claim", "ClaimResult", "GeneratedInstance", "verify_claims", "run_count",
    "gen_fig1_hausdorff_gap", "gen_fig2_frechet_gap", "gen_triangle_zigzag",
    "gen_dpf_zigzag", "gen_iif_gadget", "gen_notsuf", "gen_random", "PROFILES",
]


@dataclass(frozen=True)
class Claim:
    """One executable statement about an instance.

    Count claims compare the number of output vertices of ``algorithm`` at
    ``eps * eps_multiplier`` against ``expected`` (or, with ``versus``, against
    ``factor`` times the count of another algorithm run). ``op == "indices"``
    compares the exact index tuple. Algorithms starting with ``check:`` are the
    structural predicates in ``_CHECKS``; they take ``params``.
    """

    algorithm: str
    eps_multiplier: float
    op: str
    expected: Any = None
    versus: Optional[Tuple[str, float]] = None
    factor: float = 1.0
    params: Dict[str, Any] = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> dict:
        d = {"algorithm": self.algorithm, "eps_multiplier": self.eps_multiplier,
             "op": self.op, "expected": _jsonable(self.expected)}
        if self.versus is not None:
            d["versus"] = list(self.versus)
            d["factor"] = self.factor
        if self.params:
            d["params"] = {k: _jsonable(v) for k, v in self.params.items()}
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Claim":
        versus = d.get("versus")
        expected = d.get("expected")
        if d["op"] == "indices" and expected is not None:
            expected = tuple(expected)
        return cls(d["algorithm"], float(d["eps_multiplier"]), d["op"], expected,
                   None if versus is None else (versus[0], float(versus[1])),
                   float(d.get("factor", 1.0)), dict(d.get("params", {})), d.get("note", ""))


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class ClaimResult:
    claim: Claim
    passed: bool
    observed: Any


@dataclass
class GeneratedInstance:
    name: str
    polyline: Polyline
    eps: float
    factor_c: float
    claims: List[Claim]
    params: Dict[str, Any] = field(default_factory=dict)


# -- running claims ----------------------------------------------------------

def run_indices(algorithm: str, P: Polyline, eps: float) -> Optional[Tuple[int, ...]]:
    """Indices produced by a named algorithm; None if it finds no answer."""
    if algorithm == "iih":
        return imai_iri(P, eps, Criterion.HAUSDORFF).indices
    if algorithm == "iif":
        return imai_iri(P, eps, Criterion.FRECHET).indices
    if algorithm == "dph":
        return douglas_peucker(P, eps, Criterion.HAUSDORFF).indices
    if algorithm == "dpf":
        return douglas_peucker(P, eps, Criterion.FRECHET).indices
    if algorithm == "optf":
        return optimal_frechet(P, eps).indices
    if algorithm == "optf-greedy":
        try:
            return optimal_frechet(P, eps, greedy=True).indices
        except NoSimplification:
            return None
    if algorithm == "opth-qp":
        return optimal_hausdorff_qp(P, eps).indices
    if algorithm.startswith("brute-"):
        return brute_force_optimal(P, eps, DistanceMeasure(algorithm[len("brute-"):])).indices
    raise ValueError(f"unknown algorithm {algorithm!r}")


def run_count(algorithm: str, P: Polyline, eps: float) -> Optional[int]:
    idx = run_indices(algorithm, P, eps)
    return None if idx is None else len(idx)


_OPS = {
    "==": lambda a, b: a == b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


def _check_reach_on_edge(P, eps, partial, edge, interior=True):
    t = partial_reach(P, tuple(partial), eps)[edge]
    ok = t is not None and t.edge == edge and (not interior or 0.0 < t.lam < 1.0)
    return ok, None if t is None else [t.edge, t.lam]


def _check_min_completion(P, eps, partial, edge, first, at_least):
    """Fewest links from ``p_first`` to the end, starting at the reach on ``edge``."""
    t = partial_reach(P, tuple(partial), eps)[edge]
    if t is None:
        return False, None
    k = fewest_completion_links(P, t, first, eps)
    return k is not None and k >= at_least, k


def _check_link_invalid(P, eps, i, j, criterion):
    valid = valid_link(P, i, j, eps, Criterion(criterion))
    return not valid, valid


def _check_certified(P, eps, algorithm):
    idx = run_indices(algorithm, P, eps)
    return frechet_decision(P, P.take(idx), eps), list(idx)


def _check_first_split(P, eps, criterion, vertex):
    trace: list = []
    douglas_peucker(P, eps, Criterion(criterion), trace=trace)
    first = trace[0] if trace else None
    return first == vertex, first


def _check_optima_use(P, eps, vertex):
    """Every minimum Fréchet simplification keeps ``vertex``."""
    n = len(P)
    best = run_count("optf", P, eps)
    sols = [(0,) + mid + (n - 1,) for mid in combinations(range(1, n - 1), best - 2)
            if frechet_decision(P, P.take((0,) + mid + (n - 1,)), eps)]
    return bool(sols) and all(vertex in s for s in sols), [list(s) for s in sols]


def _check_no_shortcut(P, eps, criterion):
    return link_graph(P, eps, Criterion(criterion)).count() == len(P) - 1, None


_CHECKS = {
    "check:reach_on_edge": _check_reach_on_edge,
    "check:min_completion": _check_min_completion,
    "check:link_invalid": _check_link_invalid,
    "check:certified": _check_certified,
    "check:first_split": _check_first_split,
    "check:optima_use": _check_optima_use,
    "check:no_shortcut": _check_no_shortcut,
}


def verify_claim(P: Polyline, eps: float, claim: Claim) -> ClaimResult:
    e = eps * claim.eps_multiplier
    if claim.algorithm.startswith("check:"):
        ok, observed = _CHECKS[claim.algorithm](P, e, **claim.params)
        return ClaimResult(claim, bool(ok) == bool(claim.expected), observed)
    if claim.op == "indices":
        observed = run_indices(claim.algorithm, P, e)
        return ClaimResult(claim, observed == tuple(claim.expected), observed)
    count = run_count(claim.algorithm, P, e)
    if claim.versus is not None:
        other = run_count(claim.versus[0], P, eps * claim.versus[1])
        if count is None or other is None:
            return ClaimResult(claim, False, [count, other])
        return ClaimResult(claim, _OPS[claim.op](count, claim.factor * other), [count, other])
    if count is None:
        return ClaimResult(claim, False, None)
    return ClaimResult(claim, _OPS[claim.op](count, claim.expected), count)


def verify_claims(inst: GeneratedInstance) -> List[ClaimResult]:
    return [verify_claim(inst.polyline, inst.eps, c) for c in inst.claims]


# -- generators --------------------------------------------------------------

_FIG1 = ((0.0, 0.0), (3.0, 2.0), (6.0, 0.5), (9.0, 2.0), (10.0, 0.0), (11.0, 1.5), (-1.0, 2.0))


def gen_fig1_hausdorff_gap() -> GeneratedInstance:
    """Seven vertices where no shortcut is valid, yet four vertices suffice.

    The optimum is ``(0, 4, 5, 6)``: its first link jumps over a zigzag whose
    vertices are covered by the later links instead.
    """
    P = Polyline(_FIG1)
    claims = [
        Claim("iih", 1.0, "==", 7),
        Claim("dph", 1.0, "==", 7),
        Claim(f"brute-{DistanceMeasure.HAUSDORFF_PQ.value}", 1.0, "==", 4),
        Claim(f"brute-{DistanceMeasure.HAUSDORFF_PQ.value}", 1.0, "indices", (0, 4, 5, 6)),
    ]
    return GeneratedInstance("fig1", P, 1.0, 1.0, claims)


_FIG2 = ((0.0, 0.0), (2.0, -1.0), (1.0, 0.5), (3.0, -2.5), (0.0, -3.0),
         (0.0, -7.0), (0.0, -4.5), (0.0, -8.5))


def gen_fig2_frechet_gap() -> GeneratedInstance:
    """Per-link Fréchet keeps all eight vertices, the optimum drops vertex 1.

    Link 0-2 fails on its own (vertex 1 sticks out), but in the optimum the
    matching of that link ends in the middle of edge 0, and the next link
    absorbs the excursion. The tail is a back-and-forth on one line: the link
    4-7 skipping it is within eps in Hausdorff distance, not in Fréchet.
    """
    P = Polyline(_FIG2)
    n = len(P)
    opt = (0, 2, 3, 4, 5, 6, 7)
    claims = [
        Claim("iif", 1.0, "==", n),
        Claim("dpf", 1.0, "==", n),
        Claim("optf", 1.0, "<", n),
        Claim("optf", 1.0, "indices", opt),
        Claim("check:link_invalid", 1.0, "holds", True, params={"i": 0, "j": 2, "criterion": "frechet_link"}),
        Claim("check:reach_on_edge", 1.0, "holds", True, params={"partial": [0, 2], "edge": 0}),
        Claim("check:link_invalid", 1.0, "holds", True, params={"i": 4, "j": 7, "criterion": "frechet_link"}),
        Claim("check:link_invalid", 1.0, "holds", False, params={"i": 4, "j": 7, "criterion": "hausdorff_link"},
              note="the zigzag link is valid for Hausdorff"),
        Claim("check:certified", 1.0, "holds", True, params={"algorithm": "optf"}),
        Claim(f"brute-{DistanceMeasure.FRECHET.value}", 1.0, "==", len(opt)),
    ]
    return GeneratedInstance("fig2", P, 1.0, 1.0, claims)


def _triangle_points(side: float, m: int, eps: float) -> List[Tuple[float, float]]:
    corners = ((0.0, 0.0), (side, 0.0), (side / 2, side * math.sqrt(3) / 2))
    # cluster order A B C B A B C B ...; every other vertex is in B
    cycle = (0, 1, 2, 1)
    visits = [0, 0, 0]
    pts = []
    for k in range(m):
        c = cycle[k % 4]
        # distinct points within radius eps/4, so each cluster has diameter <= eps/2
        ang = 2.399963229728653 * visits[c]
        visits[c] += 1
        cx, cy = corners[c]
        pts.append((cx + 0.25 * eps * math.cos(ang), cy + 0.25 * eps * math.sin(ang)))
    return pts


def _triangle_side(c: float, m: int, eps: float) -> float:
    """Smallest side (bisection, 1e-6 relative) with no valid shortcut at ``c * eps``."""
    def blocked(side):
        P = Polyline(_triangle_points(side, m, eps))
        return link_graph(P, c * eps, Criterion.HAUSDORFF).count() == m - 1

    lo, hi = eps, 4.0 * (c + 1.0) * eps
    while not blocked(hi):
        hi *= 2.0
    while hi - lo > 1e-6 * hi:
        mid = 0.5 * (lo + hi)
        if blocked(mid):
            hi = mid
        else:
            lo = mid
    return hi


def gen_triangle_zigzag(c: float, m: int, eps: float = 1.0) -> GeneratedInstance:
    """``m`` vertices bouncing between three small clusters on a triangle.

    At ``c * eps`` no shortcut is valid, so Imai-Iri and Douglas-Peucker keep
    everything, while three vertices (first, any odd index, last) are within
    ``eps``. The last vertex must land in the third cluster, which happens
    exactly when ``m % 4 == 3``; other ``m`` are rejected.
    """
    if not c > 1:
        raise ValueError(f"enlargement factor must exceed 1, got {c}")
    if m < 3 or m % 4 != 3:
        raise ValueError(
            f"m={m}: the walk A,B,C,B,A,... ends in the third cluster only for m = 3 (mod 4); "
            "with the last vertex elsewhere no 3-vertex simplification exists")
    side = _triangle_side(c, m, eps) * 1.01
    P = Polyline(_triangle_points(side, m, eps))
    claims = [
        Claim("iih", c, "==", m),
        Claim("dph", c, "==", m),
        Claim("check:no_shortcut", c, "holds", True, params={"criterion": "hausdorff_link"}),
    ]
    if m <= DEFAULT_GUARD:
        claims.append(Claim(f"brute-{DistanceMeasure.HAUSDORFF_PQ.value}", 1.0, "==", 3))
        claims.append(Claim(f"brute-{DistanceMeasure.HAUSDORFF_PQ.value}", 1.0, "indices", (0, 1, m - 1)))
    return GeneratedInstance("triangle", P, eps, float(c), claims, {"c": c, "m": m, "side": side})


def gen_dpf_zigzag(c: float, m: int, eps: float = 1.0) -> GeneratedInstance:
    """Fréchet Douglas-Peucker keeps all ``m`` vertices at ``c * eps``; four suffice at ``eps``.

    A tight vertical zigzag is followed by a long back-and-forth along the
    x-axis. The backtrack makes every link to the last vertex invalid, and the
    farthest vertex is always the next zigzag tooth, so the splits walk the
    zigzag one vertex at a time. Vertex 1 sits slightly higher and goes first.
    """
    if not c > 1:
        raise ValueError(f"enlargement factor must exceed 1, got {c}")
    if m < 6:
        raise ValueError(f"need m >= 6, got {m}")
    k = m - 4
    dx = 0.01 * eps
    pts = [(0.0, 0.0)]
    for j in range(1, k):
        mag = 0.95 if j == 1 else 0.9 - 0.2 * (j - 2) / max(k - 3, 1)
        pts.append((j * dx, (mag if j % 2 else -mag) * eps))
    u = 10.0 * c * eps
    side = -1.0 if pts[-1][1] > 0 else 1.0
    pts += [(8 * u, 0.0), (5 * u, 0.6 * side * eps), (2 * u, 0.0), (10 * u, 0.0)]
    P = Polyline(pts)
    claims = [
        Claim("dpf", c, "==", m),
        Claim("optf", 1.0, "==", 4),
        Claim("optf", 1.0, "indices", (0, m - 4, m - 2, m - 1)),
        Claim("check:certified", 1.0, "holds", True, params={"algorithm": "optf"}),
        Claim("check:first_split", c, "holds", True, params={"criterion": "frechet_link", "vertex": 1}),
    ]
    if m <= DEFAULT_GUARD:
        claims.append(Claim(f"brute-{DistanceMeasure.FRECHET.value}", 1.0, "==", 4))
    return GeneratedInstance("dpf-zigzag", P, eps, float(c), claims, {"c": c, "m": m})


IIF_FACTOR = 1.25
IIF_RATIO = 1.15


def _staircase(reps: int, eps: float, step: float = 10.0, over: float = 0.95):
    """Axis-parallel staircase, seven steps per copy, overshoots at two corners."""
    dirs = ((1.0, 0.0), (0.0, 1.0))
    cur = (0.0, 0.0)
    pts = [cur]
    turn = 0
    for _ in range(reps):
        for k in range(7):
            u, w = dirs[turn % 2], dirs[(turn + 1) % 2]
            turn += 1
            nxt = (cur[0] + step * eps * u[0], cur[1] + step * eps * u[1])
            if k < 2:
                # past the corner and toward the next leg, within eps of that leg only
                pts.append((nxt[0] + over * eps * (u[0] + w[0]), nxt[1] + over * eps * (u[1] + w[1])))
            pts.append(nxt)
            cur = nxt
    return pts


def gen_iif_gadget(reps: int, eps: float = 1.0) -> GeneratedInstance:
    """Staircase where per-link Fréchet Imai-Iri keeps every vertex.

    Two corners per copy get an overshoot vertex. No shortcut over an
    overshoot is valid on its own, even at ``IIF_FACTOR * eps``, but the
    optimum drops one vertex per overshoot by matching the corner one vertex
    late. Copies share their end corners, which every simplification keeps.
    """
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps}")
    P = Polyline(_staircase(reps, eps))
    n = len(P)
    claims = [
        Claim("iif", 1.0, "==", n),
        Claim("iif", IIF_FACTOR, "==", n),
        Claim("iif", IIF_FACTOR, ">", versus=("optf", 1.0), factor=IIF_RATIO,
              note="ratio of per-link Imai-Iri at the enlarged eps to the optimum"),
        Claim("iif", 4.0, "<=", versus=("optf", 1.0), factor=1.0,
              note="per-link Imai-Iri at 4 eps never needs more than the optimum at eps"),
        Claim("check:certified", 1.0, "holds", True, params={"algorithm": "optf"}),
    ]
    if reps == 1:
        claims[1:1] = [Claim("optf", 1.0, "==", 8)]
        claims.append(Claim(f"brute-{DistanceMeasure.FRECHET.value}", 1.0, "==", 8))
    return GeneratedInstance("iif-gadget", P, eps, IIF_FACTOR, claims, {"reps": reps})


_NOTSUF = ((-4.5, 6.0), (-3.6, 1.7), (-2.0, 0.2), (0.0, 0.0), (-1.2, -0.8), (2.41, -0.9),
           (2.62, -2.73), (4.98, -1.74), (6.46, -3.83), (8.83, -2.84), (10.31, -4.93), (12.45, -4.71))


def gen_notsuf() -> GeneratedInstance:
    """Twelve vertices where keeping one farthest reach per vertex is not enough.

    The optimum is ``(0, 1, 3, 4, 11)``. The two-link prefix ``(0, 2, 3)``
    reaches farther (onto edge 4, past vertex 4), but from there the zigzag
    tail needs 7 more links, so a table that keeps only that entry for vertex
    3 misses the optimum.
    """
    P = Polyline(_NOTSUF)
    claims = [
        Claim("optf", 1.0, "==", 5),
        Claim("optf", 1.0, "indices", (0, 1, 3, 4, 11)),
        Claim(f"brute-{DistanceMeasure.FRECHET.value}", 1.0, "==", 5),
        Claim("optf-greedy", 1.0, ">", 5, note="single farthest entry per vertex"),
        Claim("check:reach_on_edge", 1.0, "holds", True, params={"partial": [0, 2, 3], "edge": 4}),
        Claim("check:min_completion", 1.0, "holds", True,
              params={"partial": [0, 2, 3], "edge": 4, "first": 3, "at_least": 7}),
        Claim("check:optima_use", 1.0, "holds", True, params={"vertex": 3}),
    ]
    return GeneratedInstance("notsuf", P, 1.0, 1.0, claims)
