"""Douglas-Peucker and Imai-Iri simplification, Hausdorff and Fréchet flavours."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Sequence, Tuple

from .distances import DistanceMeasure
from .geometry import TOL, Polyline, Segment, as_polyline, point_segment_distance
from .distances import frechet_decision


class Criterion(str, Enum):
    HAUSDORFF = "hausdorff_link"
    FRECHET = "frechet_link"


@dataclass(frozen=True)
class SimplificationResult:
    """A vertex subsequence of the input.

    ``indices`` are 0-based and always start at 0 and end at ``n - 1``.
    """

    indices: Tuple[int, ...]
    certified_eps: float
    measure: DistanceMeasure
    algorithm: str = ""
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def k_links(self) -> int:
        return len(self.indices) - 1

    def __len__(self) -> int:
        return len(self.indices)

    def polyline(self, P) -> Polyline:
        return as_polyline(P).take(self.indices)


def _measure_for(crit: Criterion) -> DistanceMeasure:
    if Criterion(crit) is Criterion.HAUSDORFF:
        return DistanceMeasure.HAUSDORFF_PQ
    return DistanceMeasure.FRECHET


def valid_link(P, i: int, j: int, eps: float, crit: Criterion, tol: float = TOL) -> bool:
    """Can ``P[i]..P[j]`` be replaced by the single segment ``P[i]P[j]``?

    Indices are 0-based. The Hausdorff test only looks at vertices: distance
    to a segment is convex, so each edge attains its maximum at an endpoint.
    """
    P = as_polyline(P)
    if not 0 <= i < j < len(P):
        raise IndexError(f"link ({i}, {j}) out of range for {len(P)} vertices")
    if j == i + 1:
        return True
    seg = Segment(P[i], P[j])
    if Criterion(crit) is Criterion.HAUSDORFF:
        r = eps + tol
        return all(point_segment_distance(P[v], seg) <= r for v in range(i + 1, j))
    return frechet_decision([P[i], P[j]], P.vertices[i:j + 1], eps, tol)


class LinkGraph:
    """Dense upper-triangular validity table of candidate links."""

    def __init__(self, n: int, valid: List[List[bool]]):
        self.n = n
        self._valid = valid

    @classmethod
    def build(cls, n: int, is_valid: Callable[[int, int], bool]) -> "LinkGraph":
        valid = [[False] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                valid[i][j] = is_valid(i, j)
        return cls(n, valid)

    def valid(self, i: int, j: int) -> bool:
        return self._valid[i][j]

    def count(self) -> int:
        return sum(sum(row) for row in self._valid)

    def min_link_path(self) -> Tuple[int, ...]:
        """Fewest-link path from 0 to n-1; lexicographically smallest among ties."""
        n = self.n
        if n == 1:
            return (0,)
        # hops to the end, by BFS on reversed links
        hops = [-1] * n
        hops[n - 1] = 0
        queue = deque([n - 1])
        while queue:
            j = queue.popleft()
            for i in range(j):
                if hops[i] < 0 and self._valid[i][j]:
                    hops[i] = hops[j] + 1
                    queue.append(i)
        if hops[0] < 0:
            raise ValueError("no path from first to last vertex")
        path = [0]
        while path[-1] != n - 1:
            i = path[-1]
            path.append(next(j for j in range(i + 1, n)
                             if self._valid[i][j] and hops[j] == hops[i] - 1))
        return tuple(path)


def link_graph(P, eps: float, crit: Criterion) -> LinkGraph:
    P = as_polyline(P)
    return LinkGraph.build(len(P), lambda i, j: valid_link(P, i, j, eps, crit))


def imai_iri(P, eps: float, crit: Criterion = Criterion.HAUSDORFF) -> SimplificationResult:
    P = as_polyline(P)
    if len(P) <= 2:
        idx = tuple(range(len(P)))
    else:
        idx = link_graph(P, eps, crit).min_link_path()
    name = "iih" if Criterion(crit) is Criterion.HAUSDORFF else "iif"
    return SimplificationResult(idx, eps, _measure_for(crit), name)


def douglas_peucker(P, eps: float, crit: Criterion = Criterion.HAUSDORFF,
                    trace: list | None = None) -> SimplificationResult:
    """Recursive splitting at the Euclidean-farthest vertex.

    A sub-chain is accepted once its shortcut passes :func:`valid_link` under
    ``crit``. ``trace``, if given, collects split vertices in the order they
    are added.
    """
    P = as_polyline(P)
    n = len(P)
    if n <= 2:
        return SimplificationResult(tuple(range(n)), eps, _measure_for(crit),
                                    "dph" if Criterion(crit) is Criterion.HAUSDORFF else "dpf")
    keep = {0, n - 1}
    stack = [(0, n - 1)]
    while stack:
        a, b = stack.pop()
        if b - a < 2 or valid_link(P, a, b, eps, crit):
            continue
        seg = Segment(P[a], P[b])
        far, far_d = a + 1, -1.0
        for v in range(a + 1, b):
            d = point_segment_distance(P[v], seg)
            if d > far_d:
                far, far_d = v, d
        keep.add(far)
        if trace is not None:
            trace.append(far)
        # left half first so that traces follow the natural recursion order
        stack.append((far, b))
        stack.append((a, far))
    name = "dph" if Criterion(crit) is Criterion.HAUSDORFF else "dpf"
    return SimplificationResult(tuple(sorted(keep)), eps, _measure_for(crit), name)


def is_simplification(indices: Sequence[int], n: int) -> bool:
    return (len(indices) >= min(n, 2) and indices[0] == 0 and indices[-1] == n - 1
            and all(x < y for x, y in zip(indices, indices[1:])))
