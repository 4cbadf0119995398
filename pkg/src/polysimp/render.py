"""Static SVG pictures: polylines with optional overlay, and free-space diagrams."""
from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np

from .geometry import TOL, Polyline

INPUT_STROKE = "black"
OVERLAY_STROKE = "blue"
CAPSULE_FILL = "#d3d3d3"
FREE_FILL = "#9ecae1"
PATH_STROKE = "#d62728"


def _f(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


def _path_d(pts, flip) -> str:
    return "M " + " L ".join(f"{_f(x)} {_f(flip(y))}" for x, y in pts)


def render_polylines(P: Polyline, overlay: Optional[Polyline] = None, eps: Optional[float] = None,
                     capsules: bool = False, stroke_width: Optional[float] = None) -> str:
    """SVG of ``P`` in black, ``overlay`` in blue, and optionally its ``eps``-region in gray.

    The ``eps``-region (union of capsules around the edges) is drawn as a
    round-capped stroke of width ``2 * eps``. The view box fits all drawn
    geometry with a 5% margin.
    """
    pts = np.array(P.as_array(), dtype=float)
    if overlay is not None:
        pts = np.vstack([pts, np.array(overlay.as_array(), dtype=float)])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    if capsules and eps:
        lo, hi = lo - eps, hi + eps
    span = hi - lo
    size = float(max(span.max(), 1e-9))
    margin = 0.05 * size
    x0, y0 = lo[0] - margin, lo[1] - margin
    w, h = span[0] + 2 * margin, span[1] + 2 * margin
    w, h = max(w, 2 * margin), max(h, 2 * margin)

    def flip(y):  # svg y grows downward; mirror inside the view box
        return 2 * y0 + h - y

    sw = stroke_width if stroke_width is not None else size / 200.0
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_f(x0)} {_f(y0)} {_f(w)} {_f(h)}">']
    if capsules and eps:
        out.append(f'  <path class="capsules" d="{_path_d(P, flip)}" fill="none" stroke="{CAPSULE_FILL}" '
                   f'stroke-width="{_f(2 * eps)}" stroke-linecap="round" stroke-linejoin="round"/>')
    out.append(f'  <path class="input" d="{_path_d(P, flip)}" fill="none" stroke="{INPUT_STROKE}" '
               f'stroke-width="{_f(sw)}"/>')
    if overlay is not None:
        out.append(f'  <path class="overlay" d="{_path_d(overlay, flip)}" fill="none" '
                   f'stroke="{OVERLAY_STROKE}" stroke-width="{_f(sw)}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def free_space_grid(P: Polyline, Q: Polyline, eps: float, res: int = 16) -> np.ndarray:
    """Boolean samples of the free space, ``res`` per cell side, shape ``(Nq, Np)``.

    Sample ``(j, i)`` pairs the ``i``-th sample along ``P`` with the ``j``-th
    along ``Q``; cell borders are shared between neighbouring cells.
    """
    def samples(C):
        A = np.array(C.as_array(), dtype=float)
        if len(A) == 1:
            return A
        t = np.linspace(0.0, 1.0, res + 1)[:-1]
        segs = [A[k] + t[:, None] * (A[k + 1] - A[k]) for k in range(len(A) - 1)]
        return np.vstack(segs + [A[-1:]])

    sp, sq = samples(P), samples(Q)
    d = np.linalg.norm(sq[:, None, :] - sp[None, :, :], axis=2)
    return d <= eps + TOL


def monotone_path(free: np.ndarray) -> Optional[List[Tuple[int, int]]]:
    """A monotone staircase of free samples from ``(0, 0)`` to the far corner, if any."""
    nq, np_ = free.shape
    if not (free[0, 0] and free[-1, -1]):
        return None
    reach = np.zeros_like(free)
    reach[0, 0] = True
    for j in range(nq):
        for i in range(np_):
            if (i or j) and free[j, i]:
                reach[j, i] = ((i > 0 and reach[j, i - 1]) or (j > 0 and reach[j - 1, i])
                               or (i > 0 and j > 0 and reach[j - 1, i - 1]))
    if not reach[-1, -1]:
        return None
    path = [(nq - 1, np_ - 1)]
    j, i = nq - 1, np_ - 1
    while (j, i) != (0, 0):
        for dj, di in ((1, 1), (0, 1), (1, 0)):
            if j - dj >= 0 and i - di >= 0 and reach[j - dj, i - di]:
                j, i = j - dj, i - di
                break
        path.append((j, i))
    return path[::-1]


def render_free_space(P: Polyline, Q: Polyline, eps: float, res: int = 16, cell: float = 40.0) -> str:
    """Free-space diagram of ``P`` (horizontal) against ``Q`` (vertical).

    Feasible samples are shaded; a monotone path is drawn when the sampled
    diagram contains one (the sampling can miss very thin passages).
    """
    free = free_space_grid(P, Q, eps, res)
    ncx, ncy = max(P.n_edges, 1), max(Q.n_edges, 1)
    W, H = ncx * cell, ncy * cell
    px = cell / res
    margin = 0.05 * max(W, H)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_f(-margin)} {_f(-margin)} '
           f'{_f(W + 2 * margin)} {_f(H + 2 * margin)}">']
    out.append(f'  <g class="free" fill="{FREE_FILL}" stroke="none">')
    nq, np_ = free.shape
    for j in range(nq):
        # run-length encode each row of samples
        i = 0
        while i < np_:
            if not free[j, i]:
                i += 1
                continue
            k = i
            while k + 1 < np_ and free[j, k + 1]:
                k += 1
            x, y = i * px - px / 2, H - j * px - px / 2
            out.append(f'    <rect x="{_f(max(x, 0))}" y="{_f(max(y, 0))}" '
                       f'width="{_f(min((k - i + 1) * px, W - max(x, 0)))}" height="{_f(min(px, H - max(y, 0)))}"/>')
            i = k + 1
    out.append("  </g>")
    out.append('  <g class="cells" fill="none" stroke="gray" stroke-width="0.5">')
    for a in range(ncx):
        for b in range(ncy):
            out.append(f'    <rect x="{_f(a * cell)}" y="{_f(H - (b + 1) * cell)}" '
                       f'width="{_f(cell)}" height="{_f(cell)}"/>')
    out.append("  </g>")
    path = monotone_path(free)
    if path is not None:
        pts = " ".join(f"{_f(i * px)},{_f(H - j * px)}" for j, i in path)
        out.append(f'  <polyline class="monotone" points="{pts}" fill="none" '
                   f'stroke="{PATH_STROKE}" stroke-width="1.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
