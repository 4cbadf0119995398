import re
import xml.etree.ElementTree as ET

import numpy as np

from polysimp import Polyline
from polysimp.render import free_space_grid, monotone_path, render_free_space, render_polylines

NS = "{http://www.w3.org/2000/svg}"


def test_two_vertex_polyline_single_path():
    svg = render_polylines(Polyline([(0, 0), (3, 1)]))
    root = ET.fromstring(svg)
    paths = root.findall(f"{NS}path")
    assert len(paths) == 1
    assert paths[0].get("stroke") == "black"


def test_viewbox_margin():
    svg = render_polylines(Polyline([(0, 0), (10, 0), (10, 20)]))
    x, y, w, h = map(float, re.search(r'viewBox="([^"]+)"', svg).group(1).split())
    # 5% of the larger span (20) on each side
    assert (x, w, h) == (-1.0, 12.0, 22.0)


def test_overlay_and_capsules():
    P = Polyline([(0, 0), (1, 1), (2, 0)])
    root = ET.fromstring(render_polylines(P, Polyline([(0, 0), (2, 0)]), eps=0.5, capsules=True))
    classes = [p.get("class") for p in root.findall(f"{NS}path")]
    assert classes == ["capsules", "input", "overlay"]
    assert root.findall(f"{NS}path")[2].get("stroke") == "blue"
    assert root.findall(f"{NS}path")[0].get("stroke-width") == "1"


def test_flip_keeps_orientation():
    # higher y in data is nearer the top of the picture
    svg = render_polylines(Polyline([(0, 0), (0, 5)]))
    d = re.search(r'class="input" d="([^"]+)"', svg).group(1)
    ys = [float(v) for v in re.findall(r"[-\d.]+ ([-\d.]+)", d)]
    assert ys[1] < ys[0]


def test_identity_free_space_diagonal():
    P = Polyline([(0, 0), (1, 0), (1, 1), (2, 1)])
    free = free_space_grid(P, P, 0.1, res=8)
    assert free.shape == (25, 25)
    assert np.all(np.diag(free))
    path = monotone_path(free)
    assert path[0] == (0, 0) and path[-1] == (24, 24)
    svg = render_free_space(P, P, 0.1, res=8)
    root = ET.fromstring(svg)
    assert root.find(f"{NS}polyline") is not None
    assert len(root.find(f"{NS}g[@class='cells']")) == 9


def test_free_space_without_path():
    A = Polyline([(0, 0), (4, 0)])
    B = Polyline([(4, 0), (0, 0)])
    free = free_space_grid(A, B, 1.0)
    assert monotone_path(free) is None
    assert "<polyline" not in render_free_space(A, B, 1.0)
