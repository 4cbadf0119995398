"""Write SVG pictures of the constructed instances into a directory.

    python3 demos/render_pictures.py out/
"""
import sys
from pathlib import Path

from polysimp import optimal_frechet
from polysimp.instances import gen_fig2_frechet_gap, gen_iif_gadget, gen_notsuf
from polysimp.render import render_free_space, render_polylines

out = Path(sys.argv[1] if len(sys.argv) > 1 else "pictures")
out.mkdir(parents=True, exist_ok=True)

for name, inst in (("fig2", gen_fig2_frechet_gap()), ("gadget", gen_iif_gadget(1)), ("notsuf", gen_notsuf())):
    P, eps = inst.polyline, inst.eps
    Q = optimal_frechet(P, eps).polyline(P)
    (out / f"{name}.svg").write_text(render_polylines(P, Q, eps, capsules=True))
    (out / f"{name}_free_space.svg").write_text(render_free_space(P, Q, eps, res=24))
    print("wrote", out / f"{name}.svg", "and", out / f"{name}_free_space.svg")
