"""Douglas-Peucker and Imai-Iri against the exact optima on two small curves.

    python3 demos/heuristics_vs_optimum.py
"""
from polysimp import Criterion, DistanceMeasure, brute_force_optimal, douglas_peucker, imai_iri, optimal_frechet
from polysimp.instances import gen_fig1_hausdorff_gap, gen_fig2_frechet_gap


def show(name, P, eps, rows):
    print(f"{name}: {len(P)} vertices, eps={eps:g}")
    for label, res in rows:
        print(f"  {label:<22} {len(res):>2} vertices  {[i + 1 for i in res.indices]}")
    print()


inst = gen_fig1_hausdorff_gap()
P, eps = inst.polyline, inst.eps
show("Hausdorff example", P, eps, [
    ("Douglas-Peucker", douglas_peucker(P, eps, Criterion.HAUSDORFF)),
    ("Imai-Iri", imai_iri(P, eps, Criterion.HAUSDORFF)),
    ("optimum (P to Q)", brute_force_optimal(P, eps, DistanceMeasure.HAUSDORFF_PQ)),
])
# no single shortcut is valid, yet the whole curve stays close to a 3-link path

inst = gen_fig2_frechet_gap()
P, eps = inst.polyline, inst.eps
show("Frechet example", P, eps, [
    ("Douglas-Peucker", douglas_peucker(P, eps, Criterion.FRECHET)),
    ("Imai-Iri", imai_iri(P, eps, Criterion.FRECHET)),
    ("optimum (DP)", optimal_frechet(P, eps)),
])
print("The optimum starts with p1 p3. That link alone is too far from p1 p2 p3,")
print("but its matching can stop halfway along the first edge and let the next link")
print("cover the detour.")
