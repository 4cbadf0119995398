"""Giving the heuristics a larger eps does not close the gap.

For each factor c, the heuristic runs at c*eps and the optimum at eps.

    python3 demos/enlargement_factor.py
"""
from polysimp import Criterion, DistanceMeasure, brute_force_optimal, douglas_peucker, imai_iri, optimal_frechet
from polysimp.instances import gen_dpf_zigzag, gen_triangle_zigzag

print("triangle walk, Hausdorff")
print(f"{'c':>4} {'m':>4} {'IIH(c eps)':>11} {'DPH(c eps)':>11} {'OPT(eps)':>9}")
for c in (1.5, 2, 4, 8):
    for m in (7, 11, 15):
        inst = gen_triangle_zigzag(c, m)
        P, eps = inst.polyline, inst.eps
        print(f"{c:>4g} {m:>4} {len(imai_iri(P, c * eps, Criterion.HAUSDORFF)):>11} "
              f"{len(douglas_peucker(P, c * eps, Criterion.HAUSDORFF)):>11} "
              f"{len(brute_force_optimal(P, eps, DistanceMeasure.HAUSDORFF_PQ)):>9}")

print()
print("zigzag with a long tail, Frechet")
print(f"{'c':>4} {'m':>4} {'DPF(c eps)':>11} {'OPTF(eps)':>10}")
for c in (2, 4, 8):
    for m in (10, 20, 40):
        inst = gen_dpf_zigzag(c, m)
        P, eps = inst.polyline, inst.eps
        print(f"{c:>4g} {m:>4} {len(douglas_peucker(P, c * eps, Criterion.FRECHET)):>11} "
              f"{len(optimal_frechet(P, eps)):>10}")
