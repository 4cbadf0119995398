"""Imai-Iri under Frechet distance on repeated copies of a staircase gadget.

Each copy costs Imai-Iri a couple of vertices more than the optimum, even
when Imai-Iri gets 1.25 times the tolerance. At 4 times the tolerance it
matches the optimum, as the weak-simplification bound predicts.

    python3 demos/imai_iri_gadget.py
"""
from polysimp import Criterion, imai_iri, optimal_frechet
from polysimp.instances import gen_iif_gadget

print(f"{'copies':>6} {'n':>4} {'IIF(eps)':>9} {'IIF(1.25eps)':>13} {'IIF(4eps)':>10} {'OPTF(eps)':>10} {'ratio':>6}")
for reps in (1, 2, 3, 5, 8):
    inst = gen_iif_gadget(reps)
    P, eps = inst.polyline, inst.eps
    iif = [len(imai_iri(P, f * eps, Criterion.FRECHET)) for f in (1, 1.25, 4)]
    opt = len(optimal_frechet(P, eps))
    print(f"{reps:>6} {len(P):>4} {iif[0]:>9} {iif[1]:>13} {iif[2]:>10} {opt:>10} {iif[1] / opt:>6.2f}")
