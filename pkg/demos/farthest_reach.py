"""Why the Frechet DP keeps one reach point per edge instead of one per vertex.

    python3 demos/farthest_reach.py
"""
from polysimp import optimal_frechet
from polysimp.instances import gen_notsuf
from polysimp.opt_frechet import fewest_completion_links, partial_reach

inst = gen_notsuf()
P, eps = inst.polyline, inst.eps

opt = optimal_frechet(P, eps)
greedy = optimal_frechet(P, eps, greedy=True)
print(f"{len(P)} vertices, eps={eps:g}")
print(f"per-edge DP : {opt.k_links} links via {[i + 1 for i in opt.indices]}")
print(f"farthest-only: {greedy.k_links} links via {[i + 1 for i in greedy.indices]}")

# edges print 1-based: edge 4 is p4p5, edge 5 is p5p6. For p4 the
# farthest-only DP keeps just the point on p5p6 and drops the one on p4p5
for partial in ((0, 2, 3), (0, 1, 3)):
    reach = partial_reach(P, partial, eps)
    hits = [(t.edge + 1, round(t.lam, 3)) for t in reach if t is not None]
    print(f"reach of {[i + 1 for i in partial]}: (edge, fraction) {hits}")

far = partial_reach(P, (0, 2, 3), eps)[4]
print("links needed from the far point on p5p6:", fewest_completion_links(P, far, 3, eps))
near = partial_reach(P, (0, 2, 3), eps)[3]
print("links needed from the near point on p4p5:", fewest_completion_links(P, near, 3, eps))
