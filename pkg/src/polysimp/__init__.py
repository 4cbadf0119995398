"""Polyline simplification under Hausdorff and Fréchet distance.

Heuristics (Douglas-Peucker, Imai-Iri), exact optima (Fréchet dynamic program,
output-to-input Hausdorff, brute force), distance decisions, and generators for
instances on which the heuristics fall short.
"""
from .distances import (
    DistanceMeasure,
    decide,
    frechet_decision,
    frechet_value,
    hausdorff_decision,
    hausdorff_directed_decision,
    hausdorff_directed_value,
    hausdorff_undirected_value,
    link_reach,
)
from .geometry import PathParam, Polyline, Segment, eval_param, subcurve
from .opt_frechet import NoSimplification, optimal_frechet, partial_reach
from .opt_hausdorff import GuardExceeded, brute_force_optimal, optimal_hausdorff_qp
from .simplify import (
    Criterion,
    LinkGraph,
    SimplificationResult,
    douglas_peucker,
    imai_iri,
    link_graph,
    valid_link,
)

__version__ = "0.1.0"

__all__ = [
    "Criterion", "DistanceMeasure", "GuardExceeded", "LinkGraph", "NoSimplification",
    "PathParam", "Polyline", "Segment", "SimplificationResult",
    "brute_force_optimal", "decide", "douglas_peucker", "eval_param", "frechet_decision",
    "frechet_value", "hausdorff_decision", "hausdorff_directed_decision",
    "hausdorff_directed_value", "hausdorff_undirected_value", "imai_iri", "link_graph",
    "link_reach", "optimal_frechet", "optimal_hausdorff_qp", "partial_reach", "subcurve",
    "valid_link",
]
