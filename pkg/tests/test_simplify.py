from itertools import combinations

import pytest

from conftest import fuzz_case
from polysimp import (
    Criterion,
    Polyline,
    douglas_peucker,
    frechet_decision,
    hausdorff_directed_decision,
    imai_iri,
    link_graph,
    valid_link,
)
from polysimp.instances import gen_dpf_zigzag, gen_fig1_hausdorff_gap, gen_fig2_frechet_gap
from polysimp.random_polylines import gen_random
from polysimp.simplify import is_simplification

BOTH = (Criterion.HAUSDORFF, Criterion.FRECHET)


def test_consecutive_links_always_valid():
    P = gen_random(8, 2, "spiky")
    for crit in BOTH:
        for i in range(len(P) - 1):
            assert valid_link(P, i, i + 1, 0.0, crit)


def test_valid_link_apex():
    P = Polyline([(0, 0), (1, 1), (2, 0)])
    assert valid_link(P, 0, 2, 1.0, Criterion.HAUSDORFF)
    assert not valid_link(P, 0, 2, 0.99, Criterion.HAUSDORFF)


def test_valid_link_range():
    P = Polyline([(0, 0), (1, 1), (2, 0)])
    with pytest.raises(IndexError):
        valid_link(P, 0, 3, 1.0, Criterion.HAUSDORFF)
    with pytest.raises(IndexError):
        valid_link(P, 2, 1, 1.0, Criterion.HAUSDORFF)


def test_fig2_link_hausdorff_valid_frechet_invalid():
    inst = gen_fig2_frechet_gap()
    P, eps = inst.polyline, inst.eps
    # the back-and-forth tail 4..7
    assert valid_link(P, 4, 7, eps, Criterion.HAUSDORFF)
    assert not valid_link(P, 4, 7, eps, Criterion.FRECHET)


def test_one_skip_hausdorff_valid_implies_frechet_valid():
    # match both halves of the chain linearly to the foot of the middle vertex
    for seed in range(200):
        P, eps = fuzz_case(seed, 3, 3)
        if valid_link(P, 0, 2, eps, Criterion.HAUSDORFF):
            assert valid_link(P, 0, 2, eps, Criterion.FRECHET)


def test_link_validity_monotone_in_eps():
    for seed in range(30):
        P, eps = fuzz_case(seed)
        for crit in BOTH:
            small, big = link_graph(P, eps, crit), link_graph(P, 2 * eps, crit)
            for i in range(len(P)):
                for j in range(i + 1, len(P)):
                    assert not small.valid(i, j) or big.valid(i, j)


def test_collinear_gives_two_vertices():
    P = Polyline([(x, 2 * x + 1) for x in range(7)])
    for crit in BOTH:
        for eps in (0.0, 0.3):
            assert douglas_peucker(P, eps, crit).indices == (0, 6)
            assert imai_iri(P, eps, crit).indices == (0, 6)


def test_apex_both_criteria():
    P = Polyline([(0, 0), (1, 1), (2, 0)])
    for crit in BOTH:
        assert len(douglas_peucker(P, 1.0, crit)) == 2
        assert len(imai_iri(P, 1.0, crit)) == 2


def test_tiny_inputs_unchanged():
    for pts in ([(0, 0)], [(0, 0), (1, 1)]):
        for crit in BOTH:
            assert douglas_peucker(pts, 0.5, crit).indices == tuple(range(len(pts)))
            assert imai_iri(pts, 0.5, crit).indices == tuple(range(len(pts)))


def test_fig1_heuristics_keep_everything():
    inst = gen_fig1_hausdorff_gap()
    assert len(imai_iri(inst.polyline, inst.eps, Criterion.HAUSDORFF)) == 7
    assert len(douglas_peucker(inst.polyline, inst.eps, Criterion.HAUSDORFF)) == 7


def test_dpf_zigzag_keeps_everything_and_splits_p2_first():
    inst = gen_dpf_zigzag(2.0, 10)
    trace = []
    res = douglas_peucker(inst.polyline, 2.0 * inst.eps, Criterion.FRECHET, trace=trace)
    assert len(res) == 10
    assert trace[0] == 1


def test_dp_split_is_farthest_vertex_lowest_index_on_ties():
    # vertices 1 and 3 are equally far from the base
    P = Polyline([(0, 0), (1, 1), (2, 0.5), (3, 1), (4, 0)])
    trace = []
    douglas_peucker(P, 0.1, Criterion.HAUSDORFF, trace=trace)
    assert trace[0] == 1


def _valid_link_optimum(P, eps, crit):
    """Fewest vertices over subsequences whose every link is valid."""
    n = len(P)
    for size in range(n - 1):
        for mid in combinations(range(1, n - 1), size):
            idx = (0,) + mid + (n - 1,)
            if all(valid_link(P, a, b, eps, crit) for a, b in zip(idx, idx[1:])):
                return len(idx)


def test_imai_iri_optimal_in_link_model():
    for seed in range(80):
        P, eps = fuzz_case(seed, 4, 12)
        for crit in BOTH:
            assert len(imai_iri(P, eps, crit)) == _valid_link_optimum(P, eps, crit), (seed, crit)


def test_heuristics_certified_and_ordered():
    for seed in range(150):
        P, eps = fuzz_case(seed, 3, 14)
        for crit in BOTH:
            ii, dp = imai_iri(P, eps, crit), douglas_peucker(P, eps, crit)
            assert len(ii) <= len(dp)
            for res in (ii, dp):
                assert is_simplification(res.indices, len(P))
                Q = res.polyline(P)
                if crit is Criterion.HAUSDORFF:
                    assert hausdorff_directed_decision(P, Q, eps)
                else:
                    assert frechet_decision(P, Q, eps)


def test_dp_nested_and_ii_monotone():
    for seed in range(150):
        P, eps = fuzz_case(seed, 3, 14)
        for crit in BOTH:
            assert set(douglas_peucker(P, 2 * eps, crit).indices) <= set(douglas_peucker(P, eps, crit).indices)
            assert len(imai_iri(P, 2 * eps, crit)) <= len(imai_iri(P, eps, crit))
