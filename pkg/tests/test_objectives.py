from fractions import Fraction

import pytest

from lambdaprime.graphs import gen_gnp, gen_ring, gen_star, make_graph
from lambdaprime.objectives import (
    Clustering,
    CostLine,
    degree_weights,
    lamcc_score,
    lamprime_score,
    line_of,
    weighted_lamprime_score,
)

L = Fraction


def blocks(*bs):
    return Clustering.from_blocks(bs)


def test_clustering_canonical():
    c = Clustering((2, 2, 0, 1))
    assert c.assignment == (0, 0, 1, 2)
    assert c.num_clusters == 3
    assert blocks([0, 1], [2], [3]) == c


def test_clustering_from_blocks_errors():
    with pytest.raises(ValueError):
        Clustering.from_blocks([[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        Clustering.from_blocks([[0, 2]])


def test_lamprime_one_cluster_ring():
    g = gen_ring(3)
    c = blocks(range(8))
    assert lamprime_score(c, g, L(1, 8)) == L(7, 2)


def test_lamprime_two_blocks_ring():
    g = gen_ring(3)
    c = blocks([0, 1, 2, 3], [4, 5, 6, 7])
    # 2 cut edges, 6+6 intra pairs
    assert lamprime_score(c, g, L(1, 8)) == L(7, 2)
    assert line_of(c, g) == CostLine(L(2), L(12))


def test_singletons_score_is_m():
    for g in [gen_ring(3), gen_star(6), gen_gnp(7, 0.5, seed=2)]:
        c = Clustering(tuple(range(g.n)))
        for lam in [L(1, 10), L(1, 2), L(9, 10)]:
            assert lamprime_score(c, g, lam) == g.m
            assert lamcc_score(c, g, lam) == (1 - lam) * g.m


def test_lamcc_one_cluster():
    g = gen_star(5)
    c = blocks(range(5))
    lam = L(3, 10)
    assert lamcc_score(c, g, lam) == lam * (10 - 4)
    assert lamprime_score(c, g, lam) == lamcc_score(c, g, lam) + lam * g.m


def test_score_identity_random():
    import random

    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(3, 8)
        g = gen_gnp(n, 0.5, seed=rng.randrange(1000))
        c = Clustering(tuple(rng.randrange(3) for _ in range(n)))
        lam = L(rng.randrange(1, 99), 100)
        assert lamprime_score(c, g, lam) == lamcc_score(c, g, lam) + lam * g.m


def test_score_increasing_in_lambda():
    g = gen_ring(3)
    c = blocks([0, 1], [2, 3], [4, 5], [6, 7])
    assert lamprime_score(c, g, L(1, 4)) < lamprime_score(c, g, L(1, 2))
    singles = Clustering(tuple(range(8)))
    assert lamprime_score(singles, g, L(1, 4)) == lamprime_score(singles, g, L(1, 2))


def test_lambda_domain_checked():
    g = gen_star(4)
    c = Clustering((0, 0, 0, 0))
    for bad in [L(0), L(1), L(-1, 2), L(3, 2)]:
        with pytest.raises(ValueError):
            lamprime_score(c, g, bad)
    with pytest.raises(TypeError):
        lamprime_score(c, g, 0.5)  # floats refused


def test_weighted_one_cluster_star_degrees():
    g = gen_star(5)
    c = blocks(range(5))
    w = degree_weights(g)
    # pairs: 4 center-leaf of weight 4*1 and 6 leaf-leaf of weight 1
    assert weighted_lamprime_score(c, g, w, L(1, 10)) == L(1, 10) * (16 + 6)
    assert weighted_lamprime_score(c, g, w, L(1, 10)) == L(11, 5)


def test_weighted_unit_equals_unweighted():
    g = gen_gnp(6, 0.5, seed=9)
    w = {v: L(1) for v in range(6)}
    c = blocks([0, 1, 2], [3, 4], [5])
    for lam in [L(1, 7), L(2, 3)]:
        assert weighted_lamprime_score(c, g, w, lam) == lamprime_score(c, g, lam)


def test_weighted_missing_weight():
    g = gen_star(4)
    c = Clustering((0, 0, 1, 1))
    with pytest.raises(ValueError):
        weighted_lamprime_score(c, g, {0: L(1)}, L(1, 2))


def test_weighted_degree_difference_matches_volume_form():
    # score difference between two clusterings must match the cut/volume form
    #   sum_S cut(S)/2 - (lam/2) sum_S vol(S) vol(V\S)
    # whose additive constant cancels in differences.
    import random

    rng = random.Random(21)
    for _ in range(30):
        n = rng.randrange(4, 8)
        g = gen_gnp(n, 0.6, seed=rng.randrange(999))
        if g.m == 0:
            continue
        w = degree_weights(g)
        if any(v == 0 for v in w.values()):
            continue  # degree weights must stay positive
        lam = L(rng.randrange(1, 20), 20)
        cs = [
            Clustering(tuple(rng.randrange(3) for _ in range(n))),
            Clustering(tuple(rng.randrange(2) for _ in range(n))),
        ]

        def volume_form(c):
            deg = g.degrees()
            volV = sum(deg)
            cut_total = sum(1 for u, v in g.edges if not c.together(u, v))
            vol = {}
            for node, cid in enumerate(c.assignment):
                vol[cid] = vol.get(cid, 0) + deg[node]
            cross = sum(vs * (volV - vs) for vs in vol.values())
            return cut_total - L(lam, 2) * cross

        lhs = weighted_lamprime_score(cs[0], g, w, lam) - weighted_lamprime_score(
            cs[1], g, w, lam
        )
        assert lhs == volume_form(cs[0]) - volume_form(cs[1])


def test_line_of_fractional():
    g = gen_star(5)
    x = {}
    for u, v in g.pairs():
        x[(u, v)] = L(1, 2) if u == 0 else L(1)
    line = line_of(x, g)
    assert line == CostLine(L(2), L(2))
    assert line.value_at(L(3, 10)) == L(13, 5)


def test_line_of_bounds_checked():
    g = gen_star(4)
    x = {p: L(2) for p in g.pairs()}
    with pytest.raises(ValueError):
        line_of(x, g)
