"""Shared instance corpus and session-scoped caches for expensive solves."""
import pytest

from lambdaprime.exact import exact_opt_curve
from lambdaprime.graphs import gen_gnp, gen_path, gen_ring, gen_star, is_connected
from lambdaprime.lp import lp_curve
from lambdaprime.sweeps import sweep_geometric


def _connected_gnp(n, p, start_seed):
    """First connected G(n,p) draw at or after start_seed, deterministic."""
    for seed in range(start_seed, start_seed + 200):
        g = gen_gnp(n, p, seed=seed)
        if g.m and is_connected(g):
            return g
    raise RuntimeError("no connected G(%d,%s) near seed %d" % (n, p, start_seed))


def _build_corpus():
    graphs = [("ring4", gen_ring(2)), ("ring8", gen_ring(3))]
    for n in range(4, 10):
        graphs.append(("star%d" % n, gen_star(n)))
    for n in range(4, 11):
        graphs.append(("path%d" % n, gen_path(n)))
    sizes = [(n, p) for n in range(5, 9) for p in (0.3, 0.5, 0.8)]
    sizes += [(9, 0.3), (9, 0.5), (10, 0.3), (10, 0.5)]
    for n, p in sizes:
        name = "gnp%d_%02d" % (n, round(p * 10))
        graphs.append((name, _connected_gnp(n, p, start_seed=10 * n)))
    return graphs


_CORPUS = _build_corpus()


@pytest.fixture(scope="session")
def corpus():
    return _CORPUS


class SolveCache:
    """Memoizes the expensive per-graph artifacts across the whole session."""

    def __init__(self):
        self._opt = {}
        self._lp = {}
        self._cover = {}

    def opt_curve(self, name, g):
        if name not in self._opt:
            self._opt[name] = exact_opt_curve(g)
        return self._opt[name]

    def lp_curve(self, name, g):
        if name not in self._lp:
            self._lp[name] = lp_curve(g)
        return self._lp[name]

    def geometric_cover(self, name, g, eps):
        key = (name, eps)
        if key not in self._cover:
            self._cover[key] = sweep_geometric(g, eps)
        return self._cover[key]


@pytest.fixture(scope="session")
def cache():
    return SolveCache()
