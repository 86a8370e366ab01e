"""Metric LP relaxation of the clustering objective.

Variables are pairwise "distances" x_ij in [0,1] over the lex-ordered pairs
of an n-node graph. The program is

    min  sum_E (1-lam) x_ij + sum_nonE (-lam) x_ij + lam*C(n,2)
    s.t. x_ik + x_jk - x_ij >= 0   for every triple and isolated pair
         -x_ij >= -1
         x >= 0

whose objective equals P + lam*N with P = sum of x over edges and
N = sum over all pairs of (1 - x_ij). Integral x encode partitions, so the
optimum lower-bounds the best clustering at every lam.

solve_lp offers an exact rational mode (the in-package simplex) and a float
mode (scipy HiGHS with tightened tolerances) for larger graphs. lp_curve
recovers the full piecewise-linear value curve exactly by chord search:
solve the endpoints, and if their cost lines disagree, solve at the
intersection; matching value there certifies the two pieces by concavity.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .curves import PwlCurve, PwlPiece
from .graphs import Graph
from .objectives import CostLine
from .rationals import rat
from .simplex import solve_canonical


@dataclass(frozen=True)
class LpProblem:
    """min c.x + constant  s.t. each row (sparse coeffs) . x >= rhs, x >= 0."""

    n: int
    lam: Fraction
    pairs: tuple  # lex-ordered (i, j)
    c: tuple  # objective coefficient per pair
    rows: tuple  # tuple of ((var, coeff), ...) in fixed order
    rhs: tuple
    constant: Fraction

    @property
    def num_vars(self):
        return len(self.pairs)

    @property
    def num_rows(self):
        return len(self.rows)

    def dense(self):
        """Materialize (c, A, b) for the >=-form program."""
        nv = self.num_vars
        A = []
        for row in self.rows:
            dense = [Fraction(0)] * nv
            for j, coeff in row:
                dense[j] = Fraction(coeff)
            A.append(dense)
        return list(self.c), A, list(self.rhs)


def pair_index(n):
    """Map lex-ordered pairs to variable indices."""
    pairs = list(combinations(range(n), 2))
    return pairs, {p: k for k, p in enumerate(pairs)}


def build_lp(g: Graph, lam) -> LpProblem:
    lam = rat(lam)
    if not 0 <= lam <= 1:
        raise ValueError("lambda must lie in [0, 1]")
    pairs, idx = pair_index(g.n)
    c = tuple(
        (1 - lam) if g.has_edge(*p) else -lam for p in pairs
    )
    rows = []
    rhs = []
    for i, j, k in combinations(range(g.n), 3):
        ij, ik, jk = idx[(i, j)], idx[(i, k)], idx[(j, k)]
        # one row per isolated pair of the triple
        rows.append(((ij, -1), (ik, 1), (jk, 1)))
        rows.append(((ij, 1), (ik, -1), (jk, 1)))
        rows.append(((ij, 1), (ik, 1), (jk, -1)))
        rhs.extend((Fraction(0), Fraction(0), Fraction(0)))
    for p in range(len(pairs)):
        rows.append(((p, -1),))
        rhs.append(Fraction(-1))
    q = Fraction(len(pairs))
    return LpProblem(
        n=g.n,
        lam=lam,
        pairs=tuple(pairs),
        c=c,
        rows=tuple(rows),
        rhs=tuple(rhs),
        constant=lam * q,
    )


@dataclass(frozen=True)
class LpSolution:
    n: int
    lam: object  # Fraction (exact) or float
    x: tuple  # per lex pair
    value: object
    line: CostLine
    dual: tuple  # y >= 0 for the >=-form rows
    exact: bool = True


def _check_metric(x, n, idx, tol=0):
    for i, j, k in combinations(range(n), 3):
        a, b, c = x[idx[(i, j)]], x[idx[(i, k)]], x[idx[(j, k)]]
        if a > b + c + tol or b > a + c + tol or c > a + b + tol:
            raise AssertionError("triangle inequality violated at (%d,%d,%d)" % (i, j, k))


def _line_of_x(g: Graph, x, idx):
    p = sum(x[idx[e]] for e in g.sorted_edges())
    npairs = len(x)
    nval = npairs - sum(x)
    return CostLine(p, nval)


def solve_lp(g: Graph, lam, mode="exact") -> LpSolution:
    """Solve the metric LP at one lambda; exact Fractions or HiGHS floats."""
    if mode == "exact":
        return _solve_exact(g, lam)
    if mode == "float":
        return _solve_float(g, lam)
    raise ValueError("mode must be 'exact' or 'float'")


def _solve_exact(g: Graph, lam) -> LpSolution:
    prob = build_lp(g, lam)
    c, A, b = prob.dense()
    # flip to <= form; all rhs become 0 or 1, so the slack basis is feasible
    G = [[-v for v in row] for row in A]
    h = [-v for v in b]
    res = solve_canonical(c, G, h)
    _, idx = pair_index(g.n)
    _check_metric(res.x, g.n, idx)
    if any(v < 0 or v > 1 for v in res.x):
        raise AssertionError("x outside [0,1]")
    line = _line_of_x(g, res.x, idx)
    value = res.value + prob.constant
    if line.value_at(prob.lam) != value:
        raise AssertionError("objective decomposition mismatch")
    y = tuple(-u for u in res.dual_ub)
    if any(v < 0 for v in y):
        raise AssertionError("negative dual")
    # strong duality for the >=-form program
    if sum(yi * bi for yi, bi in zip(y, b)) + prob.constant != value:
        raise AssertionError("strong duality violated")
    return LpSolution(
        n=g.n, lam=prob.lam, x=tuple(res.x), value=value, line=line, dual=y,
        exact=True,
    )


_HIGHS_OPTS = {
    "primal_feasibility_tolerance": 1e-10,
    "dual_feasibility_tolerance": 1e-10,
}


def _solve_float(g: Graph, lam) -> LpSolution:
    from scipy.optimize import linprog

    prob = build_lp(g, lam)
    lamf = float(prob.lam)
    nv = prob.num_vars
    cf = [float(v) for v in prob.c]
    # triangle rows only; box handled via bounds
    n_tri = prob.num_rows - nv
    Gf = []
    for row in prob.rows[:n_tri]:
        dense = [0.0] * nv
        for j, coeff in row:
            dense[j] = -float(coeff)
        Gf.append(dense)
    hf = [0.0] * n_tri
    res = linprog(cf, A_ub=Gf, b_ub=hf, bounds=(0, 1), method="highs",
                  options=_HIGHS_OPTS)
    if res.status != 0:
        raise AssertionError("HiGHS failed: %s" % res.message)
    _, idx = pair_index(g.n)
    x = tuple(min(1.0, max(0.0, float(v))) for v in res.x)
    _check_metric(x, g.n, idx, tol=1e-8)
    line = _line_of_x(g, x, idx)
    value = float(res.fun) + lamf * len(prob.pairs)
    dual_tri = tuple(-float(u) for u in res.ineqlin.marginals)
    dual_ub = tuple(max(0.0, -float(u)) for u in res.upper.marginals)
    return LpSolution(
        n=g.n, lam=lamf, x=x, value=value, line=line,
        dual=dual_tri + dual_ub, exact=False,
    )


def lp_value_at(x: LpSolution, lam):
    """Value of an existing solution's cost line at a different lambda."""
    return x.line.value_at(lam)


def lp_optimum(g: Graph, lam, mode="exact"):
    """Convenience: solve and return only the optimal value."""
    return solve_lp(g, lam, mode=mode).value


def lp_curve(g: Graph, lo=0, hi=1) -> PwlCurve:
    """Exact piecewise-linear LP value curve on [lo, hi].

    Pieces are tagged with an LpSolution whose cost line is the piece. The
    number of solver calls is proportional to the number of pieces, not to
    any sampling density.
    """
    lo, hi = rat(lo), rat(hi)
    if not 0 <= lo < hi <= 1:
        raise ValueError("need 0 <= lo < hi <= 1")
    cache = {}

    def solve(lam):
        if lam not in cache:
            cache[lam] = _solve_exact(g, lam)
        return cache[lam]

    pieces = []

    def chord(a, sa, b, sb):
        la, lb = sa.line, sb.line
        if la == lb:
            pieces.append(PwlPiece(la, a, b, tag=sa))
            return
        # distinct optimal lines cross within [a, b]
        lx = la.intersect(lb)
        if lx <= a:
            pieces.append(PwlPiece(lb, a, b, tag=sb))
            return
        if lx >= b:
            pieces.append(PwlPiece(la, a, b, tag=sa))
            return
        sm = solve(lx)
        if sm.value == la.value_at(lx):
            pieces.append(PwlPiece(la, a, lx, tag=sa))
            pieces.append(PwlPiece(lb, lx, b, tag=sb))
            return
        chord(a, sa, lx, sm)
        chord(lx, sm, b, sb)

    chord(lo, solve(lo), hi, solve(hi))
    merged = []
    for p in pieces:
        if merged and merged[-1].line == p.line:
            merged[-1] = PwlPiece(p.line, merged[-1].lo, p.hi, tag=merged[-1].tag)
        else:
            merged.append(p)
    return PwlCurve(tuple(merged), lo, hi)
