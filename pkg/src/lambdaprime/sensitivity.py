"""Sensitivity analysis of LP solutions along the lambda axis.

For a solution x* optimal at lam0, orlp() finds the largest step theta so
that x* stays a (1+eps)-approximation of the LP optimum at lam0 + s*theta.
The trick is to search for a dual vector y feasible at the perturbed cost
(A^T y <= c + s*theta*d, with d = -1 on every pair since every cost
coefficient has slope -1 in lambda) whose certified value still nearly
matches the value of x*:

    maximize theta
    s.t.     (A^T y)_p + s*theta <= c_p          for every pair p
             (1+eps) b.y + s*theta (eps*Q + sum x*) >= c.x* - eps*lam0*Q
             0 <= theta <= distance to the lambda-domain edge
             y >= 0

Weak duality makes any feasible (y, theta) a proof; LP duality at the true
endpoint makes the bound tight, and concavity of the LP value curve makes the
approximate region an interval. With eps = 0 this recovers the exact optimal
range of x*. The theta cap records when the range runs into the domain edge;
callers treat a clamped endpoint as coverage through that edge.

The scaled objective variant (value shifted by -lambda*m) only changes the
constant Q to Q - m in the epsilon row.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph
from .lp import LpSolution, build_lp
from .rationals import GUARD, rat
from .simplex import solve_canonical


@dataclass(frozen=True)
class LambdaInterval:
    lo: Fraction
    hi: Fraction
    eps: Fraction = Fraction(0)
    lo_clamped: bool = False
    hi_clamped: bool = False

    def __post_init__(self):
        if not 0 < self.lo <= self.hi < 1:
            raise ValueError("need 0 < lo <= hi < 1")

    @property
    def kind(self):
        return "optimal" if self.eps == 0 else "eps-approximate"

    def contains(self, lam):
        return self.lo <= lam <= self.hi

    def covered_lo(self):
        """Left end for coverage purposes; a clamp reaches the domain edge."""
        return Fraction(0) if self.lo_clamped else self.lo

    def covered_hi(self):
        return Fraction(1) if self.hi_clamped else self.hi


def _columns_times(rows, y, nv):
    """A^T y for sparse rows over nv variables."""
    out = [Fraction(0)] * nv
    for coeffs, yi in zip(rows, y):
        if yi:
            for var, coeff in coeffs:
                out[var] += coeff * yi
    return out


def verify_certificate(xstar: LpSolution, g: Graph):
    """Check that x* carries a complete optimality proof at its lambda."""
    if not xstar.exact:
        raise ValueError("sensitivity analysis needs an exact solution")
    prob = build_lp(g, xstar.lam)
    nv = prob.num_vars
    if len(xstar.x) != nv or len(xstar.dual) != prob.num_rows:
        raise ValueError("solution shape does not match the graph")
    x = [rat(v) for v in xstar.x]
    if any(v < 0 or v > 1 for v in x):
        raise ValueError("x outside [0,1]")
    for coeffs, b in zip(prob.rows, prob.rhs):
        if sum(coeff * x[var] for var, coeff in coeffs) < b:
            raise ValueError("x violates a constraint")
    value = sum(ci * xi for ci, xi in zip(prob.c, x)) + prob.constant
    if value != xstar.value or xstar.line.value_at(prob.lam) != xstar.value:
        raise ValueError("stored value is inconsistent")
    y = [rat(v) for v in xstar.dual]
    if any(v < 0 for v in y):
        raise ValueError("dual certificate has a negative entry")
    aty = _columns_times(prob.rows, y, nv)
    if any(aty[p] > prob.c[p] for p in range(nv)):
        raise ValueError("dual certificate infeasible")
    if sum(yi * bi for yi, bi in zip(y, prob.rhs)) + prob.constant != value:
        raise ValueError("dual certificate does not prove optimality")
    return prob


def orlp(xstar: LpSolution, s: int, lam0, eps, g: Graph, objective="lamprime"):
    """Largest admissible step from lam0 in direction s; (theta, clamped)."""
    if s not in (1, -1):
        raise ValueError("s must be +1 or -1")
    if not xstar.exact:
        raise ValueError("sensitivity analysis needs an exact solution")
    lam0 = rat(lam0)
    eps = rat(eps)
    if eps < 0:
        raise ValueError("epsilon must be nonnegative")
    if rat(xstar.lam) != lam0:
        raise ValueError("x* was not solved at lambda0")
    prob = verify_certificate(xstar, g)
    if objective == "lamprime":
        q_eff = Fraction(len(prob.pairs))
    elif objective == "lamcc":
        q_eff = Fraction(len(prob.pairs) - g.m)
    else:
        raise ValueError("objective must be 'lamprime' or 'lamcc'")

    nrows_p1 = prob.num_rows
    nv = nrows_p1 + 1  # y then theta
    theta_col = nrows_p1
    npairs = prob.num_vars
    cap = (1 - lam0) if s > 0 else lam0

    A = []
    b = []
    # pair rows: (A^T y)_p + s*theta <= c_p
    for p in range(npairs):
        A.append([Fraction(0)] * nv)
        b.append(prob.c[p])
    for r, coeffs in enumerate(prob.rows):
        for var, coeff in coeffs:
            A[var][r] = Fraction(coeff)
    for p in range(npairs):
        A[p][theta_col] = Fraction(s)
    # epsilon row, flipped to <=
    cx = xstar.value - prob.constant
    row = [-(1 + eps) * bi for bi in prob.rhs] + [
        -s * (eps * q_eff + sum(rat(v) for v in xstar.x))
    ]
    A.append(row)
    b.append(eps * lam0 * q_eff - cx)
    # domain cap on theta
    cap_row = [Fraction(0)] * nv
    cap_row[theta_col] = Fraction(1)
    A.append(cap_row)
    b.append(cap)

    obj = [Fraction(0)] * nrows_p1 + [Fraction(-1)]
    res = solve_canonical(obj, A, b)
    theta = res.x[theta_col]
    if theta != -res.value:
        raise AssertionError("inconsistent ORLP optimum")
    clamped = theta == cap
    if clamped:
        if s > 0:
            theta = max(Fraction(0), (1 - GUARD) - lam0)
        else:
            theta = max(Fraction(0), lam0 - GUARD)
    return theta, clamped


def eps_range(xstar: LpSolution, lam0, eps, g: Graph, objective="lamprime"):
    """Interval around lam0 where x* is a (1+eps)-approximation."""
    lam0 = rat(lam0)
    t_fwd, c_fwd = orlp(xstar, 1, lam0, eps, g, objective=objective)
    t_bwd, c_bwd = orlp(xstar, -1, lam0, eps, g, objective=objective)
    return LambdaInterval(
        lo=lam0 - t_bwd,
        hi=lam0 + t_fwd,
        eps=rat(eps),
        lo_clamped=c_bwd,
        hi_clamped=c_fwd,
    )
