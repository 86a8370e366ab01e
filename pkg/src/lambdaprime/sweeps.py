"""Cover families: small sets of LP solutions that stay near-optimal across
the whole lambda range.

Three constructions:

* sweep_geometric solves at a fixed geometric schedule. A solution from
  lambda_s keeps ratio lambda'/lambda_s when reused at lambda' > lambda_s
  (and symmetrically below), so it certifiably covers
  [lambda_s/(1+eps), (1+eps)*lambda_s] with factor 1+eps. The scaled
  objective uses the same transfer argument in gamma = lambda/(1-lambda).

* sweep_fe walks a frontier: solve at lambda0, push forward as far as the
  sensitivity LP allows (orlp, s=+1), then restart at (1+eps) times the
  frontier. Forward coverage is certified by orlp, backward coverage of
  [lambda0/(1+eps), lambda0] by the same transfer argument as above.

* sweep_febe re-runs orlp backward on every FE member to get its full
  approximate range, then greedily keeps a minimum subfamily that still
  covers the domain.

certify_cover re-checks any family from scratch: exact interval coverage,
plus an exact worst-ratio audit. Ratios of two piecewise-linear curves peak
at breakpoints of either, so auditing all breakpoints (plus a geometric
grid for good measure) bounds the ratio everywhere, not just at samples.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .analytic import lamcc_schedule
from .curves import PwlCurve, envelope_of
from .graphs import Graph
from .lp import LpSolution, lp_curve, solve_lp
from .rationals import GUARD, ceil_log, floor_log, rat
from .sensitivity import LambdaInterval, orlp


@dataclass(frozen=True)
class CoverMember:
    solution: LpSolution
    interval: LambdaInterval


@dataclass(frozen=True)
class CoverFamily:
    members: tuple  # CoverMember, ordered by interval.lo
    eps: Fraction
    domain: tuple  # (lo, hi)
    lp_solve_count: int
    objective: str = "lamprime"
    algo: str = ""

    def __post_init__(self):
        los = [m.interval.lo for m in self.members]
        if los != sorted(los):
            raise ValueError("members must be ordered by interval.lo")

    def coverage_gap(self):
        """First uncovered subinterval of the domain, or None."""
        lo, hi = self.domain
        if lo >= hi:
            return None
        cur = lo
        for mem in self.members:
            a = mem.interval.covered_lo()
            if a > cur:
                return (cur, a)
            cur = max(cur, mem.interval.covered_hi())
            if cur >= hi:
                return None
        return (cur, hi)


def family_envelope(family: CoverFamily) -> PwlCurve:
    """Lower envelope of the member cost lines over the family domain."""
    lo, hi = family.domain
    return envelope_of([m.solution.line for m in family.members], (lo, hi))


def _transfer_interval(lam_solve, eps):
    """Interval certified for a solution solved at lam_solve by cost-line reuse."""
    lo = lam_solve / (1 + eps)
    hi_raw = (1 + eps) * lam_solve
    if hi_raw >= 1:
        return LambdaInterval(lo, 1 - GUARD, eps, hi_clamped=True)
    return LambdaInterval(lo, hi_raw, eps)


def geometric_schedule(n, eps, start=None):
    """Raw solve points: 4/n^2 growing by (1+eps)^2, then 1/(1+eps) last.

    start overrides the 4/n^2 floor (experimentation knob; the default is the
    threshold below which one cluster is already optimal).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    eps = rat(eps)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if start is None:
        lam = Fraction(4, n * n)
    else:
        lam = rat(start)
        if not (0 < lam < 1):
            raise ValueError("start must lie in (0,1)")
    q = floor_log((1 + eps) ** 2, 1 / lam) + 1
    out = [lam]
    for _ in range(q - 1):
        lam *= (1 + eps) ** 2
        out.append(lam)
    out.append(1 / (1 + eps))
    return out


def sweep_geometric(g: Graph, eps, objective="lamprime", lam_floor=None) -> CoverFamily:
    eps = rat(eps)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if objective == "lamprime":
        sched = geometric_schedule(g.n, eps, start=lam_floor)
        members = []
        for lam in sched:
            lam_s = min(lam, 1 - GUARD)
            sol = solve_lp(g, lam_s)
            members.append(CoverMember(sol, _transfer_interval(lam_s, eps)))
        domain = (sched[0], Fraction(1))
    elif objective == "lamcc":
        sched = lamcc_schedule(g.n, eps)
        members = []
        for i, lam in enumerate(sched):
            sol = solve_lp(g, lam)
            lo = sched[i - 1] if i > 0 else sched[0]
            hi = sched[i + 1] if i + 1 < len(sched) else sched[-1]
            members.append(CoverMember(sol, LambdaInterval(lo, hi, eps)))
        domain = (sched[0], sched[-1])
    else:
        raise ValueError("objective must be 'lamprime' or 'lamcc'")
    members.sort(key=lambda m: (m.interval.lo, m.interval.hi))
    return CoverFamily(
        tuple(members), eps, domain, len(members), objective, "geometric"
    )


def sweep_fe(g: Graph, eps, lam_floor=None) -> CoverFamily:
    """Frontier extension: greedy forward pushes with sensitivity certificates."""
    eps = rat(eps)
    if eps <= 0:
        raise ValueError("the frontier step needs epsilon > 0")
    if g.n < 3:
        raise ValueError("frontier sweep needs n >= 3")
    if lam_floor is None:
        lam0 = Fraction(4, g.n * g.n)
    else:
        lam0 = rat(lam_floor)
        if not (0 < lam0 < 1):
            raise ValueError("lam_floor must lie in (0,1)")
    domain_lo = lam0
    members = []
    solves = 0
    lam_plus = None
    clamped = False
    while lam0 < 1:
        sol = solve_lp(g, lam0)
        solves += 1
        theta, clamped = orlp(sol, 1, lam0, eps, g)
        lam_plus = lam0 + theta
        lo = lam0 / (1 + eps)
        if clamped:
            iv = LambdaInterval(lo, lam_plus, eps, hi_clamped=True)
            members.append(CoverMember(sol, iv))
            break
        members.append(CoverMember(sol, LambdaInterval(lo, lam_plus, eps)))
        lam0 = (1 + eps) * lam_plus
    if not clamped:
        # frontier stopped short of 1: one extra solve at the frontier covers
        # [lam_plus, 1) since (1+eps)*lam_plus >= 1
        sol = solve_lp(g, lam_plus)
        solves += 1
        members.append(CoverMember(sol, _transfer_interval(lam_plus, eps)))
    members.sort(key=lambda m: (m.interval.lo, m.interval.hi))
    return CoverFamily(
        tuple(members),
        eps,
        (domain_lo, Fraction(1)),
        solves,
        "lamprime",
        "fe",
    )


def sweep_febe(g: Graph, eps, lam_floor=None) -> CoverFamily:
    """FE followed by backward widening and a greedy minimum subcover."""
    fe = sweep_fe(g, eps, lam_floor=lam_floor)
    eps = fe.eps
    widened = []
    for mem in fe.members:
        lam_i = rat(mem.solution.lam)
        theta_b, cl_b = orlp(mem.solution, -1, lam_i, eps, g)
        iv = LambdaInterval(
            lam_i - theta_b,
            mem.interval.hi,
            eps,
            lo_clamped=cl_b,
            hi_clamped=mem.interval.hi_clamped,
        )
        widened.append(CoverMember(mem.solution, iv))
    lo_d, hi_d = fe.domain
    cur = lo_d
    used = [False] * len(widened)
    chosen = []
    while cur < hi_d:
        best = None
        best_hi = None
        for idx, mem in enumerate(widened):
            if used[idx]:
                continue
            if mem.interval.covered_lo() <= cur <= mem.interval.covered_hi():
                h = mem.interval.covered_hi()
                if best is None or h > best_hi:
                    best, best_hi = idx, h
        if best is None or best_hi <= cur:
            raise AssertionError("frontier cover has a gap at %s" % cur)
        used[best] = True
        chosen.append(widened[best])
        cur = best_hi
    chosen.sort(key=lambda m: (m.interval.lo, m.interval.hi))
    return CoverFamily(
        tuple(chosen), eps, fe.domain, fe.lp_solve_count, "lamprime", "febe"
    )


def forward_factor(family, eps):
    """Forward ratios w_i between consecutive ranges and p = max ceil-log.

    family items are LambdaIntervals, CoverMembers, or (solution, interval)
    pairs. w_i = lo_{i+1}/hi_i for all but the last range, w_last = 1/hi_last;
    overlaps give w < 1 and contribute nothing through the max with 0.
    """
    if not family:
        raise ValueError("empty family")
    eps = rat(eps)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    ivs = []
    for item in family:
        if isinstance(item, LambdaInterval):
            ivs.append(item)
        elif hasattr(item, "interval"):
            ivs.append(item.interval)
        else:
            ivs.append(item[1])
    ws = []
    for i, iv in enumerate(ivs):
        beta = iv.covered_hi()
        if i + 1 < len(ivs):
            ws.append(ivs[i + 1].covered_lo() / beta)
        else:
            ws.append(1 / beta)
    p = 0
    for w in ws:
        if w > 1:
            p = max(p, ceil_log(1 + eps, w))
    return ws, p


@dataclass(frozen=True)
class CoverReport:
    ok: bool
    gap: object  # None or (lo, hi)
    worst_ratio: Fraction
    worst_lambda: Fraction
    bound: Fraction
    points_checked: int


def _geometric_grid(lo, hi, k):
    if k < 2:
        return [lo]
    flo, fhi = math.log(float(lo)), math.log(float(hi))
    pts = []
    for i in range(k):
        f = math.exp(flo + (fhi - flo) * i / (k - 1))
        lam = Fraction(f).limit_denominator(10 ** 9)
        pts.append(min(max(lam, lo), hi))
    return pts


def certify_cover(family: CoverFamily, g: Graph, grid_density=100, curve=None):
    """Re-check a family from scratch: coverage plus an exact ratio audit."""
    if not family.members:
        raise ValueError("empty family")
    for mem in family.members:
        if mem.solution.n != g.n:
            raise ValueError("family was built for a different graph")
    gap = family.coverage_gap()
    lo_d, hi_d = family.domain
    bound = 1 + family.eps
    if lo_d >= hi_d:
        return CoverReport(gap is None, gap, Fraction(1), lo_d, bound, 0)
    if curve is None:
        curve = lp_curve(g)
    env = family_envelope(family)
    hi_eff = min(hi_d, 1 - GUARD)
    points = set(_geometric_grid(lo_d, hi_eff, grid_density))
    points.update(b for b in curve.breakpoints if lo_d <= b <= hi_eff)
    points.update(b for b in env.breakpoints if lo_d <= b <= hi_eff)
    points.update(
        rat(m.solution.lam)
        for m in family.members
        if lo_d <= rat(m.solution.lam) <= hi_eff
    )
    points.add(lo_d)
    points.add(hi_eff)
    shift_m = g.m if family.objective == "lamcc" else 0
    worst = Fraction(0)
    worst_lam = lo_d
    for lam in sorted(points):
        lpv = curve.value_at(lam) - lam * shift_m
        mv = env.value_at(lam) - lam * shift_m
        if lpv == 0:
            if mv == 0:
                continue
            raise ValueError("LP value vanishes at %s; ratio undefined" % lam)
        ratio = mv / lpv
        if ratio > worst:
            worst, worst_lam = ratio, lam
    ok = gap is None and worst <= bound
    return CoverReport(ok, gap, worst, worst_lam, bound, len(points))
