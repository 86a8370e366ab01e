"""Lossless JSON/CSV export of solutions, covers, curves, and clusterings.

Rationals are serialized as "num/den" strings so every file re-loads to the
exact same Fractions. Files are written atomically (temp file + rename) so a
crashed run never leaves a half-written artifact behind.
"""
from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from fractions import Fraction

from .curves import PwlCurve
from .lp import LpSolution
from .objectives import CostLine
from .rationals import format_rat, parse_rat
from .sensitivity import LambdaInterval
from .sweeps import CoverFamily, CoverMember


def atomic_write_text(path, text: str) -> None:
    path = os.fspath(path)
    d = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def write_json(obj, path) -> None:
    atomic_write_text(path, json.dumps(obj, indent=2) + "\n")


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


def _require_exact(sol: LpSolution):
    if not sol.exact:
        raise ValueError("only exact solutions serialize losslessly")


def solution_to_dict(sol: LpSolution) -> dict:
    _require_exact(sol)
    return {
        "lambda": format_rat(sol.lam),
        "value": format_rat(sol.value),
        "P": format_rat(sol.line.P),
        "N": format_rat(sol.line.N),
        "x": [format_rat(v) for v in sol.x],
    }


def _n_from_pairs(npairs: int) -> int:
    n = int((1 + math.isqrt(1 + 8 * npairs)) // 2)
    if n * (n - 1) // 2 != npairs:
        raise ValueError("x length %d is not a pair count" % npairs)
    return n


def solution_from_dict(d: dict) -> LpSolution:
    x = tuple(parse_rat(v) for v in d["x"])
    line = CostLine(parse_rat(d["P"]), parse_rat(d["N"]))
    return LpSolution(
        _n_from_pairs(len(x)), parse_rat(d["lambda"]), x,
        parse_rat(d["value"]), line, (),
    )


def interval_to_dict(iv: LambdaInterval) -> dict:
    d = {"lo": format_rat(iv.lo), "hi": format_rat(iv.hi)}
    if iv.lo_clamped:
        d["lo_clamped"] = True
    if iv.hi_clamped:
        d["hi_clamped"] = True
    return d


def interval_from_dict(d: dict, eps) -> LambdaInterval:
    return LambdaInterval(
        parse_rat(d["lo"]),
        parse_rat(d["hi"]),
        eps,
        lo_clamped=bool(d.get("lo_clamped", False)),
        hi_clamped=bool(d.get("hi_clamped", False)),
    )


def family_to_dict(fam: CoverFamily, include_vectors=True) -> dict:
    members = []
    for mem in fam.members:
        sol = mem.solution
        _require_exact(sol)
        md = {
            "lambda": format_rat(sol.lam),
            "P": format_rat(sol.line.P),
            "N": format_rat(sol.line.N),
            "value": format_rat(sol.value),
            "interval": interval_to_dict(mem.interval),
        }
        if include_vectors:
            md["x"] = [format_rat(v) for v in sol.x]
        members.append(md)
    out = {
        "epsilon": format_rat(fam.eps),
        "domain": [format_rat(fam.domain[0]), format_rat(fam.domain[1])],
        "members": members,
        "lp_solve_count": fam.lp_solve_count,
    }
    if fam.objective != "lamprime":
        out["objective"] = fam.objective
    return out


def family_from_dict(d: dict, n: int) -> CoverFamily:
    eps = parse_rat(d["epsilon"])
    members = []
    for md in d["members"]:
        x = tuple(parse_rat(v) for v in md.get("x", []))
        line = CostLine(parse_rat(md["P"]), parse_rat(md["N"]))
        sol = LpSolution(
            n, parse_rat(md["lambda"]), x, parse_rat(md["value"]), line, ()
        )
        members.append(CoverMember(sol, interval_from_dict(md["interval"], eps)))
    return CoverFamily(
        tuple(members),
        eps,
        (parse_rat(d["domain"][0]), parse_rat(d["domain"][1])),
        int(d["lp_solve_count"]),
        d.get("objective", "lamprime"),
    )


def clustering_family_to_list(rounded) -> list:
    out = []
    for rm in rounded:
        ratio = "inf" if rm.ratio == math.inf else format_rat(rm.ratio)
        out.append(
            {
                "lambda_interval": interval_to_dict(rm.interval),
                "assignment": list(rm.clustering.assignment),
                "score": format_rat(rm.score),
                "lp_value": format_rat(rm.lp_value),
                "ratio": ratio,
            }
        )
    return out


def curve_csv_text(curve: PwlCurve) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["lambda_lo", "lambda_hi", "P", "N"])
    for p in curve.pieces:
        w.writerow([format_rat(p.lo), format_rat(p.hi), format_rat(p.line.P),
                    format_rat(p.line.N)])
    return buf.getvalue()


def write_curve_csv(curve: PwlCurve, path) -> None:
    atomic_write_text(path, curve_csv_text(curve))


def curve_samples(curve: PwlCurve, grid: int = 50) -> list:
    """(lambda, value) rows at piece endpoints plus a uniform grid."""
    if grid < 1:
        raise ValueError("grid must be at least 1")
    lo, hi = curve.domain_lo, curve.domain_hi
    pts = {lo, hi}
    pts.update(curve.breakpoints)
    step = Fraction(hi - lo, grid)
    pts.update(lo + i * step for i in range(grid + 1))
    return [(lam, curve.value_at(lam)) for lam in sorted(pts)]


def write_samples_csv(curve: PwlCurve, path, grid: int = 50) -> None:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["lambda", "value"])
    for lam, val in curve_samples(curve, grid):
        w.writerow([format_rat(lam), format_rat(val)])
    atomic_write_text(path, buf.getvalue())


def assignments_to_list(family) -> list:
    """Exact-curve clustering family as a plain list of assignment arrays."""
    return [list(c.assignment) for c in family]
