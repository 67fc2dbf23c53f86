"""Moduli dimensions via the rank of the polynomial constraint map.

The set of complex structures sits inside R^36 as the zero set of 126
polynomial components: the 36 entries of J^2 + 1 and the 90 torsion
projections ij|k.  (Some tabulations count the codomain as R^81 x R^36;
duplicated or dependent rows cannot change any rank, so the full 90 are
kept.)

The Jacobian is assembled exactly (symbolic partials, rational
evaluation); only the final rank decision uses floating singular values,
guarded by a two-threshold stability check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence

import numpy as np

from .acs import AlmostComplexStructure
from .catalogue import AlgebraEntry, JFamily
from .exactnum import MultiPoly, rational_str
from .expr import diff, evaluate, parse
from .liecore import LieAlgebra

DEFAULT_TOL = 1e-9


class RankUnstable(RuntimeError):
    """Rank differs between tol and 10*tol; resample the point."""


def _entry_vars() -> List[str]:
    return [f"j{k}{j}" for k in range(1, 7) for j in range(1, 7)]


def constraint_polys(L: LieAlgebra) -> List[MultiPoly]:
    """The 126 components of the constraint map, cached on the algebra."""
    cached = getattr(L, "_constraint_polys", None)
    if cached is not None:
        return cached
    n = L.dim
    cols = [[MultiPoly.var(f"j{k}{j}") for k in range(1, n + 1)]
            for j in range(1, n + 1)]  # cols[j-1] = J x_{j}

    def apply_J(v):
        out = [MultiPoly.const(0)] * n
        for j in range(n):
            if isinstance(v[j], MultiPoly) and v[j].is_zero():
                continue
            for k in range(n):
                out[k] = out[k] + cols[j][k] * v[j]
        return out

    polys: List[MultiPoly] = []
    # J^2 + 1 entries
    for j in range(1, n + 1):
        sq = apply_J(cols[j - 1])
        for k in range(n):
            p = sq[k]
            if k == j - 1:
                p = p + 1
            polys.append(MultiPoly.coerce(p))
    # torsion projections ij|k
    basis = [[Fraction(1) if t == s else Fraction(0) for t in range(n)]
             for s in range(n)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ei, ej = basis[i - 1], basis[j - 1]
            t1 = L.bracket(cols[i - 1], cols[j - 1])
            t2 = L.bracket(ei, ej)
            t3 = apply_J(L.bracket(cols[i - 1], ej))
            t4 = apply_J(L.bracket(ei, cols[j - 1]))
            for k in range(n):
                polys.append(MultiPoly.coerce(t1[k] - t2[k] - t3[k] - t4[k]))
    L._constraint_polys = polys
    return polys


def _point_env(J: AlmostComplexStructure) -> Dict[str, Fraction]:
    return {f"j{k}{j}": J.m[k - 1][j - 1]
            for k in range(1, J.dim + 1) for j in range(1, J.dim + 1)}


def constraint_eval(L: LieAlgebra, J: AlmostComplexStructure) -> List[Fraction]:
    """Exact values of all 126 constraint components at J."""
    env = _point_env(J)
    out = []
    for p in constraint_polys(L):
        v = p.eval(env)
        assert v.im == 0
        out.append(v.re)
    return out


def _jacobian_polys(L: LieAlgebra) -> List[List[MultiPoly]]:
    cached = getattr(L, "_constraint_jacobian", None)
    if cached is not None:
        return cached
    names = _entry_vars()
    out = [[p.partial(v) for v in names] for p in constraint_polys(L)]
    L._constraint_jacobian = out
    return out


def jacobian_matrix(L: LieAlgebra, J: AlmostComplexStructure) -> List[List[Fraction]]:
    """Exact 126 x 36 Jacobian of the constraint map at J."""
    env = _point_env(J)
    rows = []
    for row in _jacobian_polys(L):
        vals = []
        for p in row:
            v = p.eval(env)
            assert v.im == 0
            vals.append(v.re)
        rows.append(vals)
    return rows


def _svd_rank(rows: Sequence[Sequence[Fraction]], tol: float) -> int:
    A = np.array([[float(x) for x in r] for r in rows], dtype=float)
    if not A.any():
        return 0
    s = np.linalg.svd(A, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def jacobian_rank(L: LieAlgebra, J: AlmostComplexStructure,
                  tol: float = DEFAULT_TOL) -> int:
    """Rank of the exact Jacobian, decided by thresholded singular values.

    Raises RankUnstable when the decision flips between tol and 10*tol.
    """
    rows = jacobian_matrix(L, J)
    r1 = _svd_rank(rows, tol)
    r2 = _svd_rank(rows, tol * 10)
    if r1 != r2:
        raise RankUnstable(f"rank {r1} at tol vs {r2} at 10*tol")
    return r1


def tangent_dim(L: LieAlgebra, J: AlmostComplexStructure,
                tol: float = DEFAULT_TOL) -> int:
    if any(x != 0 for x in constraint_eval(L, J)):
        raise ValueError("J is not in the zero set of the constraint map")
    return 36 - jacobian_rank(L, J, tol)


def _inline_defs(family: JFamily) -> List[str]:
    """Entry expressions with dependent definitions textually inlined."""
    import re
    defs = dict()
    for nm, e in family.defs:
        ee = e
        for k, v in defs.items():
            ee = re.sub(rf"\b{k}\b", f"({v})", ee)
        defs[nm] = ee
    out = []
    for r in family.entries:
        for cell in r:
            ee = cell
            for k, v in defs.items():
                ee = re.sub(rf"\b{k}\b", f"({v})", ee)
            out.append(ee)
    return out


def family_rank(family: JFamily, values: Mapping[str, Fraction],
                tol: float = DEFAULT_TOL) -> int:
    """Rank of d(entries)/d(params) at an admissible point (exact partials)."""
    params = family.continuous_params()
    env = {k: Fraction(v) for k, v in values.items()}
    rows = []
    for cell in _inline_defs(family):
        ast = parse(cell)
        row = []
        for p in params:
            v = evaluate(diff(ast, p), env)
            row.append(v.re if hasattr(v, "re") else Fraction(v))
        rows.append(row)
    return _svd_rank(rows, tol)


def dimension_report(entry: AlgebraEntry, family: JFamily | None = None,
                     samples: int = 10, tol: float = DEFAULT_TOL,
                     seed: int = 0, max_resamples: int = 1) -> Dict:
    """Sampled tangent dimensions of the moduli set along a family."""
    fam = family or entry.families[0]
    rng = random.Random(seed)
    L = entry.algebra
    out = []
    resamples = 0
    for _ in range(samples):
        while True:
            values = fam.random_admissible(rng)
            J = fam.instantiate(values)
            try:
                dim = tangent_dim(L, J, tol)
            except RankUnstable:
                resamples += 1
                if resamples > max_resamples:
                    raise
                continue
            break
        prank = family_rank(fam, values, tol)
        out.append({"params": {k: rational_str(v) for k, v in sorted(values.items())},
                    "tangent_dim": dim, "family_rank": prank})
    dims = [r["tangent_dim"] for r in out]
    return {
        "algebra": entry.name,
        "family": fam.name,
        "expected_dim": entry.expected_dim,
        "tangent_dims": dims,
        "n_free_params": len(fam.continuous_params()),
        "resamples": resamples,
        "agree": sum(1 for d in dims if d == entry.expected_dim),
        "samples": out,
    }
