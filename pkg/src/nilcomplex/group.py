"""The simply connected group in second-kind canonical coordinates.

Multiplication is normal ordering: a product of exponentials is rewritten
into the canonical form exp(c1 x_1) ... exp(c6 x_6) by repeatedly applying
the swap rule

    e^X e^Y = e^{C(X,Y)} e^Y e^X,
    C(X,Y) = [X,Y] + 1/2([X,[X,Y]] + [Y,[X,Y]])
           + 1/6([X,[X,[X,Y]]] + [Y,[Y,[X,Y]]]) + 1/4 [X,[Y,[X,Y]]],

which is exact for nilpotency class <= 4.  All catalogue algebras have a
triangular basis (brackets raise the basis index) whose tail span(x_3..x_6)
is abelian, so every swap correction splits exactly into single-generator
factors and the bubbling terminates.

Coordinates may be Fractions or MultiPoly values; the left-invariant
fields are obtained by multiplying with a formal exp(t x_j) and taking the
exact t-linear part.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .exactnum import MultiPoly
from .liecore import LieAlgebra

COORDS = ("x1", "y1", "x2", "y2", "x3", "y3")

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)
QUARTER = Fraction(1, 4)


class ClassTooHigh(ValueError):
    """Nilpotency class exceeds 4; the truncated swap rule is not exact."""


def _is_zero(x) -> bool:
    if isinstance(x, MultiPoly):
        return x.is_zero()
    return x == 0


def _check_class(L: LieAlgebra) -> None:
    cls = getattr(L, "_nilpotency_class", None)
    if cls is None:
        cls = L.nilpotency_class()
        L._nilpotency_class = cls
    if cls > 4:
        raise ClassTooHigh(f"class {cls} > 4")


def _abelian_tail_start(L: LieAlgebra) -> int:
    """Smallest t with span(x_t .. x_dim) abelian (cached)."""
    t = getattr(L, "_abelian_tail", None)
    if t is None:
        t = 1
        for (i, j) in L.table:
            t = max(t, i + 1)
        # no bracket has both entries >= t, so span(x_t..x_6) is abelian
        for (i, j) in L.table:
            assert not (i >= t and j >= t)
        L._abelian_tail = t
    return t


def _triangular_check(L: LieAlgebra) -> None:
    if getattr(L, "_triangular_ok", False):
        return
    for (i, j), row in L.table.items():
        for k in row:
            if k <= j:
                raise ValueError("basis is not triangular; normal ordering unsupported")
    L._triangular_ok = True


def commutator_correction(L: LieAlgebra, X: Sequence, Y: Sequence) -> List:
    """C(X, Y) in the swap rule e^X e^Y = e^C e^Y e^X (exact for class <= 4)."""
    _check_class(L)
    xy = L.bracket(X, Y)
    xxy = L.bracket(X, xy)
    yxy = L.bracket(Y, xy)
    xxxy = L.bracket(X, xxy)
    yyxy = L.bracket(Y, yxy)
    xyxy = L.bracket(X, yxy)
    out = []
    for k in range(L.dim):
        out.append(xy[k]
                   + (xxy[k] + yxy[k]) * HALF
                   + (xxxy[k] + yyxy[k]) * SIXTH
                   + xyxy[k] * QUARTER)
    return out


def _basis_vector(L: LieAlgebra, g: int, c):
    v = [c * 0] * L.dim
    v[g - 1] = c
    return v


def _push_single(L: LieAlgebra, g: int, c, coords: list, start: int) -> None:
    """Normal-order e^{c x_g} * suffix(start..dim) into coords, in place."""
    if _is_zero(c):
        return
    corrections = []
    for k in range(start, g):
        r = coords[k - 1]
        if _is_zero(r):
            continue
        C = commutator_correction(L, _basis_vector(L, g, c), _basis_vector(L, k, r))
        support = [m + 1 for m in range(L.dim) if not _is_zero(C[m])]
        if support:
            # progress: corrections live strictly deeper in the flag/central series
            assert min(support) > max(g, k)
            corrections.append((k, C))
    coords[g - 1] = coords[g - 1] + c
    for k, C in reversed(corrections):
        _push_vector(L, C, coords, start=k)


def _push_vector(L: LieAlgebra, v: Sequence, coords: list, start: int = 1) -> None:
    support = [m + 1 for m in range(L.dim) if not _is_zero(v[m])]
    if not support:
        return
    if len(support) == 1:
        g = support[0]
        _push_single(L, g, v[g - 1], coords, start)
        return
    if min(support) >= _abelian_tail_start(L):
        # commuting components: e^v splits exactly into single factors
        for g in sorted(support, reverse=True):
            _push_single(L, g, v[g - 1], coords, start)
        return
    # general element: convert to second-kind coordinates first
    for g, c in zip(range(L.dim, 0, -1), reversed(exp_coords(L, v))):
        _push_single(L, g, c, coords, start)


def normal_order(L: LieAlgebra, word: Sequence[Sequence]) -> List:
    """Second-kind coordinates of the product of exponentials exp(v) in word."""
    _check_class(L)
    _triangular_check(L)
    zero = Fraction(0)
    for v in word:
        for c in v:
            zero = c * 0
            break
        break
    coords = [zero] * L.dim
    for v in reversed(list(word)):
        _push_vector(L, v, coords)
    return coords


def multiply(L: LieAlgebra, a: Sequence, x: Sequence) -> List:
    """Product a*x in second-kind coordinates."""
    _check_class(L)
    _triangular_check(L)
    if len(a) != L.dim or len(x) != L.dim:
        raise ValueError("coordinate tuples must match the algebra dimension")
    coords = list(x)
    for g in range(L.dim, 0, -1):
        _push_single(L, g, a[g - 1], coords, start=1)
    return coords


def inverse(L: LieAlgebra, a: Sequence) -> List:
    """Coordinates of a^{-1}: normal ordering of exp(-c6 x6)...exp(-c1 x1)."""
    word = []
    for g in range(L.dim, 0, -1):
        word.append(_basis_vector(L, g, -a[g - 1]))
    return normal_order(L, word)


def left_invariant_fields(L: LieAlgebra) -> List[List[MultiPoly]]:
    """fields[j-1][m] = coefficient polynomial of d/d(coord_m) in X_j (cached)."""
    cached = getattr(L, "_liv_fields", None)
    if cached is not None:
        return cached
    _check_class(L)
    formal = [MultiPoly.var(c) for c in COORDS]
    t = MultiPoly.var("t")
    fields = []
    for j in range(1, L.dim + 1):
        x = [MultiPoly.const(0)] * L.dim
        x[j - 1] = t
        prod = multiply(L, formal, x)
        row = []
        for m in range(L.dim):
            p = MultiPoly.coerce(prod[m])
            # sanity: setting t = 0 must give back the base point
            assert p.coefficient_of("t", 0) == formal[m]
            row.append(p.coefficient_of("t", 1))
        fields.append(row)
    L._liv_fields = fields
    return fields


def left_invariant_field(L: LieAlgebra, j: int) -> List[MultiPoly]:
    return left_invariant_fields(L)[j - 1]


def _integrate_t(p: MultiPoly) -> MultiPoly:
    """Exact antiderivative in the variable t with zero constant term."""
    if "t" not in p.vars:
        return p * MultiPoly.var("t")
    ti = p.vars.index("t")
    terms = {}
    for e, c in p.terms.items():
        ee = list(e)
        n = ee[ti]
        ee[ti] = n + 1
        terms[tuple(ee)] = c * Fraction(1, n + 1)
    return MultiPoly(p.vars, terms)


def exp_coords(L: LieAlgebra, v: Sequence) -> List:
    """Second-kind coordinates of exp(v) for a general Lie algebra element.

    Solves the flow c'(t) = sum_k v_k X_k(c(t)), c(0) = 0 exactly in Q[t];
    the triangular basis makes the system solvable coordinate by coordinate.
    """
    fields = left_invariant_fields(L)
    sol: List[MultiPoly] = []
    for m in range(L.dim):
        rhs = MultiPoly.const(0)
        env = {COORDS[j]: sol[j] for j in range(m)}
        for k in range(L.dim):
            if _is_zero(v[k]):
                continue
            p = fields[k][m]
            if not p.used_vars() - {"t"} <= set(COORDS[:m]):
                raise ValueError("field coefficients are not triangular")
            rhs = rhs + MultiPoly.coerce(p.eval(env)) * v[k]
        sol.append(_integrate_t(MultiPoly.coerce(rhs)))
    one = {"t": Fraction(1)}
    out = []
    for m in range(L.dim):
        val = sol[m].eval(one)
        out.append(val)
    return out


# -- M5: natural coordinates on the complex Heisenberg group ---------------


def m5_matrix_multiply(a: Sequence, x: Sequence) -> List:
    """Product of unitriangular matrices [[1, z1, z3], [0, 1, z2], [0, 0, 1]].

    Coordinates are (x1, y1, x2, y2, x3, y3) with z_k = x_k + i y_k; works
    for Fraction or MultiPoly coordinates (real/imaginary parts carried
    separately).
    """
    a1, b1, a2, b2, a3, b3 = a
    c1, d1, c2, d2, c3, d3 = x
    # z3' = z3a + z3x + z1a * z2x
    re = a3 + c3 + a1 * c2 - b1 * d2
    im = b3 + d3 + a1 * d2 + b1 * c2
    return [a1 + c1, b1 + d1, a2 + c2, b2 + d2, re, im]


def m5_natural_fields() -> List[List[MultiPoly]]:
    """Left-invariant fields of the natural chart, derived from the model."""
    formal = [MultiPoly.var(c) for c in COORDS]
    t = MultiPoly.var("t")
    zero = MultiPoly.const(0)
    gens = [
        [t, zero, zero, zero, zero, zero],       # exp(t x1)
        [zero, -t, zero, zero, zero, zero],      # exp(t x2)
        [zero, zero, t, zero, zero, zero],       # exp(t x3)
        [zero, zero, zero, t, zero, zero],       # exp(t x4)
        [zero, zero, zero, zero, t, zero],       # exp(t x5)
        [zero, zero, zero, zero, zero, t],       # exp(t x6)
    ]
    fields = []
    for g in gens:
        prod = m5_matrix_multiply(formal, g)
        fields.append([MultiPoly.coerce(p).coefficient_of("t", 1) for p in prod])
    return fields


def m5_natural_to_word(coords: Sequence):
    """Natural coordinates as a two-factor group word (for normal ordering)."""
    x1, y1, x2, y2, x3, y3 = coords
    zero = x1 * 0
    upper = [zero, zero, x2, y2, x3, y3]
    lower = [x1, -y1, zero, zero, zero, zero]
    return [upper, lower]
