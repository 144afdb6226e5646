"""Enumeration of term-order equivalence classes for a polynomial set.

Two nonnegative weight vectors are equivalent for a set F when they select
the same leading exponent in every member of F.  Each class corresponds to
a choice of one support exponent per polynomial (a leading tuple) whose
open selection cone meets the nonnegative orthant; we enumerate candidate
tuples and certify each with an exact LP that either produces an interior
integer weight or proves the cone empty.

Also provides lattice-polytope dimension and normalized volume, used for
ranking term orders by the geometry of their leading exponents.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import lp
from .polyring import Exponent, Polynomial, TermOrder, dot, normalize_weight

LeadingTuple = tuple[Exponent, ...]


@dataclass(frozen=True)
class OrderClass:
    """One equivalence class: chosen leading exponents plus a certificate.

    The weight strictly selects ``leads[i]`` over every other support
    exponent of the i-th polynomial, so the class semantics do not depend
    on the lex refinement.
    """

    leads: LeadingTuple
    weight: tuple[int, ...]

    def order(self) -> TermOrder:
        return TermOrder(self.weight)


def _check_system(polys: list[Polynomial]) -> None:
    if not polys:
        raise ValueError("empty polynomial list")
    base = polys[0].ring
    for f in polys:
        if f.ring != base:
            raise ValueError("polynomials belong to different rings")
        if f.is_zero():
            raise ValueError("zero polynomial in generator set")


def cone_feasibility(polys: list[Polynomial], leads) -> tuple[int, ...] | None:
    """Integer weight strictly selecting the given leading tuple, or None.

    Solves max epsilon s.t. <w, lead_i - u> >= epsilon for every competing
    support exponent u, 0 <= w_j <= 1, in exact rational arithmetic; the
    system is homogeneous in w so the unit box loses no generality.  A
    positive optimum yields an interior point, which is cleared to a
    primitive integer vector.
    """
    _check_system(polys)
    leads = tuple(tuple(e) for e in leads)
    if len(leads) != len(polys):
        raise ValueError("leading tuple length differs from polynomial count")
    n = polys[0].ring.nvars
    rows = []
    for f, lead in zip(polys, leads):
        if lead not in f.terms:
            raise ValueError("%r is not in the support of %r" % (lead, f))
        for u in f.terms:
            if u != lead:
                # <w, u - lead> + eps <= 0
                rows.append([u[j] - lead[j] for j in range(n)] + [1])
    if not rows:
        return (1,) * n
    rhs = [0] * len(rows)
    for j in range(n):
        box = [0] * (n + 1)
        box[j] = 1
        rows.append(box)
        rhs.append(1)
    objective = [0] * n + [1]
    value, point = lp.maximize(objective, rows, rhs)
    if value <= 0:
        return None
    denom = lcm(*(x.denominator for x in point[:n]))
    return normalize_weight(int(x * denom) for x in point[:n])


def leading_tuple(polys: list[Polynomial], order: TermOrder) -> LeadingTuple:
    """Leading exponents of each polynomial under a refined total order."""
    return tuple(order.leading_exponent(f) for f in polys)


def extract_weight_vectors(polys: list[Polynomial]) -> list[OrderClass]:
    """All term-order equivalence classes of F, each with a certified weight.

    Per-polynomial choices that are never weight-maximal are pruned with a
    single-polynomial feasibility test before the Cartesian product is
    scanned.  Output is sorted by leading tuple and duplicate-free.
    """
    _check_system(polys)
    candidates = []
    for f in polys:
        exps = sorted(f.terms)
        if len(exps) == 1:
            candidates.append(exps)
            continue
        candidates.append(
            [u for u in exps if cone_feasibility([f], (u,)) is not None]
        )
    classes = []
    for combo in itertools.product(*candidates):
        weight = cone_feasibility(polys, combo)
        if weight is not None:
            classes.append(OrderClass(tuple(combo), weight))
    classes.sort(key=lambda c: c.leads)
    return classes


# ---------------------------------------------------------------------------
# lattice polytopes: dimension and normalized volume


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of a finite nonempty set of lattice points."""

    points: tuple[Exponent, ...]

    def __init__(self, points):
        pts = tuple(sorted({tuple(int(x) for x in p) for p in points}))
        if not pts:
            raise ValueError("empty point set")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("points of mixed dimension")
        object.__setattr__(self, "points", pts)


def _sub(p: Exponent, q: Exponent) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(p, q))


def _hermite_basis(rows: list) -> list[list[int]]:
    """Echelon basis (positive pivots) of the lattice generated by the rows."""
    mat = [list(r) for r in rows]
    m = len(mat)
    if m == 0:
        return []
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        if r >= m:
            break
        piv = None
        for i in range(r, m):
            if mat[i][c] == 0:
                continue
            if piv is None:
                piv = i
                continue
            while mat[i][c] != 0:
                q = mat[piv][c] // mat[i][c]
                mat[piv] = [a - q * b for a, b in zip(mat[piv], mat[i])]
                mat[piv], mat[i] = mat[i], mat[piv]
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        if mat[r][c] < 0:
            mat[r] = [-a for a in mat[r]]
        r += 1
    return mat[:r]


def _pivot_columns(basis: list[list[int]]) -> list[int]:
    return [next(j for j, a in enumerate(row) if a != 0) for row in basis]


def _lattice_coordinates(basis, pivots, vector) -> tuple[int, ...]:
    """Express a lattice member in the echelon basis (exact integer coords)."""
    v = list(vector)
    coords = []
    for row, p in zip(basis, pivots):
        q, rem = divmod(v[p], row[p])
        if rem:
            raise ValueError("vector outside the lattice")
        v = [a - q * b for a, b in zip(v, row)]
        coords.append(q)
    if any(v):
        raise ValueError("vector outside the lattice")
    return tuple(coords)


def _det(rows: list) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def _primitive_normal(edge_rows: list, dim: int) -> tuple[int, ...] | None:
    """Primitive integer normal of the hyperplane spanned by the rows.

    Returns None unless the rows span a space of dimension exactly dim - 1.
    """
    rows = [[Fraction(x) for x in row] for row in edge_rows]
    pivots = {}
    for row in rows:
        for col in pivots:
            if row[col]:
                factor = row[col] / pivots[col][col]
                row[:] = [a - factor * b for a, b in zip(row, pivots[col])]
        lead = next((j for j, a in enumerate(row) if a), None)
        if lead is not None:
            pivots[lead] = row
    if len(pivots) != dim - 1:
        return None
    free = next(j for j in range(dim) if j not in pivots)
    normal = [Fraction(0)] * dim
    normal[free] = Fraction(1)
    for col in sorted(pivots, reverse=True):
        row = pivots[col]
        normal[col] = -sum(row[j] * normal[j] for j in range(col + 1, dim)) / row[col]
    denom = lcm(*(x.denominator for x in normal))
    ints = [int(x * denom) for x in normal]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _triangulate_hull(points: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Triangulation (as index tuples) of a full-dimensional hull.

    Facet hyperplanes are found by scanning point subsets, so this is meant
    for the small configurations arising from leading-exponent polytopes.
    """
    m = len(points)
    dim = len(points[0])
    if dim == 1:
        imin = min(range(m), key=lambda i: points[i])
        imax = max(range(m), key=lambda i: points[i])
        return [(imin, imax)]
    facets = {}
    for subset in itertools.combinations(range(m), dim):
        base = points[subset[0]]
        normal = _primitive_normal(
            [_sub(points[i], base) for i in subset[1:]], dim
        )
        if normal is None:
            continue
        level = dot(normal, base)
        values = [dot(normal, p) for p in points]
        if all(v <= level for v in values):
            pass
        elif all(v >= level for v in values):
            normal = tuple(-x for x in normal)
            level = -level
            values = [-v for v in values]
        else:
            continue
        facets[(normal, level)] = tuple(
            i for i, v in enumerate(values) if v == level
        )
    apex = min(range(m), key=lambda i: points[i])
    simplices = []
    for (normal, level), facet in sorted(facets.items()):
        if dot(normal, points[apex]) == level:
            continue
        base = points[facet[0]]
        fbasis = _hermite_basis([_sub(points[i], base) for i in facet])
        fpivots = _pivot_columns(fbasis)
        reduced = [
            _lattice_coordinates(fbasis, fpivots, _sub(points[i], base))
            for i in facet
        ]
        for simplex in _triangulate_hull(reduced):
            simplices.append((apex,) + tuple(facet[i] for i in simplex))
    return simplices


def polytope_dim(polytope: LatticePolytope) -> int:
    """Dimension of the affine hull of the lattice points."""
    pts = polytope.points
    edges = [_sub(p, pts[0]) for p in pts[1:]]
    return len(_hermite_basis(edges))


def normalized_volume(polytope: LatticePolytope) -> int:
    """d! times the Euclidean volume, measured in the spanned lattice.

    The points are translated so one vertex is the origin, rewritten in a
    basis of the lattice they generate, and the full-dimensional hull is
    fan-triangulated from a vertex; the result is the sum of |det| over the
    simplices.  A single point yields 1 by the empty-product convention.
    """
    pts = polytope.points
    origin = pts[0]
    edges = [_sub(p, origin) for p in pts[1:]]
    basis = _hermite_basis(edges)
    if not basis:
        return 1
    pivots = _pivot_columns(basis)
    reduced = [
        _lattice_coordinates(basis, pivots, _sub(p, origin)) for p in pts
    ]
    total = 0
    for simplex in _triangulate_hull(reduced):
        first = reduced[simplex[0]]
        total += abs(_det([_sub(reduced[i], first) for i in simplex[1:]]))
    return total
