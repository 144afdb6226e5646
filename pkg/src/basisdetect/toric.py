"""Toric ideal of relations among monomials, and monoid membership.

Given the leading exponents alpha_1..alpha_s (columns of a nonnegative
integer matrix A), the relation ideal consists of all polynomials P in
y_1..y_s with P(x^alpha_1, ..., x^alpha_s) = 0.  It is generated by
binomials y^u - y^v with A u = A v; a generating set is computed by
eliminating the x-variables from <y_i - x^alpha_i> with a block order.

``solve_monomial_membership`` decides whether a monomial x^b lies in the
multiplicative monoid generated by the x^alpha_i, i.e. solves A v = b over
nonnegative integers by bounded depth-first search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import buchberger
from .polyring import Exponent, MonomialOrder, Polynomial, PolynomialRing


@dataclass(frozen=True)
class ExponentMatrix:
    """Nonnegative integer matrix stored by columns (one per generator)."""

    columns: tuple[Exponent, ...]

    def __init__(self, columns):
        cols = tuple(tuple(int(x) for x in c) for c in columns)
        if not cols:
            raise ValueError("matrix needs at least one column")
        if len({len(c) for c in cols}) != 1:
            raise ValueError("columns of mixed length")
        if any(x < 0 for c in cols for x in c):
            raise ValueError("entries must be nonnegative")
        object.__setattr__(self, "columns", cols)

    @property
    def nrows(self) -> int:
        return len(self.columns[0])

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def apply(self, v) -> Exponent:
        """The matrix-vector product A v as an exponent tuple."""
        out = [0] * self.nrows
        for vi, col in zip(v, self.columns):
            if vi:
                for r, a in enumerate(col):
                    out[r] += vi * a
        return tuple(out)


@dataclass(frozen=True)
class ToricBinomial:
    """A relation y^u - y^v with disjoint supports and A u = A v."""

    u: tuple[int, ...]
    v: tuple[int, ...]


class _EliminationOrder(MonomialOrder):
    """Block order: x-block dominates y-block, graded-lex inside each."""

    def __init__(self, nx: int):
        self.nx = nx

    def key(self, exponent: Exponent):
        x = exponent[: self.nx]
        y = exponent[self.nx :]
        return (sum(x), x, sum(y), y)


def _grlex_key(e) -> tuple:
    return (sum(e), e)


def toric_ideal_generators(matrix: ExponentMatrix) -> list[ToricBinomial]:
    """A finite binomial generating set of the relation ideal of A.

    Runs Buchberger on <y_i - x^alpha_i> under an x-eliminating block
    order and keeps the basis elements free of x-variables.  The output is
    a Groebner basis of the relation ideal, hence in particular a
    generating set; binomials are oriented with y^u the graded-lex lead.
    """
    n, s = matrix.nrows, matrix.ncols
    ring = PolynomialRing(
        tuple("x%d" % (i + 1) for i in range(n))
        + tuple("y%d" % (i + 1) for i in range(s))
    )
    gens = []
    for i, col in enumerate(matrix.columns):
        yexp = (0,) * n + tuple(1 if j == i else 0 for j in range(s))
        xexp = col + (0,) * s
        gens.append(Polynomial(ring, {yexp: 1, xexp: -1}))
    order = _EliminationOrder(n)
    out = []
    for g in buchberger(gens, order):
        exps = list(g.terms)
        if any(e[j] for e in exps for j in range(n)):
            continue
        if len(exps) != 2:
            raise AssertionError("non-binomial element in toric elimination")
        coeffs = sorted(g.terms.values())
        if coeffs != [-1, 1]:
            raise AssertionError("non-unimodular binomial coefficients")
        first, second = (e[n:] for e in sorted(exps, key=_grlex_key, reverse=True))
        common = tuple(min(a, b) for a, b in zip(first, second))
        u = tuple(a - c for a, c in zip(first, common))
        v = tuple(b - c for b, c in zip(second, common))
        if matrix.apply(u) != matrix.apply(v):
            raise AssertionError("elimination produced a non-relation")
        out.append(ToricBinomial(u, v))
    unique = sorted(set(out), key=lambda b: (_grlex_key(b.u), _grlex_key(b.v)))
    return unique


def relations_up_to_degree(matrix: ExponentMatrix, max_degree: int) -> list[ToricBinomial]:
    """Binomial relations y^u - y^v with both sides of degree <= max_degree.

    Found by hashing column multisets on their exponent sums; generally NOT
    a generating set of the relation ideal, but every returned pair is a
    genuine relation, which makes this useful as a cheap failure witness
    scan before the full elimination.
    """
    s = matrix.ncols
    groups: dict = {}
    out = []
    multisets: list[tuple[int, ...]] = []

    def extend(base, start, size):
        multisets.append(base)
        if size == max_degree:
            return
        for i in range(start, s):
            bumped = list(base)
            bumped[i] += 1
            extend(tuple(bumped), i, size + 1)

    extend((0,) * s, 0, 0)
    for u in multisets:
        if not any(u):
            continue
        key = matrix.apply(u)
        for v in groups.get(key, ()):
            common = tuple(min(a, b) for a, b in zip(u, v))
            uu = tuple(a - c for a, c in zip(u, common))
            vv = tuple(b - c for b, c in zip(v, common))
            if uu != vv:
                first, second = sorted((uu, vv), key=_grlex_key, reverse=True)
                out.append(ToricBinomial(first, second))
        groups.setdefault(key, []).append(u)
    return sorted(set(out), key=lambda b: (_grlex_key(b.u), _grlex_key(b.v)))


def solve_monomial_membership(matrix: ExponentMatrix, target) -> tuple[int, ...] | None:
    """Some v >= 0 with A v = target, or None when no solution exists.

    Depth-first search over the columns in decreasing total-degree order,
    trying large multiplicities first; branches whose residual goes
    negative, or whose positive residual rows cannot be covered by the
    remaining columns, are pruned.
    """
    b = tuple(int(x) for x in target)
    if len(b) != matrix.nrows:
        raise ValueError("target length differs from row count")
    if any(x < 0 for x in b):
        raise ValueError("target entries must be nonnegative")
    s = matrix.ncols
    cols = sorted(range(s), key=lambda j: (-sum(matrix.columns[j]), j))
    # rows that can still be decreased by columns from position k onward
    coverage = [0] * (s + 1)
    for k in range(s - 1, -1, -1):
        mask = coverage[k + 1]
        for r, a in enumerate(matrix.columns[cols[k]]):
            if a:
                mask |= 1 << r
        coverage[k] = mask

    solution = [0] * s

    def search(k: int, residual: tuple[int, ...]) -> bool:
        if all(x == 0 for x in residual):
            return True
        if k == s:
            return False
        mask = coverage[k]
        if any(x and not (mask >> r) & 1 for r, x in enumerate(residual)):
            return False
        col = matrix.columns[cols[k]]
        if all(a == 0 for a in col):
            return search(k + 1, residual)
        bound = min(x // a for x, a in zip(residual, col) if a)
        for value in range(bound, -1, -1):
            nxt = tuple(x - value * a for x, a in zip(residual, col))
            solution[cols[k]] = value
            if search(k + 1, nxt):
                return True
        solution[cols[k]] = 0
        return False

    if search(0, b):
        return tuple(solution)
    return None
