"""Division, Buchberger's criterion and completion, Groebner-basis detection.

The detection entry points run over the term-order equivalence classes
produced by :mod:`basisdetect.orders`: the S-pair criterion is evaluated
once per class, with the class certificate weight refined to a total order.
The verdict is constant on each class, so any certificate gives the class
answer.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .orders import OrderClass, extract_weight_vectors
from .polyring import Exponent, MonomialOrder, Polynomial, TermOrder


@dataclass
class DivisionResult:
    quotients: list[Polynomial]
    remainder: Polynomial


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Exponent, b: Exponent) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def normal_form(
    f: Polynomial, divisors: list[Polynomial], order: MonomialOrder
) -> DivisionResult:
    """Multivariate division of f by an ordered list of divisors.

    Deterministic: at each step the first divisor whose leading exponent
    divides the current leading exponent is used; otherwise the leading
    term moves to the remainder.  Satisfies f = sum(q_i g_i) + r with no
    remainder term divisible by any leading exponent of the divisors.
    """
    ring = f.ring
    info = []
    for g in divisors:
        if g.is_zero():
            raise ValueError("zero divisor")
        info.append(order.leading_term(g))
    quotients = [dict() for _ in divisors]
    remainder: dict = {}
    work = dict(f.terms)
    while work:
        lead = max(work, key=order.key)
        coeff = work[lead]
        for i, (gexp, gcoeff) in enumerate(info):
            if _divides(gexp, lead):
                shift = tuple(a - b for a, b in zip(lead, gexp))
                factor = coeff / gcoeff
                quotients[i][shift] = quotients[i].get(shift, Fraction(0)) + factor
                for e, c in divisors[i].terms.items():
                    target = tuple(a + b for a, b in zip(shift, e))
                    acc = work.get(target, Fraction(0)) - factor * c
                    if acc:
                        work[target] = acc
                    else:
                        work.pop(target, None)
                break
        else:
            remainder[lead] = coeff
            del work[lead]
    return DivisionResult(
        [Polynomial(ring, q) for q in quotients], Polynomial(ring, remainder)
    )


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """Classical S-pair: both polynomials are scaled so the lcm of their
    leading monomials cancels."""
    fexp, fcoeff = order.leading_term(f)
    gexp, gcoeff = order.leading_term(g)
    lcm_exp = _exp_lcm(fexp, gexp)
    fshift = tuple(a - b for a, b in zip(lcm_exp, fexp))
    gshift = tuple(a - b for a, b in zip(lcm_exp, gexp))
    left = f.ring.monomial(fshift, Fraction(1) / fcoeff) * f
    right = f.ring.monomial(gshift, Fraction(1) / gcoeff) * g
    return left - right


def is_groebner_basis(polys: list[Polynomial], order: MonomialOrder) -> bool:
    """Buchberger's S-pair criterion for a fixed total order.

    Pairs with coprime leading exponents are skipped (product criterion).
    """
    if not polys or any(f.is_zero() for f in polys):
        raise ValueError("generators must be nonzero")
    leads = [order.leading_exponent(f) for f in polys]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if _coprime(leads[i], leads[j]):
                continue
            spoly = s_polynomial(polys[i], polys[j], order)
            if spoly.is_zero():
                continue
            if not normal_form(spoly, polys, order).remainder.is_zero():
                return False
    return True


def buchberger(polys: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """A reduced Groebner basis of the ideal generated by the input.

    Plain Buchberger with the product (coprime-lead) criterion; the pair
    queue is keyed by lcm total degree then lcm, so output is deterministic.
    The final basis is inter-reduced and monic, sorted by leading exponent.
    """
    if not polys or any(f.is_zero() for f in polys):
        raise ValueError("generators must be nonzero")
    basis = list(polys)
    leads = [order.leading_exponent(f) for f in basis]
    queue: list = []
    for i in range(len(basis)):
        for j in range(i):
            _push_pair(queue, leads, j, i)
    while queue:
        _, _, i, j = heapq.heappop(queue)
        if _coprime(leads[i], leads[j]):
            continue
        spoly = s_polynomial(basis[i], basis[j], order)
        if spoly.is_zero():
            continue
        remainder = normal_form(spoly, basis, order).remainder
        if remainder.is_zero():
            continue
        remainder = remainder.scale(1 / order.leading_coefficient(remainder))
        basis.append(remainder)
        leads.append(order.leading_exponent(remainder))
        new = len(basis) - 1
        for k in range(new):
            _push_pair(queue, leads, k, new)
    return interreduce(basis, order)


def _push_pair(queue, leads, i, j):
    lcm_exp = _exp_lcm(leads[i], leads[j])
    heapq.heappush(queue, (sum(lcm_exp), lcm_exp, i, j))


def interreduce(polys: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Minimalize leading terms, then fully reduce tails; monic output."""
    items = sorted(
        ((order.leading_exponent(g), g) for g in polys),
        key=lambda t: order.key(t[0]),
    )
    minimal: list = []
    for exp, g in items:
        if not any(_divides(kept, exp) for kept, _ in minimal):
            minimal.append((exp, g))
    reduced = []
    polys_only = [g for _, g in minimal]
    for idx, (exp, g) in enumerate(minimal):
        others = polys_only[:idx] + polys_only[idx + 1 :]
        if others:
            g = normal_form(g, others, order).remainder
        g = g.scale(1 / order.leading_coefficient(g))
        reduced.append(g)
    reduced.sort(key=lambda g: order.key(order.leading_exponent(g)))
    return reduced


def weight_vectors_realizing_gb(polys: list[Polynomial]) -> list[OrderClass]:
    """Classes of term orders for which the input is a Groebner basis."""
    return [
        cls
        for cls in extract_weight_vectors(polys)
        if is_groebner_basis(polys, TermOrder(cls.weight))
    ]


def is_universal_gb(polys: list[Polynomial]) -> bool:
    """True when the set is a Groebner basis for every term order."""
    return all(
        is_groebner_basis(polys, TermOrder(cls.weight))
        for cls in extract_weight_vectors(polys)
    )
