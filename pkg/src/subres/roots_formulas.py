"""Subresultants straight from the roots and multiplicities.

Three determinant shapes give the order-t subresultant of the monic
polynomials behind two root sets A and B (total multiplicities d <= e):

- ``compact``: (d+1) rows; a confluent Vandermonde block of A bordered by
  the column (1, x, ..., x^t), on top of a Wronskian block of g over A.
- ``block``: (d+e+1) rows pairing Vandermonde blocks of A and B with the
  same border column.
- ``wronskian-full``: (d+e) rows; a Wronskian block of (x - z) over A on
  top of paired Vandermonde blocks.

The variable x rides inside the scalar domain as a reserved parameter and
the determinant is normalized by the closed-form Vandermonde determinants,
a division that is exact by construction.

Two closed-form specializations avoid determinants entirely: the order
d-1 subresultant is the Hermite interpolant of g on A, and the order-1
subresultant is an explicit weighted sum over the roots.
"""

from __future__ import annotations

from math import comb

from .combinat import compositions
from .confluent import (
    hermite_interpolate,
    vandermonde_confluent,
    vandermonde_det_closed,
    wronskian,
)
from .errors import DomainError
from .matrix import ExactMatrix, det_exact
from .rootsets import MultiRootSet, poly_from_roots
from .scalar import ParamPoly, Rat, Scalar, param
from .subresultants import _check_t
from .unipoly import UniPoly, taylor_coeff, unipoly_from_scalar

X_NAME = "x"

VARIANTS = ("compact", "block", "wronskian-full")


def _x_border(t: int) -> list:
    x = param(X_NAME)
    return [x**k for k in range(t + 1)]


def _forbid_x(a: MultiRootSet) -> None:
    for root in a.roots:
        if isinstance(root, ParamPoly) and X_NAME in root.parameters():
            raise DomainError("the parameter name %r is reserved for the main variable" % X_NAME)


def _as_unipoly(s: Scalar) -> UniPoly:
    return unipoly_from_scalar(s, X_NAME)


def sres_roots(a: MultiRootSet, b: MultiRootSet, t: int, variant: str = "compact") -> UniPoly:
    """Order-t subresultant of the monic polynomials with roots A and B."""
    if variant not in VARIANTS:
        raise DomainError("unknown variant %r; pick one of %s" % (variant, ", ".join(VARIANTS)))
    _forbid_x(a)
    _forbid_x(b)
    d, e = a.total, b.total
    _check_t(d, e, t)
    if variant == "compact":
        return _sres_compact(a, b, t)
    if variant == "block":
        return _sres_block(a, b, t)
    return _sres_wronskian_full(a, b, t)


def _sres_compact(a: MultiRootSet, b: MultiRootSet, t: int) -> UniPoly:
    d = a.total
    g = poly_from_roots(b)
    top = vandermonde_confluent(a, t + 1).rows
    bottom = wronskian(g, a, d - t).rows
    border = _x_border(t)
    rows = [row + [border[k]] for k, row in enumerate(top)]
    rows += [row + [Rat(0)] for row in bottom]
    det = det_exact(ExactMatrix(rows))
    det = _sdiv(det, vandermonde_det_closed(a))
    if (d - t) % 2:
        det = -det
    return _as_unipoly(det)


def _sres_block(a: MultiRootSet, b: MultiRootSet, t: int) -> UniPoly:
    d, e = a.total, b.total
    u = d + e - t
    va_top = vandermonde_confluent(a, t + 1).rows
    va = vandermonde_confluent(a, u).rows
    vb = vandermonde_confluent(b, u).rows
    border = _x_border(t)
    zero_b = [Rat(0)] * e
    rows = [row + zero_b + [border[k]] for k, row in enumerate(va_top)]
    rows += [ra + rb + [Rat(0)] for ra, rb in zip(va, vb)]
    det = det_exact(ExactMatrix(rows))
    det = _sdiv(det, vandermonde_det_closed(a) * vandermonde_det_closed(b))
    c = max(e % 2, (d - t) % 2)
    if c:
        det = -det
    return _as_unipoly(det)


def _sres_wronskian_full(a: MultiRootSet, b: MultiRootSet, t: int) -> UniPoly:
    d, e = a.total, b.total
    u = d + e - t
    h = UniPoly([param(X_NAME), -1])
    w = wronskian(h, a, t).rows
    va = vandermonde_confluent(a, u).rows
    vb = vandermonde_confluent(b, u).rows
    zero_b = [Rat(0)] * e
    rows = [row + zero_b for row in w]
    rows += [ra + rb for ra, rb in zip(va, vb)]
    det = det_exact(ExactMatrix(rows))
    det = _sdiv(det, vandermonde_det_closed(a) * vandermonde_det_closed(b))
    if ((d - t) * e) % 2:
        det = -det
    return _as_unipoly(det)


def _sdiv(num: Scalar, den: Scalar) -> Scalar:
    if isinstance(num, ParamPoly) or isinstance(den, ParamPoly):
        if not isinstance(num, ParamPoly):
            num = ParamPoly.constant(num)
        return num / den
    return num / den


def sres_dm1_hermite(a: MultiRootSet, b: MultiRootSet) -> UniPoly:
    """Order d-1 subresultant: the Hermite interpolant of g on A.

    Needs d <= e; with a single root this is the Taylor expansion of g
    at that root truncated below order d.
    """
    d, e = a.total, b.total
    if d > e:
        raise DomainError("need total multiplicity of A at most that of B (d <= e)")
    g = poly_from_roots(b)
    data = {}
    for i, (alpha, d_i) in enumerate(a, start=1):
        for j in range(d_i):
            data[(i, j)] = taylor_coeff(g, alpha, j)
    return hermite_interpolate(a, data)


def sres_one(a: MultiRootSet, b: MultiRootSet) -> UniPoly:
    """Order-1 subresultant as a weighted sum over the roots of A.

    Needs 1 < d <= e and disjoint root sets.  Each root alpha_i
    contributes (x - alpha_i) S_1 + [d_i > 1] S_0 where S_k sums
    binomial-over-power weights across compositions of k on the other
    roots of A and the roots of B.
    """
    d, e = a.total, b.total
    if not 1 < d <= e:
        raise DomainError("need 1 < d <= e for the order-1 closed form")
    for alpha, _ in a:
        for beta, _ in b:
            if alpha == beta:
                raise DomainError("root sets must be disjoint, %s is shared" % (alpha,))
    g = poly_from_roots(b)
    m = a.m
    total = UniPoly.zero()
    for i, (alpha_i, d_i) in enumerate(a, start=1):
        g_at = g(alpha_i)
        s1 = _sres_one_sum(a, b, i, d_i - 1, g_at)
        s0 = _sres_one_sum(a, b, i, d_i - 2, g_at) if d_i > 1 else Rat(0)
        lin = UniPoly([-alpha_i, 1]) * s1 + UniPoly([s0])
        scale: Scalar = Rat(1)
        for idx, (alpha_j, d_j) in enumerate(a, start=1):
            if idx != i:
                scale = scale * g(alpha_j) ** d_j
        fi_at = Rat(1)
        for idx, (alpha_j, d_j) in enumerate(a, start=1):
            if idx != i:
                fi_at = fi_at * (alpha_i - alpha_j) ** d_j
        term = lin * _sdiv(scale, fi_at)
        if (d - d_i) % 2:
            term = -term
        total = total + term
    return total


def _sres_one_sum(a: MultiRootSet, b: MultiRootSet, i: int, k: int, g_at: Scalar) -> Scalar:
    """S_k with the factor g(alpha_i)^(d_i - 1) folded into each term.

    Folding keeps every division exact even when the roots are symbolic,
    because g(alpha_i)^(d_i-1) carries at least as many (alpha_i - beta)
    factors as the denominators consume.
    """
    if k < 0:
        return Rat(0)
    alpha_i, d_i = a.pairs[i - 1]
    slots = [(root, mult, True) for idx, (root, mult) in enumerate(a.pairs) if idx != i - 1]
    slots += [(root, mult, False) for root, mult in b.pairs]
    g_pow = g_at ** (d_i - 1) if d_i > 1 else Rat(1)
    total: Scalar = Rat(0)
    for ks in compositions(k, len(slots)):
        num: Scalar = g_pow
        den_b: Scalar = Rat(1)
        den_a: Scalar = Rat(1)
        for (root, mult, in_a), kl in zip(slots, ks):
            num = num * comb(mult - 1 + kl, kl)
            if kl:
                d_fac = (alpha_i - root) ** kl
                if in_a:
                    den_a = den_a * d_fac
                else:
                    den_b = den_b * d_fac
        term = _sdiv(num, den_b) if den_b != 1 else num
        term = _sdiv(term, den_a) if den_a != 1 else term
        total = total + term
    return total
