"""Subresultants from coefficients, and Sylvester-style double sums.

``sres_coeff`` is the definitional route: the order-t subresultant of f
(degree d) and g (degree e) is the determinant of the (d+e-2t)-row matrix
whose rows hold the coefficients of x^(e-t-1)f, ..., f, x^(d-t-1)g, ..., g
on the monomials x^(d+e-t-1), ..., x^(t+1), with the polynomial itself in
the final column.  Expanding along that column gives scalar minors times
shifted copies of f and g, which keeps the determinant work inside the
scalar domain.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import DomainError
from .matrix import ExactMatrix, det_exact
from .rootsets import MultiRootSet
from .scalar import Rat, Scalar
from .unipoly import UniPoly


def _check_t(d, e, t: int) -> None:
    if d < 0 or e < 0 or d != int(d) or e != int(e):
        raise DomainError("degrees must be nonnegative integers (zero polynomial?)")
    if not isinstance(t, int) or t < 0:
        raise DomainError("order t must be a nonnegative int")
    if not (t <= d <= e):
        raise DomainError("need 0 <= t <= deg f <= deg g, got t=%s d=%s e=%s" % (t, d, e))
    if d == e and t == d:
        raise DomainError("t = deg f = deg g is outside the defined range")


def sres_coeff(f: UniPoly, g: UniPoly, t: int) -> UniPoly:
    """Order-t subresultant of f and g from their coefficients."""
    d, e = f.degree, g.degree
    _check_t(d, e, t)
    d, e = int(d), int(e)
    n = d + e - 2 * t
    polys = [f.mul_xk(e - t - 1 - i) for i in range(e - t)]
    polys += [g.mul_xk(d - t - 1 - i) for i in range(d - t)]
    monomials = list(range(d + e - t - 1, t, -1))
    scalar_rows = [[p.coeff(k) for k in monomials] for p in polys]
    out = UniPoly.zero()
    for r in range(n):
        minor_rows = scalar_rows[:r] + scalar_rows[r + 1 :]
        minor = det_exact(ExactMatrix(minor_rows)) if n > 1 else Rat(1)
        if not minor:
            continue
        sign = 1 if (r + n - 1) % 2 == 0 else -1
        out = out + polys[r] * (minor if sign > 0 else -minor)
    if out.degree > t:
        raise AssertionError("subresultant degree exceeds its order")
    return out


def resultant(f: UniPoly, g: UniPoly) -> Scalar:
    """Resultant as the constant value of the order-0 subresultant."""
    if f.degree < 1 or g.degree < 1:
        raise DomainError("resultant needs two polynomials of degree >= 1")
    return sres_coeff(f, g, 0).coeff(0)


def _r_lists(xs, ys) -> Scalar:
    acc: Scalar = Rat(1)
    for x in xs:
        for y in ys:
            acc = acc * (x - y)
    return acc


def _r_poly(xs) -> UniPoly:
    out = UniPoly([1])
    for x in xs:
        out = out * UniPoly([-x, 1])
    return out


def sylv_double_sum(a: MultiRootSet, b: MultiRootSet, p: int, q: int) -> UniPoly:
    """Double sum over p-subsets of A and q-subsets of B (simple roots only).

    Each pair (A', B') contributes R(x,A') R(x,B') weighted by
    R(A',B') R(A\\A',B\\B') / (R(A',A\\A') R(B',B\\B')).
    """
    if any(d != 1 for d in a.mults) or any(e != 1 for e in b.mults):
        raise DomainError("double sums undefined for multiple roots")
    d, e = a.m, b.m
    if not (0 <= p <= d and 0 <= q <= e):
        raise DomainError("need 0 <= p <= d and 0 <= q <= e")
    roots_a = a.roots
    roots_b = b.roots
    total = UniPoly.zero()
    for ia in combinations(range(d), p):
        a_in = [roots_a[i] for i in ia]
        a_out = [roots_a[i] for i in range(d) if i not in ia]
        for ib in combinations(range(e), q):
            b_in = [roots_b[i] for i in ib]
            b_out = [roots_b[i] for i in range(e) if i not in ib]
            num = _r_lists(a_in, b_in) * _r_lists(a_out, b_out)
            if not num:
                continue
            den = _r_lists(a_in, a_out) * _r_lists(b_in, b_out)
            weight = num / den
            total = total + _r_poly(a_in) * _r_poly(b_in) * weight
    return total


def sylvester_identity_scale(d: int, t: int, p: int) -> tuple[int, int]:
    """Sign and binomial linking the double sum to the subresultant.

    Sres_t = sign / comb(t, p) * Sylv^(p, t-p); returns (sign, comb(t, p)).
    """
    sign = -1 if (p * (d - t)) % 2 else 1
    return sign, comb(t, p)
