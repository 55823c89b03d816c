"""Confluent Vandermonde matrices, generalized Wronskians, Hermite bases.

Root sets carry multiplicities, so the usual Vandermonde rows fan out into
blocks of derivative columns.  Everything here is exact and works over
rational roots as well as parameter-polynomial roots where divisions stay
polynomial.
"""

from __future__ import annotations

from math import comb
from typing import Mapping, Tuple

from .combinat import compositions
from .errors import DomainError
from .matrix import ExactMatrix, det_exact
from .rootsets import MultiRootSet
from .scalar import Rat, Scalar
from .unipoly import UniPoly, taylor_coeff


def _pow(base: Scalar, e: int) -> Scalar:
    return base**e if e else Rat(1)


def vandermonde_confluent(a: MultiRootSet, u: int) -> ExactMatrix:
    """u x d matrix; block i has columns binom(k,j) alpha_i^(k-j), j < d_i.

    Entries with k < j are zero, and the exponent never goes negative.
    """
    if not isinstance(u, int) or u < 0:
        raise DomainError("row count u must be a nonnegative int")
    rows = []
    for k in range(u):
        row = []
        for alpha, d in a:
            for j in range(d):
                if k < j:
                    row.append(Rat(0))
                else:
                    row.append(comb(k, j) * _pow(alpha, k - j))
        rows.append(row)
    return ExactMatrix(rows)


def vandermonde_det_closed(a: MultiRootSet) -> Scalar:
    """Product of (alpha_j - alpha_i)^(d_i d_j) over i < j."""
    acc: Scalar = Rat(1)
    pairs = a.pairs
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            ai, di = pairs[i]
            aj, dj = pairs[j]
            acc = acc * (aj - ai) ** (di * dj)
    return acc


def wronskian(h: UniPoly, a: MultiRootSet, u: int) -> ExactMatrix:
    """u x d matrix of normalized derivatives of z^k h at the roots.

    Row k, block i, inner column j holds the coefficient of (z-alpha_i)^j
    in z^k h; the polynomial h may carry extra parameters in its
    coefficients.
    """
    if not isinstance(u, int) or u < 0:
        raise DomainError("row count u must be a nonnegative int")
    rows = []
    shifted = h
    for k in range(u):
        row = []
        for alpha, d in a:
            for j in range(d):
                row.append(taylor_coeff(shifted, alpha, j))
        rows.append(row)
        shifted = shifted.mul_xk(1)
    return ExactMatrix(rows)


def wronskian_det_closed(h: UniPoly, a: MultiRootSet) -> Scalar:
    """Closed form for the square case u = d: det V(A) times prod h(alpha_i)^d_i."""
    acc = vandermonde_det_closed(a)
    for alpha, d in a:
        acc = acc * h(alpha) ** d
    return acc


def fiki(a: MultiRootSet, i: int, k: int) -> UniPoly:
    """(x - alpha_i)^k times prod_{j != i} (x - alpha_j)^(d_j); i is 1-based."""
    if not 1 <= i <= a.m:
        raise DomainError("root index i out of range (1-based)")
    if not isinstance(k, int) or not 0 <= k < a.pairs[i - 1][1]:
        raise DomainError("shift order k must satisfy 0 <= k < d_i")
    alpha_i = a.pairs[i - 1][0]
    out = UniPoly([-alpha_i, 1]) ** k
    for idx, (alpha, d) in enumerate(a, start=1):
        if idx != i:
            out = out * UniPoly([-alpha, 1]) ** d
    return out


def _weight(a: MultiRootSet, i: int, k: int) -> Scalar:
    """Sum over compositions of k across the other roots of the binomial
    over power weights; equals 1 at k = 0 and 0 for k > 0 with one root."""
    pairs = a.pairs
    others = [idx for idx in range(len(pairs)) if idx != i - 1]
    alpha_i = pairs[i - 1][0]
    if not others:
        return Rat(1) if k == 0 else Rat(0)
    total: Scalar = Rat(0)
    for ks in compositions(k, len(others)):
        term: Scalar = Rat(1)
        for idx, kl in zip(others, ks):
            alpha_l, d_l = pairs[idx]
            term = term * comb(d_l - 1 + kl, kl)
            if kl:
                term = term / (alpha_i - alpha_l) ** kl
        total = total + term
    return total


def basic_hermite(a: MultiRootSet, i: int, j: int) -> UniPoly:
    """The interpolation basis polynomial dual to the (i, j) Taylor datum.

    Degree is below the total multiplicity d, and its coefficient of
    (x-alpha_r)^s at each root alpha_r is 1 exactly at (r, s) = (i, j).
    Index i is 1-based, j counts derivative order from 0.
    """
    if not 1 <= i <= a.m:
        raise DomainError("root index i out of range (1-based)")
    d_i = a.pairs[i - 1][1]
    if not 0 <= j < d_i:
        raise DomainError("derivative order j must satisfy 0 <= j < d_i")
    alpha_i = a.pairs[i - 1][0]
    fi_at = fiki(a, i, 0)(alpha_i)
    out = UniPoly.zero()
    for k in range(d_i - j):
        w = _weight(a, i, k)
        if not w:
            continue
        if k % 2:
            w = -w
        out = out + fiki(a, i, j + k) * w
    return _scale(out, fi_at)


def _scale(p: UniPoly, denom: Scalar) -> UniPoly:
    return UniPoly([c / denom for c in p.coeffs])


def hermite_interpolate(a: MultiRootSet, data: Mapping[Tuple[int, int], Scalar]) -> UniPoly:
    """Unique polynomial of degree < d matching the given Taylor data.

    ``data`` maps (i, j) with 1-based root index i and 0 <= j < d_i to the
    coefficient of (x-alpha_i)^j required at that root; the key set must
    cover exactly those pairs.
    """
    wanted = {(i, j) for i in range(1, a.m + 1) for j in range(a.pairs[i - 1][1])}
    got = set(data)
    if got != wanted:
        raise DomainError(
            "interpolation data must cover exactly the (root, order) pairs; "
            "missing %s, extra %s" % (sorted(wanted - got), sorted(got - wanted))
        )
    out = UniPoly.zero()
    for (i, j), y in data.items():
        if y:
            out = out + basic_hermite(a, i, j) * y
    return out


def confluent_inverse(a: MultiRootSet) -> ExactMatrix:
    """Inverse of the square confluent Vandermonde matrix.

    Row (i, j) holds the monomial coefficients of the basis polynomial
    dual to the (i, j) datum, so the product with vandermonde_confluent(A, d)
    is the identity.
    """
    d = a.total
    rows = []
    for i in range(1, a.m + 1):
        for j in range(a.pairs[i - 1][1]):
            p = basic_hermite(a, i, j)
            rows.append([p.coeff(k) for k in range(d)])
    return ExactMatrix(rows)


def vprime(a: MultiRootSet) -> ExactMatrix:
    """Block-diagonal companion of the confluent Vandermonde matrix.

    Block i is upper-triangular Toeplitz in the normalized derivatives of
    f_i = prod_{j != i}(x - alpha_j)^(d_j) at alpha_i, so the determinant
    is the product of f_i(alpha_i)^(d_i).
    """
    d = a.total
    rows = [[Rat(0)] * d for _ in range(d)]
    offset = 0
    for i in range(1, a.m + 1):
        d_i = a.pairs[i - 1][1]
        alpha_i = a.pairs[i - 1][0]
        fi = fiki(a, i, 0)
        for r in range(d_i):
            for c in range(r, d_i):
                rows[offset + r][offset + c] = taylor_coeff(fi, alpha_i, c - r)
        offset += d_i
    return ExactMatrix(rows)
