"""Resultant-style square matrices for n+1 polynomials in n variables.

The degree-t matrix has one column per degree-t monomial in the n+1
homogeneous variables, minus a distinguished set S of k columns, and one
row per admissible multiple x^beta f_i^h.  Admissibility (|beta| = t - D_i
with beta_j < D_j for j < i) puts the rows in bijection with the deleted
classes of columns, so the matrix is square by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from ..combinat import canon_key, monomials_of_degree
from ..errors import DomainError, StructuralError
from ..matrix import ExactMatrix, det_exact
from ..multipoly import MultiPoly
from ..scalar import ParamPoly, Rat, Scalar
from .hilbert import MonomialSet, hilbert_function, tau

Expo = Tuple[int, ...]


@dataclass(frozen=True)
class MVSystem:
    """n+1 polynomials in n variables with declared degrees.

    Actual degrees may fall below the declared ones; homogenization always
    fills up to the declared degree.
    """

    n: int
    polys: Tuple[MultiPoly, ...]
    degrees: Tuple[int, ...]

    def __init__(self, n: int, polys: Sequence[MultiPoly], degrees: Sequence[int]):
        if not isinstance(n, int) or n < 1:
            raise DomainError("need at least one variable")
        polys = tuple(polys)
        degrees = tuple(degrees)
        if len(polys) != n + 1 or len(degrees) != n + 1:
            raise DomainError("need exactly n+1 polynomials and degrees")
        if any(not isinstance(d, int) or d < 1 for d in degrees):
            raise DomainError("declared degrees must be positive ints")
        for i, p in enumerate(polys):
            if p.n != n:
                raise DomainError("polynomial %d lives in %d variables, expected %d" % (i + 1, p.n, n))
            if p.total_degree() > degrees[i]:
                raise DomainError(
                    "polynomial %d exceeds its declared degree %d" % (i + 1, degrees[i])
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "polys", polys)
        object.__setattr__(self, "degrees", degrees)

    def leading_forms(self) -> Tuple[MultiPoly, ...]:
        """Homogeneous parts of the first n polynomials at their declared degrees."""
        return tuple(p.homogeneous_part(d) for p, d in zip(self.polys[:-1], self.degrees[:-1]))


def _row_indices(degrees: Sequence[int], t: int, i: int, nvars: int) -> list:
    """Multiplier exponents for equation i (0-based): |beta| = t - D_i and
    beta_j < D_j for j < i, in canonical order."""
    d_i = degrees[i]
    if t - d_i < 0:
        return []
    out = []
    for beta in monomials_of_degree(nvars, t - d_i):
        if all(beta[j] < degrees[j] for j in range(i)):
            out.append(beta)
    return out


def _column_class(gamma: Expo, degrees: Sequence[int]) -> int | None:
    """First index whose degree bound the monomial violates, or None if reduced."""
    for i, d in enumerate(degrees):
        if gamma[i] >= d:
            return i
    return None


def macaulay_matrix(sys: MVSystem, t: int, s_cols: Sequence[Expo]) -> ExactMatrix:
    """The square degree-t matrix with the k columns of S deleted.

    ``s_cols`` lists dehomogenized monomials (exponents in the n affine
    variables, |gamma| <= t); each corresponds to the degree-t column
    x^gamma x_{n+1}^(t - |gamma|).
    """
    n = sys.n
    k = hilbert_function(sys.degrees, t)
    s_list = [tuple(g) for g in s_cols]
    if len(set(s_list)) != len(s_list):
        raise DomainError("S has repeated monomials")
    if len(s_list) != k:
        raise DomainError("S must have exactly k = %d monomials, got %d" % (k, len(s_list)))
    for g in s_list:
        if len(g) != n or any(e < 0 for e in g) or sum(g) > t:
            raise DomainError("S monomial %r must use %d variables with degree <= %d" % (g, n, t))
    s_h = {g + (t - sum(g),) for g in s_list}
    columns = [m for m in monomials_of_degree(n + 1, t) if m not in s_h]
    homog = [p.homogenize(d) for p, d in zip(sys.polys, sys.degrees)]
    rows = []
    for i in range(n + 1):
        for beta in _row_indices(sys.degrees, t, i, n + 1):
            shifted = homog[i].shift(beta)
            rows.append([shifted.coeff(c) for c in columns])
    if len(rows) != len(columns):
        raise StructuralError(
            "matrix is not square: %d rows vs %d columns" % (len(rows), len(columns))
        )
    return ExactMatrix(rows)


def extraneous_factor(sys: MVSystem, t: int) -> Scalar:
    """Determinant of the doubly-reducible corner of the full degree-t matrix.

    Rows and columns are the degree-t monomials divisible by x_j^(D_j) for
    at least two indices j; rows enter through the class bijection
    gamma -> x^(gamma - D_i e_i) f_i^h.  An empty corner gives 1.
    """
    n = sys.n
    doubly = []
    for gamma in monomials_of_degree(n + 1, t):
        hits = sum(1 for e, d in zip(gamma, sys.degrees) if e >= d)
        if hits >= 2:
            doubly.append(gamma)
    if not doubly:
        return Rat(1)
    homog = [p.homogenize(d) for p, d in zip(sys.polys, sys.degrees)]
    rows = []
    for gamma in doubly:
        i = _column_class(gamma, sys.degrees)
        beta = list(gamma)
        beta[i] -= sys.degrees[i]
        shifted = homog[i].shift(tuple(beta))
        rows.append([shifted.coeff(c) for c in doubly])
    return det_exact(ExactMatrix(rows))


def delta_s(sys: MVSystem, t: int, s_cols: Sequence[Expo]) -> Scalar:
    """Subresultant of order (t, S): det of the S-deleted matrix divided by
    the extraneous factor, an exact division."""
    e = extraneous_factor(sys, t)
    if not e:
        raise DomainError("extraneous factor vanishes; perturb the system before dividing")
    det = det_exact(macaulay_matrix(sys, t, s_cols))
    if isinstance(det, ParamPoly) or isinstance(e, ParamPoly):
        if not isinstance(det, ParamPoly):
            det = ParamPoly.constant(det)
        return det / e
    return det / e


def leading_form_subres(
    forms: Sequence[MultiPoly], degrees: Sequence[int], j: int, tj: Sequence[Expo]
) -> Scalar:
    """Same construction one level down: n forms in n variables at degree j
    with the tau_j columns of T_j deleted."""
    n = len(forms)
    degrees = tuple(degrees)
    if len(degrees) != n:
        raise DomainError("need one declared degree per form")
    if not isinstance(j, int) or j < 0:
        raise DomainError("degree j must be a nonnegative int")
    for i, f in enumerate(forms):
        if f.n != n:
            raise DomainError("form %d lives in %d variables, expected %d" % (i + 1, f.n, n))
        if any(sum(e) != degrees[i] for e in f.terms):
            raise DomainError("form %d is not homogeneous of degree %d" % (i + 1, degrees[i]))
    tau_j = tau(degrees, j)
    t_list = [tuple(m) for m in tj]
    if len(set(t_list)) != len(t_list):
        raise DomainError("T_j has repeated monomials")
    if len(t_list) != tau_j:
        raise DomainError("T_j must have exactly tau_j = %d monomials, got %d" % (tau_j, len(t_list)))
    degree_j = monomials_of_degree(n, j)
    for m in t_list:
        if m not in degree_j:
            raise DomainError("T_j monomial %r is not a degree-%d monomial" % (m, j))
    t_set = set(t_list)
    columns = [m for m in degree_j if m not in t_set]
    rows = []
    for i in range(n):
        for beta in _row_indices(degrees, j, i, n):
            shifted = forms[i].shift(beta)
            rows.append([shifted.coeff(c) for c in columns])
    if len(rows) != len(columns):
        raise StructuralError(
            "leading-form matrix is not square: %d rows vs %d columns" % (len(rows), len(columns))
        )
    return det_exact(ExactMatrix(rows))
