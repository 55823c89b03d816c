"""The root-side companion of the Macaulay-style subresultant.

Given a dual basis Lambda of the quotient by the first n equations, the
order-(t, S) subresultant factors as the product of the leading-form
determinants for the free degrees times det(O_S(Lambda)) / det(V_T(Lambda)),
where O_S stacks the monomial evaluations on S and T* over the evaluations
of the last polynomial's multiples indexed by R.  The two routes agree up
to a fixed sign per configuration.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import DomainError, StructuralError
from ..matrix import ExactMatrix, det_exact
from ..multipoly import MultiPoly
from ..scalar import ParamPoly, Rat, Scalar
from .duality import DualBasis, dual_eval
from .hilbert import MonomialSets, build_monomial_sets
from .macaulay import MVSystem, leading_form_subres

Expo = tuple


def dual_vandermonde(monomials: Sequence[Expo], basis: DualBasis) -> ExactMatrix:
    """Rows indexed by monomials, columns by functionals; entry L(x^alpha)."""
    funcs = basis.functionals
    rows = []
    for expo in monomials:
        mono = MultiPoly.monomial(tuple(expo))
        rows.append([dual_eval(f, mono) for f in funcs])
    return ExactMatrix(rows)


def dual_wronskian(h: MultiPoly, monomials: Sequence[Expo], basis: DualBasis) -> ExactMatrix:
    """Like dual_vandermonde but on the multiples x^alpha h."""
    funcs = basis.functionals
    rows = []
    for expo in monomials:
        shifted = h.shift(tuple(expo))
        rows.append([dual_eval(f, shifted) for f in funcs])
    return ExactMatrix(rows)


def poisson_delta(
    sys: MVSystem,
    t: int,
    s_cols: Sequence[Expo],
    basis: DualBasis,
    sets: MonomialSets | None = None,
) -> Scalar:
    """Evaluate the subresultant through a dual basis of the quotient.

    ``sets`` defaults to the canonical monomial choice; pass the result of
    build_monomial_sets with an override to steer the free T_j slices.
    """
    if sets is None:
        sets = build_monomial_sets(sys.degrees, t)
    combo = sets.combinatorics
    if combo.degrees != tuple(sys.degrees) or combo.t != t:
        raise DomainError("monomial sets were built for a different system or order")
    s_list = [tuple(g) for g in s_cols]
    if len(set(s_list)) != len(s_list):
        raise DomainError("S has repeated monomials")
    if len(s_list) != combo.k:
        raise DomainError("S must have exactly k = %d monomials, got %d" % (combo.k, len(s_list)))
    for g in s_list:
        if len(g) != sys.n or any(e < 0 for e in g) or sum(g) > t:
            raise DomainError("S monomial %r must use %d variables with degree <= %d" % (g, sys.n, t))
    if len(basis) != combo.bezout:
        raise DomainError(
            "dual basis has %d functionals, expected the degree product %d"
            % (len(basis), combo.bezout)
        )
    v_t = dual_vandermonde(sets.T.monomials, basis)
    det_vt = det_exact(v_t)
    if not det_vt:
        raise StructuralError(
            "V_T is singular: T is not a basis of the quotient for this dual basis; "
            "supply a different T_j override"
        )
    rows = []
    rows += dual_vandermonde(s_list, basis).rows if s_list else []
    rows += dual_vandermonde(sets.T_star.monomials, basis).rows if sets.T_star.monomials else []
    f_last = sys.polys[-1]
    rows += dual_wronskian(f_last, sets.R.monomials, basis).rows if sets.R.monomials else []
    o_s = ExactMatrix(rows)
    if o_s.nrows != combo.bezout:
        raise StructuralError(
            "O_S has %d rows, expected %d" % (o_s.nrows, combo.bezout)
        )
    det_os = det_exact(o_s)
    factor: Scalar = Rat(1)
    forms = sys.leading_forms()
    d_last = sys.degrees[-1]
    for j in range(max(0, t - d_last + 1), t + 1):
        factor = factor * leading_form_subres(forms, sys.degrees[:-1], j, sets.tj[j].monomials)
    num = factor * det_os
    if isinstance(num, ParamPoly) or isinstance(det_vt, ParamPoly):
        if not isinstance(num, ParamPoly):
            num = ParamPoly.constant(num)
        return num / det_vt
    return num / det_vt
