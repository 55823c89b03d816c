"""Cross-check batteries: every quantity computed two independent ways.

The univariate battery compares the coefficient-side determinant with all
root-side formulas on one pair of root sets; the multivariate battery
compares the Macaulay route with the dual-basis route on one system.  Both
return a list of named pass/fail records instead of raising on mismatch,
so callers can report every disagreement at once.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .confluent import (
    confluent_inverse,
    vandermonde_confluent,
    vandermonde_det_closed,
    wronskian,
    wronskian_det_closed,
)
from .errors import DomainError, StructuralError
from .matrix import ExactMatrix, det_exact
from .mv.duality import assemble_dual_basis, dual_eval, inverse_system
from .mv.hilbert import build_monomial_sets
from .mv.macaulay import delta_s, extraneous_factor, macaulay_matrix
from .mv.poisson import poisson_delta
from .roots_formulas import VARIANTS, sres_dm1_hermite, sres_one, sres_roots
from .rootsets import MultiRootSet, pairing_R, poly_from_roots
from .scalar import Rat
from .serialize import SystemDocument
from .subresultants import resultant, sres_coeff, sylv_double_sum, sylvester_identity_scale

__all__ = [
    "Check",
    "univariate_checks",
    "mv_checks",
    "resolved_groups",
    "random_rootset",
    "random_pair",
]


def resolved_groups(doc: SystemDocument):
    """Per-root functional groups, computing missing duals from the root.

    Each document root either carries its dual functionals or just the
    point; in the latter case the inverse system of the first n
    polynomials at that point fills the group in.
    """
    if doc.roots is None:
        raise DomainError("the system document carries no root data")
    groups = []
    for point, dual in doc.roots:
        if dual is None:
            result = inverse_system(doc.system.polys[:-1], point)
            if result.truncated:
                raise DomainError(
                    "inverse system at %s did not stabilize below the order bound" % (point,)
                )
            dual = result.functionals
        groups.append((point, tuple(dual)))
    return groups


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _record(checks: List[Check], name: str, ok: bool, detail: str = "") -> None:
    checks.append(Check(name, bool(ok), "" if ok else detail))


def _valid_t_range(d: int, e: int) -> range:
    return range(0, d + 1) if d < e else range(0, d)


def univariate_checks(a: MultiRootSet, b: MultiRootSet) -> List[Check]:
    """Compare coefficient-side and root-side formulas on one pair.

    The pair is oriented so that deg f <= deg g; every cross-check that the
    preconditions allow is run, and each becomes one named record.
    """
    if a.total > b.total:
        a, b = b, a
    d, e = a.total, b.total
    f, g = poly_from_roots(a), poly_from_roots(b)
    checks: List[Check] = []

    for t in _valid_t_range(d, e):
        want = sres_coeff(f, g, t)
        for variant in VARIANTS:
            got = sres_roots(a, b, t, variant)
            _record(
                checks,
                "t=%d %s matches coefficient determinant" % (t, variant),
                got == want,
                "got %s, want %s" % (got, want),
            )

    want = sres_coeff(f, g, d - 1)
    got = sres_dm1_hermite(a, b)
    _record(
        checks,
        "t=d-1 Hermite interpolant matches coefficient determinant",
        got == want,
        "got %s, want %s" % (got, want),
    )

    disjoint = not any(ra == rb for ra, _ in a for rb, _ in b)
    if disjoint and d >= 2:
        want = sres_coeff(f, g, 1)
        got = sres_one(a, b)
        _record(
            checks,
            "t=1 pole formula matches coefficient determinant",
            got == want,
            "got %s, want %s" % (got, want),
        )

    res = resultant(f, g)
    pairing = pairing_R(a, b)
    _record(
        checks,
        "resultant matches the root-difference product",
        res == pairing,
        "got %s, want %s" % (res, pairing),
    )

    for name, rs in (("A", a), ("B", b)):
        v = vandermonde_confluent(rs, rs.total)
        _record(
            checks,
            "confluent Vandermonde determinant of %s matches closed form" % name,
            det_exact(v) == vandermonde_det_closed(rs),
            "got %s, want %s" % (det_exact(v), vandermonde_det_closed(rs)),
        )
    w = wronskian(g, a, d)
    _record(
        checks,
        "generalized Wronskian determinant matches closed form",
        det_exact(w) == wronskian_det_closed(g, a),
        "got %s, want %s" % (det_exact(w), wronskian_det_closed(g, a)),
    )
    inv = confluent_inverse(a)
    prod = inv @ vandermonde_confluent(a, d)
    _record(
        checks,
        "basic Hermite coefficients invert the confluent Vandermonde",
        prod == ExactMatrix.identity(d),
        "product %s" % (prod.pretty() if hasattr(prod, "pretty") else prod,),
    )

    if all(m == 1 for _, m in a) and all(m == 1 for _, m in b) and disjoint:
        for t in _valid_t_range(d, e):
            want = sres_coeff(f, g, t)
            for p in range(0, min(t, d) + 1):
                q = t - p
                if q > e:
                    continue
                sign, scale = sylvester_identity_scale(d, t, p)
                got = sylv_double_sum(a, b, p, q)
                expect = want * (sign * scale)
                _record(
                    checks,
                    "double sum (p=%d,q=%d) matches scaled subresultant" % (p, q),
                    got == expect,
                    "got %s, want %s" % (got, expect),
                )
    return checks


def mv_checks(doc: SystemDocument) -> List[Check]:
    """Compare the Macaulay route with the dual-basis route on one system.

    Needs t and S in the document; when root/dual data is present the
    Poisson-style quotient is compared against the Macaulay quotient, with
    missing dual groups filled in by the inverse-system solver.
    """
    if doc.t is None:
        raise DomainError("the system document must fix t for the cross-check battery")
    if doc.s_cols is None:
        raise DomainError("the system document must fix S for the cross-check battery")
    sys, t, s_cols = doc.system, doc.t, doc.s_cols
    checks: List[Check] = []

    sets = build_monomial_sets(sys.degrees, t, doc.t_override)
    combo = sets.combinatorics
    _record(
        checks,
        "|T| equals the degree product",
        len(sets.T) == combo.bezout,
        "|T|=%d, product=%d" % (len(sets.T), combo.bezout),
    )

    m = macaulay_matrix(sys, t, s_cols)
    _record(checks, "subresultant matrix is square", m.nrows == m.ncols,
            "%dx%d" % (m.nrows, m.ncols))
    det = det_exact(m)
    e_factor = extraneous_factor(sys, t)
    delta = delta_s(sys, t, s_cols)
    _record(
        checks,
        "determinant splits as extraneous factor times subresultant",
        det == e_factor * delta,
        "det %s, E*delta %s" % (det, e_factor * delta),
    )

    if doc.roots is not None:
        groups = resolved_groups(doc)
        dims = []
        annihilated = True
        witness = ""
        for point, dual in groups:
            for func in dual:
                for i, gpoly in enumerate(sys.polys[:-1]):
                    val = dual_eval(func, gpoly)
                    if val != 0:
                        annihilated = False
                        witness = "functional %s on polynomial %d gives %s" % (func, i + 1, val)
            dims.append(len(dual))
        _record(checks, "dual functionals annihilate the defining polynomials",
                annihilated, witness)
        _record(
            checks,
            "dual dimensions sum to the degree product",
            sum(dims) == combo.bezout,
            "dims %s, product %d" % (dims, combo.bezout),
        )
        basis = assemble_dual_basis(groups, expected_total=combo.bezout)
        try:
            quotient = poisson_delta(sys, t, s_cols, basis, sets=sets)
        except StructuralError as ex:
            _record(
                checks,
                "dual-basis quotient matches the Macaulay subresultant up to sign",
                False,
                str(ex),
            )
        else:
            _record(
                checks,
                "dual-basis quotient matches the Macaulay subresultant up to sign",
                quotient == delta or quotient == -delta,
                "poisson %s, macaulay %s" % (quotient, delta),
            )
    return checks


# ---------------------------------------------------------------------------
# random inputs for the batteries

_POOL: Tuple = tuple(
    sorted(
        {Rat(num, den) for num in range(-9, 10) for den in range(1, 5)},
        key=lambda r: (r.numerator, r.denominator),
    )
)


def random_rootset(
    rng: random.Random,
    degree: int,
    max_mult: int = 3,
    avoid: Sequence = (),
) -> MultiRootSet:
    """A random rational root set of the given total degree.

    Multiplicities are drawn up to ``max_mult``; roots are distinct rationals
    outside ``avoid``.
    """
    if degree < 1:
        raise DomainError("degree must be positive")
    mults = []
    remaining = degree
    while remaining:
        m = rng.randint(1, min(max_mult, remaining))
        mults.append(m)
        remaining -= m
    candidates = [r for r in _POOL if all(r != av for av in avoid)]
    roots = rng.sample(candidates, len(mults))
    return MultiRootSet(list(zip(roots, mults)))


def random_pair(
    rng: random.Random,
    max_degree: int = 6,
    max_mult: int = 3,
    disjoint: bool = False,
    simple: bool = False,
) -> Tuple[MultiRootSet, MultiRootSet]:
    """A random pair (A, B) with deg A <= deg B, optionally disjoint/simple."""
    e = rng.randint(1, max_degree)
    d = rng.randint(1, e)
    mm = 1 if simple else max_mult
    a = random_rootset(rng, d, mm)
    b = random_rootset(rng, e, mm, avoid=[r for r, _ in a] if disjoint else ())
    return a, b
