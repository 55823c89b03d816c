"""Local dual spaces: differential functionals anchored at a point.

A functional is a rational combination of normalized partial derivative
evaluations at one point; normalization divides the alpha-th derivative by
alpha! so that applying d_alpha to x^gamma and evaluating at zero picks
out delta_{alpha,gamma}.  The sigma operators lower derivative exponents
and witness closedness of a local dual space under "division" by the
variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping, Optional, Sequence, Tuple

from ..combinat import canon_key, monomials_up_to_degree
from ..errors import DomainError
from ..matrix import ExactMatrix
from ..multipoly import MultiPoly
from ..scalar import Rat, Scalar, as_scalar

Expo = Tuple[int, ...]


@dataclass(frozen=True)
class Point:
    coords: Tuple[Scalar, ...]

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(as_scalar(c) for c in coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True)
class DualFunctional:
    """Combination sum_alpha a_alpha d_alpha |_point, nonzero and anchored."""

    point: Point
    terms: Tuple[Tuple[Expo, Scalar], ...]

    def __init__(self, point, terms):
        if not isinstance(point, Point):
            point = Point(point)
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean = {}
        for expo, c in items:
            expo = tuple(expo)
            if len(expo) != point.n or any(not isinstance(e, int) or e < 0 for e in expo):
                raise DomainError("bad derivative exponent %r" % (expo,))
            c = as_scalar(c)
            if c:
                clean[expo] = clean.get(expo, Rat(0)) + c
        clean = {e: c for e, c in clean.items() if c}
        if not clean:
            raise DomainError("the zero functional has no representation")
        object.__setattr__(self, "point", point)
        object.__setattr__(
            self, "terms", tuple(sorted(clean.items(), key=lambda kv: canon_key(kv[0])))
        )

    @property
    def order(self) -> int:
        return max(sum(e) for e, _ in self.terms)

    def is_evaluation(self) -> bool:
        zero = (0,) * self.point.n
        return len(self.terms) == 1 and self.terms[0][0] == zero and self.terms[0][1] == 1

    def __str__(self):
        parts = []
        for expo, c in self.terms:
            d = "d%s" % ",".join(map(str, expo)) if any(expo) else "1"
            parts.append("%s*%s" % (c, d) if c != 1 or d == "1" else d)
        return " + ".join(parts) + " at %s" % (tuple(str(c) for c in self.point.coords),)


def _deriv_monomial_at(gamma: Expo, alpha: Expo, point: Point) -> Scalar:
    """Normalized alpha-derivative of x^gamma evaluated at the point."""
    acc: Scalar = Rat(1)
    for g, a, x in zip(gamma, alpha, point.coords):
        if a > g:
            return Rat(0)
        acc = acc * comb(g, a)
        if g - a:
            acc = acc * x ** (g - a)
    return acc


def dual_eval(func: DualFunctional, f: MultiPoly) -> Scalar:
    """Apply the functional to a polynomial."""
    if f.n != func.point.n:
        raise DomainError("functional in %d variables applied to %d" % (func.point.n, f.n))
    acc: Scalar = Rat(0)
    for alpha, a in func.terms:
        for gamma, c in f.terms.items():
            v = _deriv_monomial_at(gamma, alpha, func.point)
            if v:
                acc = acc + a * c * v
    return acc


def sigma_shift(func: DualFunctional, beta: Expo) -> Optional[DualFunctional]:
    """Lower every derivative exponent by beta; None when everything drops."""
    beta = tuple(beta)
    if len(beta) != func.point.n or any(not isinstance(e, int) or e < 0 for e in beta):
        raise DomainError("bad shift exponent %r" % (beta,))
    out = {}
    for alpha, c in func.terms:
        if all(a >= b for a, b in zip(alpha, beta)):
            out[tuple(a - b for a, b in zip(alpha, beta))] = c
    if not out:
        return None
    return DualFunctional(func.point, out)


@dataclass(frozen=True)
class InverseSystemResult:
    """Basis of the local dual space, with a truncation marker.

    ``truncated`` is set when the dimension was still growing at the order
    bound; the functionals then span only the bounded-order part.
    """

    functionals: Tuple[DualFunctional, ...]
    truncated: bool
    order_stabilized: Optional[int]

    @property
    def dimension(self) -> int:
        return len(self.functionals)

    def __iter__(self):
        return iter(self.functionals)

    def __len__(self):
        return len(self.functionals)


def inverse_system(
    generators: Sequence[MultiPoly],
    point,
    order_bound: Optional[int] = None,
) -> InverseSystemResult:
    """All functionals up to the stabilization order that kill the ideal.

    Closedness of the conditions under multiplication by monomials is
    enforced by requiring annihilation of x^beta g for every generator g
    and every |beta| up to the current order; the dimension stalling
    between two consecutive orders ends the search.
    """
    if not generators:
        raise DomainError("need at least one generator")
    n = generators[0].n
    if any(g.n != n for g in generators):
        raise DomainError("generators must share the variable count")
    if any(g.is_zero() for g in generators):
        raise DomainError("zero generator")
    if not isinstance(point, Point):
        point = Point(point)
    if point.n != n:
        raise DomainError("point has %d coordinates, expected %d" % (point.n, n))
    for g in generators:
        if g(point.coords) != 0:
            raise DomainError("the point is not a common root: %s does not vanish" % g)
    if order_bound is None:
        order_bound = sum(max(int(g.total_degree()), 1) - 1 for g in generators) + 1
    prev_dim = None
    prev_basis: list = []
    prev_columns: list = []
    for order in range(order_bound + 1):
        columns = monomials_up_to_degree(n, order)
        rows = []
        for g in generators:
            for beta in monomials_up_to_degree(n, order):
                shifted = g.shift(beta)
                row = []
                for alpha in columns:
                    acc: Scalar = Rat(0)
                    for gamma, c in shifted.terms.items():
                        v = _deriv_monomial_at(gamma, alpha, point)
                        if v:
                            acc = acc + c * v
                    row.append(acc)
                rows.append(row)
        kernel = ExactMatrix(rows).nullspace()
        dim = len(kernel)
        if prev_dim is not None and dim == prev_dim:
            funcs = _kernel_to_functionals(prev_basis, prev_columns, point)
            return InverseSystemResult(tuple(funcs), False, order - 1)
        prev_dim = dim
        prev_basis = kernel
        prev_columns = columns
    funcs = _kernel_to_functionals(prev_basis, prev_columns, point)
    return InverseSystemResult(tuple(funcs), True, None)


def _kernel_to_functionals(kernel, columns, point: Point):
    funcs = []
    for vec in kernel:
        terms = {expo: c for expo, c in zip(columns, vec) if c}
        funcs.append(DualFunctional(point, terms))
    funcs.sort(key=lambda f: (f.order, canon_key(f.terms[-1][0])))
    return funcs


@dataclass(frozen=True)
class DualBasis:
    """Functionals grouped by root, each group led by the pure evaluation."""

    groups: Tuple[Tuple[Point, Tuple[DualFunctional, ...]], ...]

    @property
    def functionals(self) -> Tuple[DualFunctional, ...]:
        return tuple(f for _, fs in self.groups for f in fs)

    def __len__(self):
        return sum(len(fs) for _, fs in self.groups)

    def __iter__(self):
        return iter(self.functionals)


def assemble_dual_basis(
    per_root: Sequence[Tuple], expected_total: Optional[int] = None
) -> DualBasis:
    """Stack per-root functional lists into one basis.

    Each entry is (point, functionals); the first functional of every
    group must be the pure evaluation at that point, and when
    ``expected_total`` is given the overall count must match it.
    """
    groups = []
    seen = []
    total = 0
    for point, funcs in per_root:
        if not isinstance(point, Point):
            point = Point(point)
        funcs = tuple(funcs)
        if not funcs:
            raise DomainError("empty functional group at %s" % (point,))
        for q in seen:
            if q.coords == point.coords:
                raise DomainError("repeated root %s" % (point,))
        seen.append(point)
        if any(f.point.coords != point.coords for f in funcs):
            raise DomainError("functional anchored away from its group point")
        if not funcs[0].is_evaluation():
            raise DomainError("each group must start with the pure evaluation functional")
        total += len(funcs)
        groups.append((point, funcs))
    if expected_total is not None and total != expected_total:
        raise DomainError("dual basis has %d functionals, expected %d" % (total, expected_total))
    return DualBasis(tuple(groups))
