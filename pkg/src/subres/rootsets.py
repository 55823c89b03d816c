"""Root sets with multiplicities and the pairing they induce."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import DomainError
from .scalar import Rat, Scalar, as_scalar
from .unipoly import UniPoly


@dataclass(frozen=True)
class MultiRootSet:
    """Roots alpha_1..alpha_m with multiplicities d_1..d_m, pairwise distinct."""

    pairs: Tuple[Tuple[Scalar, int], ...]

    def __init__(self, pairs):
        norm = []
        for root, mult in pairs:
            if not isinstance(mult, int) or mult < 1:
                raise DomainError("multiplicity must be a positive int, got %r" % (mult,))
            norm.append((as_scalar(root), mult))
        if not norm:
            raise DomainError("a root set needs at least one root")
        for i in range(len(norm)):
            for j in range(i + 1, len(norm)):
                if norm[i][0] == norm[j][0]:
                    raise DomainError("repeated root %s" % (norm[i][0],))
        object.__setattr__(self, "pairs", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.pairs)

    @property
    def roots(self) -> Tuple[Scalar, ...]:
        return tuple(r for r, _ in self.pairs)

    @property
    def mults(self) -> Tuple[int, ...]:
        return tuple(d for _, d in self.pairs)

    @property
    def total(self) -> int:
        return sum(d for _, d in self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def poly_from_roots(a: MultiRootSet) -> UniPoly:
    """Monic polynomial with exactly these roots and multiplicities."""
    out = UniPoly([1])
    for root, mult in a:
        out = out * UniPoly([-root, 1]) ** mult
    return out


def pairing_R(a: MultiRootSet, b: MultiRootSet) -> Scalar:
    """Product of (alpha_i - beta_j)^(d_i e_j) over all root pairs.

    Zero exactly when the sets share a root; for monic polynomials this is
    the resultant of the two products.
    """
    acc: Scalar = Rat(1)
    for alpha, d in a:
        for beta, e in b:
            acc = acc * (alpha - beta) ** (d * e)
    return acc
