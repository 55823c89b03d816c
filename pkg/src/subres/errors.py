"""Exception taxonomy shared by the whole package.

DomainError marks inputs outside a documented precondition (bad degrees,
shared roots, wrong cardinalities).  StructuralError marks a computation
that fell apart structurally (non-square matrix where squareness is
guaranteed, singular quotient-basis matrix).
"""


class SubresError(Exception):
    pass


class DomainError(SubresError, ValueError):
    pass


class StructuralError(SubresError, RuntimeError):
    pass
