"""Automorphic vector fields on GL(n, K): logarithmic derivative, adjoint
action, gauge transformations and solution checks.

Conventions.  The logarithmic derivative is the *right* one,
l(sigma) = sigma' * sigma^{-1}, so fundamental matrices of x' = A x are
exactly the solutions of l(sigma) = A.  The cocycle law

    l(sigma * tau) = l(sigma) + Adj_sigma(l(tau))

holds exactly; with tau = sigma^{-1} it forces the inverse law
l(sigma^{-1}) = -Adj_{sigma^{-1}}(l(sigma)).  (Classical displays
sometimes print Adj_sigma in the inverse law; the cocycle-forced form is
the one implemented and tested.)
"""

from __future__ import annotations

from .errors import DimensionMismatch, Singular
from .matrix import MatK


class AutomorphicField:
    """A matrix A in gl(n, K), the right-hand side of x' = A x."""

    __slots__ = ("n", "matrix")

    def __init__(self, matrix: MatK):
        if not matrix.is_square:
            raise DimensionMismatch("automorphic field must be square")
        self.n = matrix.rows
        self.matrix = matrix

    def __eq__(self, other):
        if not isinstance(other, AutomorphicField):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"AutomorphicField({self.matrix!s})"


class GroupElement:
    """An element of GL(n, K): a square matrix with det != 0 in K."""

    __slots__ = ("n", "sigma")

    def __init__(self, sigma: MatK):
        if not sigma.is_square:
            raise DimensionMismatch("group element must be square")
        if sigma.det().is_zero():
            raise Singular("group element must be invertible over K")
        self.n = sigma.rows
        self.sigma = sigma

    def inverse(self) -> "GroupElement":
        return GroupElement(self.sigma.inverse())

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return GroupElement(self.sigma * other.sigma)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.sigma == other.sigma

    def __hash__(self):
        return hash(self.sigma)

    def __repr__(self):
        return f"GroupElement({self.sigma!s})"


def log_deriv(sigma: GroupElement) -> AutomorphicField:
    """l(sigma) = sigma' * sigma^{-1}; vanishes on constant matrices."""
    return AutomorphicField(sigma.sigma.derive() * sigma.sigma.inverse())


def adjoint(tau: GroupElement, a: AutomorphicField) -> AutomorphicField:
    """Adj_tau(A) = tau * A * tau^{-1}."""
    if tau.n != a.n:
        raise DimensionMismatch("adjoint size mismatch")
    return AutomorphicField(tau.sigma * a.matrix * tau.sigma.inverse())


def gauge_transform(tau: GroupElement, a: AutomorphicField) -> AutomorphicField:
    """The gauge action of left translation: A -> tau A tau^{-1} + tau' tau^{-1}."""
    if tau.n != a.n:
        raise DimensionMismatch("gauge size mismatch")
    inv = tau.sigma.inverse()
    return AutomorphicField(tau.sigma * a.matrix * inv + tau.sigma.derive() * inv)


def check_automorphic_solution(a: AutomorphicField, sigma: GroupElement) -> bool:
    """True iff l(sigma) = A entrywise, i.e. sigma' = A sigma."""
    if a.n != sigma.n:
        raise DimensionMismatch("solution check size mismatch")
    return log_deriv(sigma) == a


def is_in_subalgebra(a: AutomorphicField, shape: str, m: int | None = None) -> bool:
    """Structural membership test in a concrete matrix Lie subalgebra.

    shape is one of 'skew_symmetric', 'upper_triangular', 'block_upper'
    (with block size m) or 'trace_zero'.
    """
    mat = a.matrix
    n = a.n
    if shape == "skew_symmetric":
        return mat.transpose() == -mat
    if shape == "upper_triangular":
        return all(mat[i, j].is_zero() for i in range(n) for j in range(i))
    if shape == "block_upper":
        if m is None:
            raise ValueError("block_upper requires a block size m")
        _, _, a21, _ = mat.block_split(m)
        return a21.is_zero()
    if shape == "trace_zero":
        return mat.trace().is_zero()
    raise ValueError(f"unknown subalgebra shape {shape!r}")
