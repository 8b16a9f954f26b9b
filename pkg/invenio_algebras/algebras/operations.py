# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Element and subspace operations on structure-constant algebras."""

from ..errors import AlgebraMismatch, NotAUnit
from . import linalg
from .api import AlgElement
from .subspaces import Subspace


def _check_algebra(algebra, elements):
    for e in elements:
        if e.algebra is not algebra and e.algebra != algebra:
            raise AlgebraMismatch("Elements belong to different algebras")


def multiply(a, b):
    """Product ``a b``."""
    return a * b


def lie_commutator(x, y):
    """The Lie commutator ``[x, y] = x y - y x``."""
    return x * y - y * x


def is_unit(u):
    """Whether ``u`` is invertible (its left-regular matrix is nonsingular)."""
    A = u.algebra
    return linalg.is_invertible(A.field, A.left_matrix(u.coords))


def try_invert(u):
    """Inverse of ``u`` or ``None`` when ``u`` is not a unit.

    A solution of ``u v = 1`` makes the left-regular matrix of ``u``
    surjective, hence ``v`` is a two-sided inverse.
    """
    A = u.algebra
    v = linalg.solve(A.field, A.left_matrix(u.coords), list(A.one))
    if v is None:
        return None
    return AlgElement(A, v)


def invert(u):
    """Inverse of ``u``.

    :raises NotAUnit: when ``u`` is not invertible.
    """
    v = try_invert(u)
    if v is None:
        raise NotAUnit(f"{u.to_json()} is not a unit")
    return v


def centralizer(algebra, elements):
    """The subspace ``{x : x s = s x for all s}``."""
    _check_algebra(algebra, elements)
    F = algebra.field
    rows = []
    for s in elements:
        left = algebra.left_matrix(s.coords)
        right = algebra.right_matrix(s.coords)
        rows.extend(linalg.sub_vectors(F, lr, rr) for lr, rr in zip(left, right))
    if not rows:
        return Subspace.whole(algebra)
    return Subspace(algebra, linalg.nullspace(F, rows))


def center(algebra):
    """The center, i.e. the centralizer of the basis."""
    return centralizer(algebra, algebra.basis())


def left_annihilator(z):
    """The subspace ``{x : x z = 0}``."""
    A = z.algebra
    return Subspace(A, linalg.nullspace(A.field, A.right_matrix(z.coords)))


def right_annihilator(z):
    """The subspace ``{x : z x = 0}``."""
    A = z.algebra
    return Subspace(A, linalg.nullspace(A.field, A.left_matrix(z.coords)))


def generated_subalgebra(algebra, elements):
    """Smallest unital subalgebra containing ``elements``.

    Starting from the span of the unity and the generators, the span is
    closed under right multiplication by the generators until its dimension
    stops growing.
    """
    _check_algebra(algebra, elements)
    gens = [list(e.coords) for e in elements]
    space = Subspace(algebra, [list(algebra.one)] + gens)
    while True:
        products = [algebra.mul_vectors(v, g) for v in space.basis for g in gens]
        grown = Subspace(algebra, list(space.basis) + products)
        if grown.dim == space.dim:
            return space
        space = grown


def is_commutative(algebra, subspace=None):
    """Whether all basis commutators vanish.

    :returns: ``(True, None)`` or ``(False, (x, y))`` with a non-commuting
        pair of basis elements.
    """
    basis = subspace.elements() if subspace is not None else algebra.basis()
    for i, x in enumerate(basis):
        for y in basis[i + 1 :]:
            if not lie_commutator(x, y).is_zero():
                return False, (x, y)
    return True, None


def power_sequence(g, limit):
    """``[1, g, g^2, ..., g^limit]``."""
    out = [g.algebra.unity]
    for _ in range(limit):
        out.append(out[-1] * g)
    return out
