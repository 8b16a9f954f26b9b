# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Subspaces of an algebra stored as canonical row-reduced bases."""

import itertools

from ..errors import AlgebraMismatch
from . import linalg
from .api import AlgElement


class Subspace:
    """A linear subspace of an :class:`AlgebraSpec`.

    The basis is kept in reduced row echelon form, which is unique for the
    subspace, so equality of subspaces is equality of their bases.
    """

    __slots__ = ("algebra", "basis", "pivots")

    def __init__(self, algebra, vectors):
        """Constructor.

        :param vectors: Raw coordinate vectors spanning the subspace.
        """
        self.algebra = algebra
        basis, pivots = linalg.rref(algebra.field, [list(v) for v in vectors])
        self.basis = tuple(tuple(row) for row in basis)
        self.pivots = tuple(pivots)

    @classmethod
    def from_elements(cls, algebra, elements):
        """Span of algebra elements."""
        for e in elements:
            if e.algebra != algebra:
                raise AlgebraMismatch("Element does not belong to the algebra")
        return cls(algebra, [e.coords for e in elements])

    @classmethod
    def whole(cls, algebra):
        """The whole algebra."""
        return cls(algebra, [algebra.basis_vector(i) for i in range(algebra.dim)])

    @classmethod
    def zero(cls, algebra):
        """The zero subspace."""
        return cls(algebra, [])

    @property
    def dim(self):
        """Dimension."""
        return len(self.basis)

    def is_zero(self):
        """Whether this is the zero subspace."""
        return not self.basis

    def is_whole(self):
        """Whether this is the whole algebra."""
        return self.dim == self.algebra.dim

    def elements(self):
        """Basis as algebra elements."""
        return [AlgElement(self.algebra, row) for row in self.basis]

    def reduce(self, v):
        """Reduce raw coordinates modulo the subspace (canonical representative)."""
        F = self.algebra.field
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if not F.is_zero(c):
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
        return v

    def contains_vector(self, v):
        """Membership of raw coordinates."""
        return linalg.is_zero_vector(self.algebra.field, self.reduce(v))

    def __contains__(self, element):
        """Membership of an element."""
        return self.contains_vector(element.coords)

    def coordinates(self, v):
        """Coordinates of a member in the row basis."""
        return [v[p] for p in self.pivots]

    def iter_elements(self):
        """All members over a finite field, in lexicographic order of coordinates."""
        F = self.algebra.field
        for coeffs in itertools.product(F.elements(), repeat=self.dim):
            v = self.algebra.zero_vector()
            for c, row in zip(coeffs, self.basis):
                if not F.is_zero(c):
                    v = linalg.add_vectors(F, v, linalg.scale_vector(F, c, row))
            yield AlgElement(self.algebra, v)

    @property
    def size(self):
        """Number of elements over a finite field."""
        if not self.algebra.field.is_finite:
            return None
        return self.algebra.field.order**self.dim

    #
    # Lattice operations
    #
    def __add__(self, other):
        """Sum of subspaces."""
        return Subspace(self.algebra, list(self.basis) + list(other.basis))

    def intersection(self, other):
        """Intersection of subspaces."""
        F = self.algebra.field
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.algebra)
        # x = sum a_i s_i = sum b_j o_j  <=>  [S; -O]^T (a, b) = 0
        minus_one = F.neg(F.one)
        rows = list(self.basis)
        rows += [linalg.scale_vector(F, minus_one, r) for r in other.basis]
        kernel = linalg.left_nullspace(F, rows)
        vectors = [linalg.vec_mat(F, k[: self.dim], list(self.basis)) for k in kernel]
        return Subspace(self.algebra, vectors)

    __and__ = intersection

    def __le__(self, other):
        """Inclusion."""
        return all(other.contains_vector(v) for v in self.basis)

    def __eq__(self, other):
        """Equality of subspaces of equal algebras."""
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis and self.algebra == other.algebra

    def __hash__(self):
        """Hash over the canonical basis."""
        return hash(self.basis)

    def __repr__(self):
        """Return repr(self)."""
        return f"<Subspace dim={self.dim} of {self.algebra!r}>"

    #
    # Multiplicative structure
    #
    def product(self, other):
        """Span of all products ``s o``."""
        A = self.algebra
        return Subspace(
            A, [A.mul_vectors(s, o) for s in self.basis for o in other.basis]
        )

    def power(self, n):
        """The subspace ``V^n`` spanned by ``n``-fold products."""
        result = self
        for _ in range(n - 1):
            result = result.product(self)
        return result

    def is_left_ideal(self):
        """Closure under left multiplication by the basis."""
        A = self.algebra
        return all(
            self.contains_vector(A.mul_vectors(A.basis_vector(i), v))
            for i in range(A.dim)
            for v in self.basis
        )

    def is_right_ideal(self):
        """Closure under right multiplication by the basis."""
        A = self.algebra
        return all(
            self.contains_vector(A.mul_vectors(v, A.basis_vector(i)))
            for i in range(A.dim)
            for v in self.basis
        )

    def is_ideal(self):
        """Whether this is a two-sided ideal."""
        return self.is_left_ideal() and self.is_right_ideal()

    def is_subalgebra(self):
        """Closed under products and contains the unity."""
        A = self.algebra
        return self.contains_vector(A.one) and self.product(self) <= self

    def nilpotency_index(self):
        """Least ``k`` with ``V^k = 0``, or ``None`` if ``V`` is not nilpotent."""
        if self.is_zero():
            return 1
        power = self
        for k in range(2, self.algebra.dim + 2):
            power = power.product(self)
            if power.is_zero():
                return k
        return None

    def to_json(self):
        """Serialize as the list of basis rows."""
        F = self.algebra.field
        return [[F.to_json(c) for c in row] for row in self.basis]
