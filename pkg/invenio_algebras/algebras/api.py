# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Structure-constant algebras and their elements."""

import itertools

from ..arith.fields import FieldScalar
from ..errors import AlgebraMismatch, FieldMismatch, InvalidAlgebra
from . import linalg


class AlgebraSpec:
    """A finite-dimensional unital associative algebra.

    The product of basis elements is ``b_i b_j = sum_k c[i][j][k] b_k``. The
    structure constants are kept sparse internally; the specification is
    immutable after construction.
    """

    def __init__(self, field, constants, one, labels=None, validate=True, raw=False):
        """Constructor.

        :param field: The base :class:`FieldSpec`.
        :param constants: ``n x n x n`` nested lists of scalars.
        :param one: Coordinates of the unity.
        :param labels: Optional basis labels for reporting.
        :param validate: Check associativity and unity on the basis.
        :param raw: The scalars are already raw field values.
        """
        n = len(constants)
        if n == 0:
            raise InvalidAlgebra(
                "An algebra needs dimension at least 1", location="dim"
            )
        self.field = field
        self.dim = n
        products = []
        for i, row in enumerate(constants):
            if len(row) != n:
                raise InvalidAlgebra(
                    f"Row {i} of the structure constants has length {len(row)}",
                    location=f"constants/{i}",
                )
            prow = []
            for j, vec in enumerate(row):
                if len(vec) != n:
                    raise InvalidAlgebra(
                        f"Product b{i}*b{j} has {len(vec)} coordinates",
                        location=f"constants/{i}/{j}",
                    )
                values = vec if raw else [field.coerce(c) for c in vec]
                prow.append(
                    tuple((k, c) for k, c in enumerate(values) if not field.is_zero(c))
                )
            products.append(tuple(prow))
        self._products = tuple(products)
        if len(one) != n:
            raise InvalidAlgebra("Unity has the wrong length", location="one")
        self.one = tuple(one) if raw else tuple(field.coerce(c) for c in one)
        if labels is not None and len(labels) != n:
            raise InvalidAlgebra("Wrong number of basis labels", location="labels")
        if labels is None:
            labels = [f"b{i}" for i in range(n)]
        self.labels = tuple(labels)
        self.group = None
        self.cocycle = None
        self.matrix_size = None
        self.matrix_index = None
        if validate:
            self.validate()

    @classmethod
    def from_products(cls, field, products, one, labels=None, validate=True):
        """Build from a sparse table ``products[i][j] = {k: c}`` of raw values."""
        n = len(products)
        constants = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for i, row in enumerate(products):
            for j, entry in enumerate(row):
                for k, c in entry.items():
                    constants[i][j][k] = c
        return cls(field, constants, one, labels=labels, validate=validate, raw=True)

    #
    # Validation
    #
    def validate(self):
        """Check associativity on basis triples and the unity axioms."""
        n = self.dim
        basis = [self.basis_vector(i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                bij = self.product_vector(i, j)
                for k in range(n):
                    left = self.mul_vectors(bij, basis[k])
                    right = self.mul_vectors(basis[i], self.product_vector(j, k))
                    if left != right:
                        raise InvalidAlgebra(
                            f"Associativity fails on basis triple ({i}, {j}, {k})",
                            location="constants",
                        )
        for i in range(n):
            if self.mul_vectors(self.one, basis[i]) != basis[i] or (
                self.mul_vectors(basis[i], self.one) != basis[i]
            ):
                raise InvalidAlgebra(
                    f"Unity does not act trivially on basis element {i}",
                    location="one",
                )

    #
    # Raw vector arithmetic
    #
    def basis_vector(self, i):
        """Raw coordinates of ``b_i``."""
        F = self.field
        v = [F.zero] * self.dim
        v[i] = F.one
        return v

    def zero_vector(self):
        """Raw zero coordinates."""
        return [self.field.zero] * self.dim

    def product_vector(self, i, j):
        """Raw coordinates of ``b_i b_j``."""
        v = self.zero_vector()
        for k, c in self._products[i][j]:
            v[k] = c
        return v

    def constant(self, i, j, k):
        """Structure constant ``c[i][j][k]``."""
        for kk, c in self._products[i][j]:
            if kk == k:
                return c
        return self.field.zero

    def constants(self):
        """Dense nested list of the structure constants."""
        n = self.dim
        return [[self.product_vector(i, j) for j in range(n)] for i in range(n)]

    def mul_vectors(self, u, v):
        """Raw product of two coordinate vectors."""
        F = self.field
        out = [F.zero] * self.dim
        nz_v = [(j, b) for j, b in enumerate(v) if not F.is_zero(b)]
        for i, a in enumerate(u):
            if F.is_zero(a):
                continue
            row = self._products[i]
            for j, b in nz_v:
                ab = F.mul(a, b)
                for k, c in row[j]:
                    out[k] = F.add(out[k], F.mul(ab, c))
        return out

    def left_matrix(self, u):
        """Matrix of ``x -> u x`` acting on column coordinate vectors."""
        columns = [self.mul_vectors(u, self.basis_vector(j)) for j in range(self.dim)]
        return linalg.transpose(columns)

    def right_matrix(self, u):
        """Matrix of ``x -> x u`` acting on column coordinate vectors."""
        columns = [self.mul_vectors(self.basis_vector(i), u) for i in range(self.dim)]
        return linalg.transpose(columns)

    #
    # Elements
    #
    def element(self, coords):
        """Element from coordinates given as coercible scalars."""
        if len(coords) != self.dim:
            raise AlgebraMismatch(f"Expected {self.dim} coordinates, got {len(coords)}")
        if any(isinstance(c, FieldScalar) and c.field != self.field for c in coords):
            raise FieldMismatch(f"Coordinates are not all over {self.field}")
        return AlgElement(self, tuple(self.field.coerce(c) for c in coords))

    def basis_element(self, i):
        """The basis element ``b_i``."""
        return AlgElement(self, tuple(self.basis_vector(i)))

    def basis(self):
        """All basis elements in order."""
        return [self.basis_element(i) for i in range(self.dim)]

    @property
    def unity(self):
        """The unity as an element."""
        return AlgElement(self, self.one)

    @property
    def zero(self):
        """The zero element."""
        return AlgElement(self, tuple(self.zero_vector()))

    def scalar(self, value):
        """The element ``value * 1``."""
        c = self.field.coerce(value)
        return AlgElement(self, tuple(self.field.mul(c, a) for a in self.one))

    def label_index(self, label):
        """Index of a basis label, or ``None``."""
        try:
            return self.labels.index(label)
        except ValueError:
            return None

    @property
    def is_finite(self):
        """Whether the algebra has finitely many elements."""
        return self.field.is_finite

    @property
    def size(self):
        """Number of elements ``q^n`` (``None`` over the rationals)."""
        if not self.field.is_finite:
            return None
        return self.field.order**self.dim

    def iter_vectors(self):
        """All raw coordinate tuples in lexicographic order (finite fields)."""
        return itertools.product(self.field.elements(), repeat=self.dim)

    def iter_elements(self):
        """All elements in lexicographic coordinate order (finite fields)."""
        for coords in self.iter_vectors():
            yield AlgElement(self, coords)

    #
    # Identity
    #
    def _key(self):
        return (self.field, self._products, self.one)

    def __eq__(self, other):
        """Algebras are equal when field, structure constants and unity agree."""
        return isinstance(other, AlgebraSpec) and self._key() == other._key()

    def __hash__(self):
        """Hash over the presentation."""
        return hash(self._key())

    def __repr__(self):
        """Return repr(self)."""
        return f"<AlgebraSpec dim={self.dim} over {self.field!r}>"


class AlgElement:
    """A coordinate vector over the basis of an :class:`AlgebraSpec`."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        """Constructor (``coords`` are raw, reduced scalars)."""
        self.algebra = algebra
        self.coords = tuple(coords)

    @property
    def field(self):
        """The base field."""
        return self.algebra.field

    def _same(self, other):
        if not isinstance(other, AlgElement):
            return self.algebra.scalar(other)
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch("Elements belong to different algebras")
        return other

    def __add__(self, other):
        """Return self + other."""
        other = self._same(other)
        F = self.field
        coords = tuple(F.add(a, b) for a, b in zip(self.coords, other.coords))
        return AlgElement(self.algebra, coords)

    __radd__ = __add__

    def __sub__(self, other):
        """Return self - other."""
        other = self._same(other)
        F = self.field
        coords = tuple(F.sub(a, b) for a, b in zip(self.coords, other.coords))
        return AlgElement(self.algebra, coords)

    def __rsub__(self, other):
        """Return other - self."""
        return self._same(other) - self

    def __neg__(self):
        """Return -self."""
        F = self.field
        return AlgElement(self.algebra, tuple(F.neg(a) for a in self.coords))

    def __mul__(self, other):
        """Product in the algebra, or scaling by a field scalar."""
        if isinstance(other, AlgElement):
            other = self._same(other)
            return AlgElement(
                self.algebra, tuple(self.algebra.mul_vectors(self.coords, other.coords))
            )
        return self.scale(other)

    def __rmul__(self, other):
        """Scaling from the left by a field scalar."""
        return self.scale(other)

    def __truediv__(self, other):
        """Division by a nonzero field scalar."""
        F = self.field
        return self.scale(FieldScalar(F, F.inv(F.coerce(other))))

    def __pow__(self, n):
        """Nonnegative power (negative powers invert first)."""
        base = self
        if n < 0:
            from .operations import invert

            base, n = invert(self), -n
        result = self.algebra.unity
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, value):
        """Multiply by a scalar."""
        F = self.field
        c = F.coerce(value)
        return AlgElement(self.algebra, tuple(F.mul(c, a) for a in self.coords))

    def is_zero(self):
        """Whether the element is zero."""
        return all(self.field.is_zero(c) for c in self.coords)

    def __bool__(self):
        """Nonzero elements are truthy."""
        return not self.is_zero()

    def scalars(self):
        """Coordinates as :class:`FieldScalar` objects."""
        return [FieldScalar(self.field, c) for c in self.coords]

    def sort_key(self):
        """Lexicographic key on the coordinates."""
        F = self.field
        return tuple(F.sort_key(c) for c in self.coords)

    def __eq__(self, other):
        """Equal when in equal algebras with equal coordinates."""
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.coords == other.coords and (
            self.algebra is other.algebra or self.algebra == other.algebra
        )

    def __hash__(self):
        """Hash over the coordinates."""
        return hash(self.coords)

    def __repr__(self):
        """Return repr(self)."""
        return f"AlgElement({self.to_json()!r})"

    def to_json(self):
        """Serialize the coordinates."""
        return [self.field.to_json(c) for c in self.coords]
