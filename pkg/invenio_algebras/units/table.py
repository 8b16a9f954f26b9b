# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Enumerated unit groups of algebras over finite fields."""

import itertools
from concurrent.futures import ThreadPoolExecutor

from ..algebras import linalg
from ..algebras.api import AlgElement
from ..errors import EnumerationTooLarge, NotAUnit

DEFAULT_ENUMERATION_CAP = 2**24


def _units_with_leading(algebra, lead):
    """Units whose first coordinate is ``lead``, in lexicographic order."""
    F = algebra.field
    out = []
    for rest in _tail_vectors(algebra):
        coords = (lead,) + rest
        if linalg.is_invertible(F, algebra.left_matrix(coords)):
            out.append(coords)
    return out


def _tail_vectors(algebra):
    return itertools.product(algebra.field.elements(), repeat=algebra.dim - 1)


def enumerate_units(algebra, cap=DEFAULT_ENUMERATION_CAP, threads=1):
    """All units of a finite algebra, ordered lexicographically by coordinates.

    The scan is split by the leading coordinate; the chunks are independent
    and are reassembled in order, so the result does not depend on
    ``threads``.

    :raises EnumerationTooLarge: if the algebra is infinite or has more than
        ``cap`` elements.
    """
    if not algebra.is_finite:
        raise EnumerationTooLarge(
            reason="Cannot enumerate units over an infinite field"
        )
    size = algebra.size
    if size > cap:
        raise EnumerationTooLarge(required=size, cap=cap)
    leads = algebra.field.elements()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda a: _units_with_leading(algebra, a), leads))
    else:
        chunks = [_units_with_leading(algebra, a) for a in leads]
    elements = [AlgElement(algebra, coords) for chunk in chunks for coords in chunk]
    return UnitGroupTable(algebra, elements)


class UnitGroupTable:
    """A finite unit group with index-based group operations.

    Elements are stored in lexicographic coordinate order; products,
    inverses and conjugacy classes are computed on demand and cached.
    """

    def __init__(self, algebra, elements):
        """Constructor."""
        self.algebra = algebra
        self.elements = list(elements)
        self._index = {e.coords: i for i, e in enumerate(self.elements)}
        self._products = {}
        self._inverses = {}
        self._classes = None
        self._orders = {}
        try:
            self.identity = self._index[algebra.unity.coords]
        except KeyError as e:
            raise NotAUnit("The unity is missing from the unit list") from e

    @property
    def order(self):
        """Group order."""
        return len(self.elements)

    def __len__(self):
        """Group order."""
        return len(self.elements)

    def index(self, element):
        """Position of a unit.

        :raises NotAUnit: if ``element`` is not in the table.
        """
        try:
            return self._index[element.coords]
        except KeyError as e:
            raise NotAUnit(f"{element.to_json()} is not a unit") from e

    def __contains__(self, element):
        """Membership of an algebra element."""
        return element.coords in self._index

    #
    # Group operations
    #
    def mul(self, a, b):
        """Index of the product ``U[a] U[b]``."""
        key = (a, b)
        if key not in self._products:
            product = self.elements[a] * self.elements[b]
            self._products[key] = self._index[product.coords]
        return self._products[key]

    def inverse(self, a):
        """Index of ``U[a]^-1``."""
        if a not in self._inverses:
            current, previous = a, self.identity
            while current != self.identity:
                previous = current
                current = self.mul(current, a)
            self._inverses[a] = previous
            self._inverses[previous] = a
        return self._inverses[a]

    def conjugate(self, a, b):
        """Index of ``b^-1 a b``."""
        return self.mul(self.mul(self.inverse(b), a), b)

    def commutator(self, a, b):
        """Index of the group commutator ``(a, b) = a^-1 b^-1 a b``."""
        return self.mul(self.mul(self.inverse(a), self.inverse(b)), self.mul(a, b))

    def element_order(self, a):
        """Multiplicative order of ``U[a]``."""
        if a not in self._orders:
            k, current = 1, a
            while current != self.identity:
                current = self.mul(current, a)
                k += 1
            self._orders[a] = k
        return self._orders[a]

    def commutes(self, a, b):
        """Whether ``U[a]`` and ``U[b]`` commute."""
        return self.mul(a, b) == self.mul(b, a)

    def is_abelian(self):
        """Whether the group is abelian."""
        n = self.order
        return all(self.commutes(a, b) for a in range(n) for b in range(a + 1, n))

    #
    # Conjugacy
    #
    def conjugacy_classes(self):
        """Classes as sorted index lists, ordered by their least member."""
        if self._classes is None:
            seen = set()
            classes = []
            for a in range(self.order):
                if a in seen:
                    continue
                cls = sorted({self.conjugate(a, b) for b in range(self.order)})
                seen.update(cls)
                classes.append(cls)
            self._classes = classes
        return self._classes

    def class_of(self, a):
        """The conjugacy class containing ``a``."""
        for cls in self.conjugacy_classes():
            if a in cls:
                return cls
        raise KeyError(a)

    def centralizer_order(self, a):
        """``|C_U(a)|`` from the orbit-stabilizer relation."""
        return self.order // len(self.class_of(a))

    def centralizer(self, a):
        """Indices of the centralizer of ``U[a]``."""
        return [b for b in range(self.order) if self.commutes(a, b)]

    def center(self):
        """Indices of the center ``zeta(U)``."""
        return [a for cls in self.conjugacy_classes() if len(cls) == 1 for a in cls]

    def to_json(self, indices=None):
        """Serialize the selected elements (all by default)."""
        if indices is None:
            indices = range(self.order)
        return [self.elements[i].to_json() for i in indices]


def conjugacy_data(table):
    """Classes with representatives, sizes, centralizer orders and indices.

    Representatives are the lexicographically least class members.
    """
    classes = table.conjugacy_classes()
    n = table.order
    rows = []
    for cls in classes:
        size = len(cls)
        rows.append(
            {
                "representative": cls[0],
                "members": list(cls),
                "size": size,
                "centralizer_order": n // size,
                "centralizer_index": size,
            }
        )
    return {
        "order": n,
        "class_count": len(classes),
        "class_sizes": [len(cls) for cls in classes],
        "classes": rows,
    }
