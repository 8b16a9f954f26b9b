# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Quotients of algebras by two-sided ideals."""

from ..errors import NotAnIdeal
from .api import AlgebraSpec, AlgElement


class Projection:
    """The canonical map ``A -> A / I``.

    The quotient basis is the image of the standard basis vectors ``b_c``
    whose index ``c`` is not a pivot column of the ideal's row-reduced basis.
    """

    def __init__(self, source, ideal, target, columns):
        """Constructor."""
        self.source = source
        self.ideal = ideal
        self.target = target
        self.columns = tuple(columns)

    def vector(self, v):
        """Image of raw coordinates."""
        reduced = self.ideal.reduce(v)
        return [reduced[c] for c in self.columns]

    def __call__(self, element):
        """Image of an element."""
        return AlgElement(self.target, tuple(self.vector(element.coords)))

    def lift(self, element):
        """A preimage of a quotient element (supported on the complement)."""
        v = self.source.zero_vector()
        for c, value in zip(self.columns, element.coords):
            v[c] = value
        return AlgElement(self.source, tuple(v))


def quotient(algebra, ideal):
    """The quotient algebra ``A / I`` and its projection.

    :raises NotAnIdeal: if ``ideal`` is not a proper two-sided ideal.
    """
    if not ideal.is_ideal():
        raise NotAnIdeal(f"Subspace of dimension {ideal.dim} is not a two-sided ideal")
    if ideal.is_whole():
        raise NotAnIdeal("Cannot take the quotient by the whole algebra")
    pivots = set(ideal.pivots)
    columns = [c for c in range(algebra.dim) if c not in pivots]

    def project(v):
        reduced = ideal.reduce(v)
        return [reduced[c] for c in columns]

    constants = [
        [project(algebra.product_vector(a, b)) for b in columns] for a in columns
    ]
    labels = [algebra.labels[c] for c in columns]
    target = AlgebraSpec(
        algebra.field, constants, project(algebra.one), labels=labels, raw=True
    )
    return target, Projection(algebra, ideal, target, columns)
