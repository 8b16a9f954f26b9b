# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Pairwise distinct conjugates ``(g - alpha)^-1 a (g - alpha)``."""

from ..algebras.operations import lie_commutator, try_invert
from ..arith.fields import FieldScalar
from ..elements.inverses import unit_shifts
from ..errors import AlgebraMismatch, CommutingPair, ShiftNotUnit


class WitnessList:
    """Conjugates of ``a`` by the shifted units ``g - alpha_i``."""

    def __init__(self, a, g, shifts, conjugates, distinct):
        """Constructor.

        :param distinct: ``{(i, j): bool}`` for every pair ``i < j``.
        """
        self.a = a
        self.g = g
        self.shifts = shifts
        self.conjugates = conjugates
        self.distinct = distinct

    def __len__(self):
        """Number of conjugates."""
        return len(self.conjugates)

    @property
    def all_distinct(self):
        """Whether every pair of conjugates differs."""
        return all(self.distinct.values())

    def to_dict(self):
        """Serialize the witness list."""
        return {
            "a": self.a.to_json(),
            "g": self.g.to_json(),
            "shifts": [s.to_json() for s in self.shifts],
            "conjugates": [c.to_json() for c in self.conjugates],
            "pairs": [[i, j, self.distinct[(i, j)]] for i, j in sorted(self.distinct)],
            "all_distinct": self.all_distinct,
        }


def _conjugate(a, g, alpha):
    shifted = g - g.algebra.scalar(alpha)
    inverse = try_invert(shifted)
    if inverse is None:
        raise ShiftNotUnit(f"g - {alpha.to_json()} is not a unit")
    return inverse * a * shifted


def _pairwise_distinct(conjugates):
    return {
        (i, j): conjugates[i] != conjugates[j]
        for i in range(len(conjugates))
        for j in range(i + 1, len(conjugates))
    }


def conjugate_witnesses(a, g, k=3, shifts=None):
    """``k`` conjugates of ``a`` under shifts of ``g``, pairwise compared.

    :param shifts: Scalars to use; defaults to :func:`unit_shifts`.
    :raises CommutingPair: if ``a g = g a``.
    :raises ExhaustedField: if the field has too few shifts.
    """
    if a.algebra != g.algebra:
        raise AlgebraMismatch("Elements belong to different algebras")
    if lie_commutator(a, g).is_zero():
        raise CommutingPair("[a, g] = 0, every conjugate of a by g - alpha is a")
    F = g.field
    if shifts is None:
        shifts = unit_shifts(g, k)
    else:
        shifts = [s if isinstance(s, FieldScalar) else F.scalar(s) for s in shifts]
    conjugates = [_conjugate(a, g, alpha) for alpha in shifts]
    return WitnessList(a, g, list(shifts), conjugates, _pairwise_distinct(conjugates))


def verify_witnesses(witnesses):
    """Recompute every conjugate and the distinctness flags from scratch."""
    conjugates = [_conjugate(witnesses.a, witnesses.g, s) for s in witnesses.shifts]
    return (
        conjugates == witnesses.conjugates
        and _pairwise_distinct(conjugates) == witnesses.distinct
    )
