# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Bounds for the FC-subalgebra over an infinite base field.

The center is always contained in ``nabla(R)``; over an infinite field every
algebraic unit centralizes ``nabla(R)``. When the centralizer of a sample of
units collapses onto the center, the two bounds determine ``nabla(R)``.
"""

from enum import Enum

from ..algebras.operations import center, centralizer, is_unit, lie_commutator
from ..elements.inverses import unit_shifts
from ..elements.profile import DEFAULT_TORSION_CAP, is_nilpotent, torsion_data
from ..errors import (
    ExhaustedField,
    InconclusiveSandwich,
    NotAUnit,
    UnsupportedCharacteristic,
)


class SandwichStatus(Enum):
    """Whether the bounds coincide."""

    EXACT = "exact"
    INTERVAL = "interval"


class NablaEstimate:
    """``center <= nabla(R) <= centralizer(sample)``."""

    def __init__(self, algebra, lower, upper, sample):
        """Constructor."""
        self.algebra = algebra
        self.lower = lower
        self.upper = upper
        self.sample = sample

    @property
    def status(self):
        """:class:`SandwichStatus` of the estimate."""
        if self.lower == self.upper:
            return SandwichStatus.EXACT
        return SandwichStatus.INTERVAL

    @property
    def is_exact(self):
        """Whether ``nabla(R)`` is determined."""
        return self.status is SandwichStatus.EXACT

    def statement(self):
        """Human readable conclusion."""
        if self.is_exact:
            if self.lower.is_whole():
                return "nabla(R) = Z(A) = A: the algebra is commutative"
            return (
                "nabla(R) = Z(A): the centralizer of algebraic units meets the center"
            )
        return (
            f"Z(A) (dim {self.lower.dim}) <= nabla(R) <= C(sample) "
            f"(dim {self.upper.dim}); enlarge the unit sample"
        )

    def to_dict(self):
        """Serialize the estimate."""
        return {
            "status": self.status.value,
            "lower": {"dim": self.lower.dim, "basis": self.lower.to_json()},
            "upper": {"dim": self.upper.dim, "basis": self.upper.to_json()},
            "certificate": [u.to_json() for u in self.sample],
            "statement": self.statement(),
        }


def _deduplicate(elements):
    seen = set()
    out = []
    for e in elements:
        if e.coords not in seen:
            seen.add(e.coords)
            out.append(e)
    return out


def default_unit_sample(algebra):
    """Deterministic units built from the basis.

    For each basis element ``b``: ``1 + b`` when ``b`` is nilpotent, ``b``
    itself when it is a unit, and ``b - alpha`` for the first nonzero shift
    ``alpha`` that makes it a unit.
    """
    one = algebra.unity
    sample = []
    for b in algebra.basis():
        if b == one:
            continue
        if is_nilpotent(b):
            sample.append(one + b)
            continue
        if is_unit(b):
            sample.append(b)
        try:
            shifts = unit_shifts(b, 2)
        except ExhaustedField:
            continue
        alpha = next(s for s in shifts if not s.is_zero())
        sample.append(b - algebra.scalar(alpha))
    return _deduplicate(sample)


def nabla_sandwich(algebra, sample=None, include_default=True):
    """Sandwich ``nabla(R)`` between the center and a unit centralizer.

    :param sample: Extra units for the upper bound.
    :raises NotAUnit: if a sample element is not invertible.
    :raises UnsupportedCharacteristic: over finite fields.
    """
    if algebra.is_finite:
        raise UnsupportedCharacteristic(
            "The centralizer bound needs an infinite base field; use the fc report"
        )
    units = list(default_unit_sample(algebra)) if include_default else []
    for u in sample or []:
        if not is_unit(u):
            raise NotAUnit(f"Sample element {u.to_json()} is not a unit")
        units.append(u)
    units = _deduplicate(units)
    lower = center(algebra)
    upper = centralizer(algebra, units)
    return NablaEstimate(algebra, lower, upper, units)


def corollary_report(estimate, torsion_units=None, torsion_cap=DEFAULT_TORSION_CAP):
    """Check that torsion units commute with the determined ``nabla(R)``.

    :param torsion_units: Extra units; only those of finite order are used.
    :raises InconclusiveSandwich: if the estimate is an interval.
    """
    if not estimate.is_exact:
        raise InconclusiveSandwich(
            f"Bounds of dimension {estimate.lower.dim} and {estimate.upper.dim} differ"
        )
    candidates = _deduplicate(list(estimate.sample) + list(torsion_units or []))
    torsion = []
    for u in candidates:
        order, _ = torsion_data(u, cap=torsion_cap)
        if order is not None:
            torsion.append((u, order))
    nabla = estimate.upper.elements()
    lower = estimate.lower.elements()
    rows = []
    for u, order in torsion:
        rows.append(
            {
                "unit": u.to_json(),
                "order": order,
                "commutes_with_nabla": all(
                    lie_commutator(u, v).is_zero() for v in nabla
                ),
            }
        )
    central = all(
        lie_commutator(u, v).is_zero() for u in estimate.sample for v in lower
    )
    return {
        "nabla_dim": estimate.upper.dim,
        "torsion_units": rows,
        "torsion_commute": all(r["commutes_with_nabla"] for r in rows),
        "sample_centralizes_lower": central,
        "note": "t(Delta U) abelian and Delta U nilpotent of class at most 2 "
        "under the corollary's hypotheses",
    }
