# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Subgroups, commutator subgroups and series of enumerated unit groups."""

from ..elements.profile import is_nilpotent


def generated_subgroup(table, generators):
    """Indices of the subgroup generated by ``generators``, sorted.

    In a finite group the closure under products already contains inverses.
    """
    members = {table.identity}
    frontier = [table.identity]
    gens = sorted(set(generators))
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = table.mul(a, g)
                if b not in members:
                    members.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(members)


def generating_set(table, subgroup=None):
    """A small generating set, chosen greedily in index order."""
    members = range(table.order) if subgroup is None else subgroup
    gens = []
    current = {table.identity}
    for a in members:
        if a not in current:
            gens.append(a)
            current = set(generated_subgroup(table, gens))
    return gens


def normal_closure(table, elements, ambient=None):
    """Smallest subgroup of ``ambient`` normal in it and containing ``elements``."""
    conjugators = generating_set(table, ambient)
    members = set(generated_subgroup(table, elements))
    while True:
        extra = {table.conjugate(a, b) for a in members for b in conjugators} - members
        if not extra:
            return sorted(members)
        members = set(generated_subgroup(table, members | extra))


def commutator_subgroup(table, first=None, second=None):
    """The subgroup ``[first, second]`` generated by all group commutators."""
    first = range(table.order) if first is None else first
    second = range(table.order) if second is None else second
    commutators = {table.commutator(a, b) for a in first for b in second}
    return generated_subgroup(table, commutators)


def derived_subgroup_by_closure(table, subgroup=None):
    """Derived subgroup as the normal closure of generator commutators."""
    gens = generating_set(table, subgroup)
    commutators = {table.commutator(a, b) for a in gens for b in gens}
    return normal_closure(table, commutators, ambient=subgroup)


def derived_series(table, subgroup=None):
    """``G > G' > G'' > ...`` until the terms stabilize."""
    current = list(range(table.order)) if subgroup is None else sorted(subgroup)
    series = [current]
    while len(current) > 1:
        nxt = commutator_subgroup(table, current, current)
        if nxt == current:
            break
        series.append(nxt)
        current = nxt
    return series


def lower_central_series(table, subgroup=None):
    """``G > [G, G] > [[G, G], G] > ...`` until the terms stabilize."""
    group = list(range(table.order)) if subgroup is None else sorted(subgroup)
    current = group
    series = [current]
    while len(current) > 1:
        nxt = commutator_subgroup(table, current, group)
        if nxt == current:
            break
        series.append(nxt)
        current = nxt
    return series


def is_normal(table, subgroup, ambient=None):
    """Whether ``subgroup`` is normal in ``ambient`` (the whole group by default)."""
    members = set(subgroup)
    conjugators = range(table.order) if ambient is None else ambient
    return all(table.conjugate(a, b) in members for a in subgroup for b in conjugators)


class SeriesReport:
    """Derived and lower central series of a unit group with unipotence flags."""

    def __init__(self, table, derived, lower_central, commutators, unipotent, central):
        """Constructor."""
        self.table = table
        self.derived = derived
        self.lower_central = lower_central
        self.commutator_subgroup = commutators
        self.unipotent = unipotent
        self.central = central

    @property
    def is_solvable(self):
        """Whether the derived series reaches the trivial group."""
        return len(self.derived[-1]) == 1

    @property
    def derived_length(self):
        """Number of proper steps to the trivial group, ``None`` if unsolvable."""
        return len(self.derived) - 1 if self.is_solvable else None

    @property
    def is_nilpotent(self):
        """Whether the lower central series reaches the trivial group."""
        return len(self.lower_central[-1]) == 1

    @property
    def nilpotency_class(self):
        """Length of the lower central series, ``None`` if not nilpotent."""
        return len(self.lower_central) - 1 if self.is_nilpotent else None

    @property
    def commutators_unipotent(self):
        """Every commutator-subgroup element is unipotent."""
        return all(self.unipotent.values())

    @property
    def commutators_central(self):
        """Every commutator-subgroup element is central in the group."""
        return all(self.central.values())

    @property
    def torsion_abelian(self):
        """Whether ``t(Delta U)`` is abelian; for a finite group it is the group."""
        return self.table.is_abelian()

    def to_dict(self):
        """Serialize the report."""
        table = self.table
        return {
            "derived_series": [len(term) for term in self.derived],
            "derived_length": self.derived_length,
            "lower_central_series": [len(term) for term in self.lower_central],
            "nilpotency_class": self.nilpotency_class,
            "commutator_subgroup": table.to_json(self.commutator_subgroup),
            "commutators_unipotent": self.commutators_unipotent,
            "commutators_central": self.commutators_central,
            "torsion_abelian": self.torsion_abelian,
            "unipotent": [self.unipotent[i] for i in self.commutator_subgroup],
            "central": [self.central[i] for i in self.commutator_subgroup],
        }


def series_report(table, subgroup=None):
    """Series data for ``subgroup`` (the whole unit group by default)."""
    derived = derived_series(table, subgroup)
    lower = lower_central_series(table, subgroup)
    group = None if subgroup is None else sorted(subgroup)
    commutators = commutator_subgroup(table, group, group)
    one = table.algebra.unity
    unipotent = {i: is_nilpotent(table.elements[i] - one) for i in commutators}
    central = {
        i: all(table.commutes(i, b) for b in range(table.order)) for i in commutators
    }
    return SeriesReport(table, derived, lower, commutators, unipotent, central)
