# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Subgroup and series tests."""

from invenio_algebras.units import enumerate_units
from invenio_algebras.units.series import (
    commutator_subgroup,
    derived_series,
    derived_subgroup_by_closure,
    generated_subgroup,
    generating_set,
    is_normal,
    lower_central_series,
    normal_closure,
    series_report,
)


def test_general_linear_group(m2_f2):
    """GL2(F2) is solvable of derived length two and not nilpotent."""
    table = enumerate_units(m2_f2)
    assert [len(t) for t in derived_series(table)] == [6, 3, 1]
    assert [len(t) for t in lower_central_series(table)] == [6, 3]
    report = series_report(table)
    assert report.is_solvable
    assert report.derived_length == 2
    assert not report.is_nilpotent
    assert report.nilpotency_class is None
    assert not report.commutators_unipotent
    assert not report.commutators_central
    assert not report.torsion_abelian


def test_commutator_subgroup_two_ways(m2_f2):
    """All commutators and the closure of generator commutators agree."""
    table = enumerate_units(m2_f2)
    derived = commutator_subgroup(table)
    assert derived_subgroup_by_closure(table) == derived
    assert is_normal(table, derived)
    assert len(generating_set(table)) == 2
    assert generated_subgroup(table, generating_set(table)) == list(range(6))


def test_normal_closure(m2_f2, matrix):
    """The normal closure of a transposition is the whole group."""
    table = enumerate_units(m2_f2)
    transposition = table.index(matrix(m2_f2, [0, 1], [1, 0]))
    assert len(generated_subgroup(table, [transposition])) == 2
    assert not is_normal(table, generated_subgroup(table, [transposition]))
    assert normal_closure(table, [transposition]) == list(range(6))


def test_triangular(t2_f3):
    """U(T2(F3)): commutators are unipotent but not central."""
    table = enumerate_units(t2_f3)
    report = series_report(table)
    assert [len(t) for t in report.derived] == [12, 3, 1]
    assert report.derived_length == 2
    assert report.nilpotency_class is None
    assert report.commutators_unipotent
    assert not report.commutators_central
    data = report.to_dict()
    assert data["derived_series"] == [12, 3, 1]
    assert data["unipotent"] == [True, True, True]


def test_abelian(t2_f2):
    """U(T2(F2)) has order two, so every series is trivial."""
    report = series_report(enumerate_units(t2_f2))
    assert report.derived_length == 1
    assert report.nilpotency_class == 1
    assert report.commutators_central
    assert report.torsion_abelian
