# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Unit group enumeration tests."""

import pytest

from invenio_algebras.errors import EnumerationTooLarge, NotAUnit
from invenio_algebras.units import conjugacy_data, enumerate_units


@pytest.mark.parametrize(
    "name,order",
    [("f2_c2", 2), ("m2_f2", 6), ("t2_f2", 2), ("t2_f3", 12)],
)
def test_unit_orders(request, name, order):
    """Unit group orders of small algebras."""
    table = enumerate_units(request.getfixturevalue(name))
    assert table.order == order
    assert len(table) == order


def test_lexicographic_order(f2_c2):
    """Units are listed by coordinates; U(F2 C2) = {1, g}."""
    table = enumerate_units(f2_c2)
    assert table.to_json() == [[[0], [1]], [[1], [0]]]
    assert table.elements[table.identity] == f2_c2.unity


def test_threads_do_not_change_the_result(t2_f3):
    """Parallel enumeration reassembles the chunks in order."""
    threaded = enumerate_units(t2_f3, threads=3)
    assert threaded.elements == enumerate_units(t2_f3).elements


def test_caps(m2_f2, m2_q):
    """Infinite or too large algebras are refused."""
    with pytest.raises(EnumerationTooLarge) as e:
        enumerate_units(m2_f2, cap=8)
    assert e.value.exit_code == 1
    with pytest.raises(EnumerationTooLarge):
        enumerate_units(m2_q)


def test_general_linear_group(m2_f2):
    """GL2(F2) is S3."""
    table = enumerate_units(m2_f2)
    assert not table.is_abelian()
    orders = sorted(table.element_order(a) for a in range(table.order))
    assert orders == [1, 2, 2, 2, 3, 3]
    assert table.center() == [table.identity]
    for a in range(table.order):
        assert table.mul(a, table.inverse(a)) == table.identity
        assert table.centralizer_order(a) == len(table.centralizer(a))
    with pytest.raises(NotAUnit):
        table.index(m2_f2.basis_element(0))
    assert m2_f2.basis_element(0) not in table


def test_conjugacy_data(m2_f2):
    """Classes of sizes 1, 2 and 3 with matching centralizers."""
    data = conjugacy_data(enumerate_units(m2_f2))
    assert data["order"] == 6
    assert data["class_count"] == 3
    assert sorted(data["class_sizes"]) == [1, 2, 3]
    for row in data["classes"]:
        assert row["size"] * row["centralizer_order"] == 6
        assert row["representative"] == min(row["members"])
