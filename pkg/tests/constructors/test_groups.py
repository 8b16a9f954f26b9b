# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Finite group table tests."""

import pytest

from invenio_algebras.constructors import (
    FiniteGroupTable,
    bundled_groups,
    quaternion_group,
)
from invenio_algebras.errors import InvalidGroupTable


def test_cyclic():
    """C4 with g_i = g^i."""
    C4 = FiniteGroupTable.cyclic(4)
    assert C4.name == "C4"
    assert C4.identity == 0
    assert C4.inverse(1) == 3
    assert C4.element_order(2) == 2
    assert C4.is_abelian()
    assert C4.labels == ("1", "g", "g^2", "g^3")


def test_symmetric_group(S3):
    """S3 has the identity first and three conjugacy classes."""
    assert S3.identity == 0
    assert not S3.is_abelian()
    assert sorted(len(c) for c in S3.conjugacy_classes()) == [1, 2, 3]
    assert S3.element_order(1) == 2
    assert S3.element_order(3) == 3
    assert S3.mul(1, S3.inverse(1)) == 0


def test_quaternion_group():
    """Q8: one involution, six elements of order four."""
    Q8 = quaternion_group()
    orders = sorted(Q8.element_order(a) for a in range(Q8.order))
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]
    assert len(Q8.conjugacy_classes()) == 5


def test_bundled_groups():
    """The bundled groups have distinct names."""
    names = [g.type_id for g in bundled_groups()]
    assert len(names) == len(set(names))
    assert {"C2", "C8", "S3", "D4", "Q8", "A4"} <= set(names)


@pytest.mark.parametrize(
    "cayley,location",
    [
        ([], "cayley"),
        ([[0, 1], [1]], "cayley/1"),
        ([[0, 1], [0, 1]], "cayley/*/0"),
        ([[0, 2], [1, 0]], "cayley/0"),
        ([[0, 2, 1], [2, 1, 0], [1, 0, 2]], "cayley"),
    ],
)
def test_invalid_tables(cayley, location):
    """Invalid tables are rejected with the offending location."""
    with pytest.raises(InvalidGroupTable) as e:
        FiniteGroupTable(cayley)
    assert e.value.location == location


def test_non_associative_loop():
    """A Latin square with identity but no associativity is not a group."""
    cayley = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(InvalidGroupTable):
        FiniteGroupTable(cayley)
