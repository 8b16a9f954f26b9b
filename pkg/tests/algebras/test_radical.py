# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Jacobson radical tests."""

import pytest

from invenio_algebras.algebras import (
    AlgebraSpec,
    dickson_radical,
    iterated_trace_radical,
    jacobson_radical,
    quasi_regular_radical,
    quotient,
)
from invenio_algebras.algebras.subspaces import Subspace
from invenio_algebras.arith import prime_field
from invenio_algebras.bundled import bundled_examples
from invenio_algebras.constructors import (
    bundled_groups,
    group_algebra,
    triangular_algebra,
)
from invenio_algebras.errors import (
    EnumerationTooLarge,
    NotAnIdeal,
    UnsupportedCharacteristic,
)


def test_group_algebra_in_characteristic_two(f2_c2):
    """J(F2 C2) is spanned by 1 + g."""
    J = jacobson_radical(f2_c2)
    assert J.dim == 1
    assert f2_c2.element([1, 1]) in J
    assert J.nilpotency_index() == 2
    assert quasi_regular_radical(f2_c2) == J


def test_matrix_algebra_is_semisimple(m2_f2, q_c2):
    """M2(F2) and Q C2 have zero radical."""
    assert jacobson_radical(m2_f2).dim == 0
    assert jacobson_radical(m2_f2, method="enumeration").is_zero()
    J = jacobson_radical(q_c2)
    assert J.is_zero()
    assert J.nilpotency_index() == 1


def test_triangular(t2_f3, t2_q):
    """J(T2(F)) is the strictly upper triangular part."""
    J = jacobson_radical(t2_f3)
    assert J.dim == 1
    assert t2_f3.basis_element(1) in J
    assert jacobson_radical(t2_f3, method="enumeration") == J
    J = dickson_radical(t2_q)
    assert J == Subspace.from_elements(t2_q, [t2_q.basis_element(1)])
    assert J.is_ideal()


def test_nilpotency_index(GF2):
    """The radical of T3 has nilpotency index three."""
    J = jacobson_radical(triangular_algebra(GF2, 3))
    assert J.dim == 3
    assert J.nilpotency_index() == 3


def test_methods_agree(S3, GF2, GF4, C2):
    """Trace and enumeration agree on F2 S3 and GF(4) C2."""
    A = group_algebra(GF2, S3)
    J = iterated_trace_radical(A)
    assert J.dim == 1
    assert quasi_regular_radical(A) == J
    B = group_algebra(GF4, C2)
    J = iterated_trace_radical(B)
    assert J.dim == 1
    assert B.element([1, 1]) in J
    assert quasi_regular_radical(B) == J


def test_dual_numbers(QQ):
    """The trace form kernel of Q[e] / (e^2) is spanned by e."""
    A = AlgebraSpec(QQ, [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [1, 0])
    assert jacobson_radical(A).dim == 1


def test_method_availability(m2_f2, m2_q):
    """Methods refuse fields and sizes they cannot handle."""
    with pytest.raises(UnsupportedCharacteristic):
        jacobson_radical(m2_f2, method="dickson")
    with pytest.raises(UnsupportedCharacteristic):
        jacobson_radical(m2_q, method="trace")
    with pytest.raises(UnsupportedCharacteristic):
        jacobson_radical(m2_f2, method="enumeration", enumeration_cap=8)
    with pytest.raises(EnumerationTooLarge):
        quasi_regular_radical(m2_f2, cap=8)
    with pytest.raises(ValueError):
        jacobson_radical(m2_f2, method="guess")


def test_quotient_by_radical(t2_f3):
    """T2(F3) / J is the commutative, semisimple F3 x F3."""
    J = jacobson_radical(t2_f3)
    residue, project = quotient(t2_f3, J)
    assert residue.dim == 2
    assert residue.labels == ("E11", "E22")
    assert jacobson_radical(residue).is_zero()
    u = t2_f3.element([1, 1, 2])
    assert project(u).to_json() == [[1], [2]]
    assert project(project.lift(project(u))) == project(u)


def test_quotient_needs_ideal(m2_q):
    """Only proper two-sided ideals can be factored out."""
    with pytest.raises(NotAnIdeal):
        quotient(m2_q, Subspace.from_elements(m2_q, [m2_q.basis_element(0)]))
    with pytest.raises(NotAnIdeal):
        quotient(m2_q, Subspace.whole(m2_q))


def finite_algebras():
    """Finite bundled examples and the group algebras F2 G of bundled groups."""
    for example in bundled_examples():
        algebra = example.load().algebra
        if algebra.is_finite:
            yield pytest.param(algebra, id=example.type_id)
    for group in bundled_groups():
        algebra = group_algebra(prime_field(2), group)
        yield pytest.param(algebra, id=f"F2[{group.type_id}]")


@pytest.mark.parametrize("algebra", finite_algebras())
def test_radical_against_enumeration(algebra):
    """J matches the quasi-regular ideal, is nilpotent and leaves no radical."""
    J = jacobson_radical(algebra)
    assert quasi_regular_radical(algebra) == J
    assert J.is_ideal()
    assert J.power(algebra.dim).is_zero()
    if not J.is_zero():
        residue, _ = quotient(algebra, J)
        assert jacobson_radical(residue).is_zero()
