# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""FC-subalgebra sandwich tests."""

import pytest

from invenio_algebras.errors import (
    InconclusiveSandwich,
    NotAUnit,
    UnsupportedCharacteristic,
)
from invenio_algebras.sandwich import (
    SandwichStatus,
    corollary_report,
    default_unit_sample,
    nabla_sandwich,
)


@pytest.mark.parametrize("name,dim", [("m2_q", 1), ("t2_q", 1), ("q_c2", 2)])
def test_exact(request, name, dim):
    """The default sample closes the sandwich."""
    estimate = nabla_sandwich(request.getfixturevalue(name))
    assert estimate.status is SandwichStatus.EXACT
    assert estimate.is_exact
    assert estimate.upper.dim == estimate.lower.dim == dim


def test_commutative_statement(q_c2, m2_q):
    """The statement distinguishes commutative algebras."""
    assert "commutative" in nabla_sandwich(q_c2).statement()
    assert "commutative" not in nabla_sandwich(m2_q).statement()
    assert nabla_sandwich(m2_q).to_dict()["status"] == "exact"


def test_default_sample(m2_q, matrix):
    """Basis elements become units by shifting or adding one."""
    sample = default_unit_sample(m2_q)
    assert matrix(m2_q, [1, 1], [0, 1]) in sample
    assert matrix(m2_q, [2, 0], [0, 1]) in sample
    assert m2_q.unity not in sample
    assert len(set(sample)) == len(sample)


def test_interval(m2_q):
    """Without a sample the upper bound is the whole algebra."""
    estimate = nabla_sandwich(m2_q, include_default=False)
    assert estimate.status is SandwichStatus.INTERVAL
    assert estimate.lower.dim == 1
    assert estimate.upper.is_whole()
    assert "enlarge" in estimate.statement()
    with pytest.raises(InconclusiveSandwich) as e:
        corollary_report(estimate)
    assert e.value.exit_code == 1


def test_explicit_sample(m2_q, matrix):
    """Samples must be units."""
    s = matrix(m2_q, [0, 1], [1, 0])
    t = matrix(m2_q, [1, 1], [0, 1])
    estimate = nabla_sandwich(m2_q, sample=[s, t], include_default=False)
    assert estimate.is_exact
    with pytest.raises(NotAUnit):
        nabla_sandwich(m2_q, sample=[matrix(m2_q, [1, 0], [0, 0])])


def test_finite_fields_refused(m2_f2):
    """The bound needs an infinite field."""
    with pytest.raises(UnsupportedCharacteristic):
        nabla_sandwich(m2_f2)


def test_corollary(m2_q, matrix):
    """Torsion units commute with the scalars."""
    s = matrix(m2_q, [0, 1], [1, 0])
    report = corollary_report(nabla_sandwich(m2_q), torsion_units=[s])
    assert report["nabla_dim"] == 1
    assert report["torsion_units"] == [
        {"unit": s.to_json(), "order": 2, "commutes_with_nabla": True}
    ]
    assert report["torsion_commute"]
    assert report["sample_centralizes_lower"]
