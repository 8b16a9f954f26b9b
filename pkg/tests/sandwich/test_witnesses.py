# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Conjugate witness tests."""

import random
from fractions import Fraction

import pytest

from invenio_algebras.constructors import group_algebra
from invenio_algebras.errors import (
    AlgebraMismatch,
    CommutingPair,
    ExhaustedField,
    ShiftNotUnit,
)
from invenio_algebras.sandwich import conjugate_witnesses, verify_witnesses


@pytest.fixture(scope="module")
def pair(m2_q, matrix):
    """a = E12 and g = diag(1, 2)."""
    return matrix(m2_q, [0, 1], [0, 0]), matrix(m2_q, [1, 0], [0, 2])


def test_explicit_shifts(m2_q, pair):
    """Shifts 0, 3 and 4 scale E12 by 2, 1/2 and 2/3."""
    a, g = pair
    witnesses = conjugate_witnesses(a, g, shifts=[0, 3, 4])
    assert witnesses.conjugates == [
        a.scale(2),
        a.scale(Fraction(1, 2)),
        a.scale(Fraction(2, 3)),
    ]
    assert len(witnesses) == 3
    assert witnesses.all_distinct
    assert verify_witnesses(witnesses)
    data = witnesses.to_dict()
    assert data["shifts"] == ["0", "3", "4"]
    assert data["conjugates"][1] == ["0", "1/2", "0", "0"]
    assert data["pairs"] == [[0, 1, True], [0, 2, True], [1, 2, True]]


def test_default_shifts(pair):
    """The first unit shifts of g are 0, -1 and -2."""
    a, g = pair
    witnesses = conjugate_witnesses(a, g, k=3)
    assert [s.to_json() for s in witnesses.shifts] == ["0", "-1", "-2"]
    assert witnesses.conjugates[1] == a.scale(Fraction(3, 2))
    assert witnesses.all_distinct


def test_tampered_list_fails_verification(pair):
    """Verification recomputes the conjugates."""
    a, g = pair
    witnesses = conjugate_witnesses(a, g)
    witnesses.conjugates[0] = a
    assert not verify_witnesses(witnesses)


def test_errors(m2_q, t2_f3, pair, matrix):
    """Commuting pairs, singular shifts, small fields and mixed algebras."""
    a, g = pair
    with pytest.raises(CommutingPair):
        conjugate_witnesses(matrix(m2_q, [1, 0], [0, 0]), g)
    with pytest.raises(ShiftNotUnit):
        conjugate_witnesses(a, g, shifts=[1])
    x = matrix(t2_f3, [0, 1], [0, 0])
    h = matrix(t2_f3, [1, 0], [0, 2])
    with pytest.raises(ExhaustedField):
        conjugate_witnesses(x, h, k=2)
    with pytest.raises(AlgebraMismatch):
        conjugate_witnesses(a, h)


@pytest.fixture(scope="module")
def q_s3(QQ, S3):
    """The rational group algebra of S3."""
    return group_algebra(QQ, S3)


def random_element(algebra, rng):
    """An element with small random rational coordinates."""
    F = algebra.field
    coords = [F.scalar(F.random(rng, bound=3)) for _ in range(algebra.dim)]
    return algebra.element(coords)


@pytest.mark.parametrize("name,pairs", [("m2_q", 34), ("t2_q", 33), ("q_s3", 33)])
def test_random_noncommuting_pairs(request, name, pairs):
    """Ten shifts of g give ten pairwise distinct conjugates of a."""
    algebra = request.getfixturevalue(name)
    rng = random.Random(name)
    checked = 0
    while checked < pairs:
        a, g = random_element(algebra, rng), random_element(algebra, rng)
        if a * g == g * a:
            continue
        witnesses = conjugate_witnesses(a, g, k=10)
        assert len(witnesses.distinct) == 45
        assert witnesses.all_distinct
        assert verify_witnesses(witnesses)
        checked += 1
