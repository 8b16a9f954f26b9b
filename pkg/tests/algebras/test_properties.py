# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Seeded random checks of the ring axioms and derived operations."""

import random

import pytest

from invenio_algebras.algebras.operations import try_invert
from invenio_algebras.arith import FieldScalar
from invenio_algebras.constructors import group_algebra
from invenio_algebras.elements.profile import minimal_polynomial, poly_at_element

ALGEBRAS = ["m2_q", "q_c2", "t2_q", "f2_c2", "m2_f2", "t2_f3", "gf4_s3"]


@pytest.fixture(scope="module")
def gf4_s3(GF4, S3):
    """The group algebra of S3 over the field with four elements."""
    return group_algebra(GF4, S3)


def random_element(algebra, rng):
    """An element with random coordinates."""
    F = algebra.field
    coords = [FieldScalar(F, F.random(rng)) for _ in range(algebra.dim)]
    return algebra.element(coords)


@pytest.mark.parametrize("name", ALGEBRAS)
def test_ring_axioms(request, name):
    """Associativity, distributivity and the unity on random triples."""
    algebra = request.getfixturevalue(name)
    rng = random.Random(name)
    for _ in range(10):
        x, y, z = (random_element(algebra, rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z
        assert algebra.unity * x == x * algebra.unity == x
        assert x - x == algebra.zero


@pytest.mark.parametrize("name", ALGEBRAS)
def test_inverses_are_two_sided(request, name):
    """A right inverse found by solving is also a left inverse."""
    algebra = request.getfixturevalue(name)
    rng = random.Random(name)
    for _ in range(10):
        u = random_element(algebra, rng)
        v = try_invert(u)
        if v is not None:
            assert u * v == v * u == algebra.unity


@pytest.mark.parametrize("name", ALGEBRAS)
def test_minimal_polynomial_annihilates(request, name):
    """mu_g(g) = 0 and mu_g is monic of degree at most dim A."""
    algebra = request.getfixturevalue(name)
    rng = random.Random(name)
    for _ in range(5):
        g = random_element(algebra, rng)
        mu = minimal_polynomial(g)
        assert mu.is_monic()
        assert 1 <= mu.degree <= algebra.dim
        assert poly_at_element(mu, g).is_zero()
