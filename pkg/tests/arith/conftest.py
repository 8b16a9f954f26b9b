# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Fixtures for the seeded arithmetic checks."""

import pytest

from invenio_algebras.arith import Poly, extension_field, prime_field, rationals

# (characteristic, degree); characteristic 0 is the rationals
FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (0, 1)]


def _field_id(spec):
    p, k = spec
    if p == 0:
        return "QQ"
    return f"GF{p**k}"


@pytest.fixture(scope="module", params=FIELDS, ids=_field_id)
def field(request):
    """Each field of the seeded checks in turn."""
    p, k = request.param
    if p == 0:
        return rationals()
    if k == 1:
        return prime_field(p)
    return extension_field(p, k)


@pytest.fixture(scope="session")
def random_poly():
    """Build a random polynomial of bounded degree, optionally monic."""

    def _random_poly(field, rng, max_degree=8, monic=False):
        degree = rng.randint(1, max_degree)
        coeffs = [field.random(rng) for _ in range(degree)]
        lead = field.one if monic else field.zero
        while field.is_zero(lead):
            lead = field.random(rng)
        return Poly.from_raw(field, coeffs + [lead])

    return _random_poly
