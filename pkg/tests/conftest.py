# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Pytest configuration.

The application fixtures follow the pytest-invenio conventions
(``app_config``, ``create_app``, ``app``) without needing a database.
"""

from fractions import Fraction

import pytest

from invenio_algebras.arith import extension_field, prime_field, rationals
from invenio_algebras.constructors import (
    FiniteGroupTable,
    group_algebra,
    matrix_algebra,
    matrix_element,
    triangular_algebra,
)
from invenio_algebras.factory import create_app as _create_app


@pytest.fixture(scope="module")
def app_config(tmp_path_factory):
    """Application configuration with a private atlas directory."""
    return {
        "TESTING": True,
        "ALGEBRAS_ATLAS_DIR": str(tmp_path_factory.mktemp("atlas")),
    }


@pytest.fixture(scope="module")
def create_app():
    """Application factory fixture."""
    return _create_app


@pytest.fixture(scope="module")
def app(create_app, app_config):
    """Application with the extension loaded, inside an app context."""
    app = create_app(**app_config)
    with app.app_context():
        yield app


#
# Fields
#
@pytest.fixture(scope="session")
def QQ():
    """The rationals."""
    return rationals()


@pytest.fixture(scope="session")
def GF2():
    """The field with two elements."""
    return prime_field(2)


@pytest.fixture(scope="session")
def GF3():
    """The field with three elements."""
    return prime_field(3)


@pytest.fixture(scope="session")
def GF4():
    """The field with four elements."""
    return extension_field(2, 2)


#
# Algebras
#
@pytest.fixture(scope="session")
def C2():
    """Cyclic group of order two."""
    return FiniteGroupTable.cyclic(2)


@pytest.fixture(scope="session")
def S3():
    """Symmetric group on three letters."""
    return FiniteGroupTable.from_permutations([(1, 0, 2), (1, 2, 0)], name="S3")


@pytest.fixture(scope="session")
def f2_c2(GF2, C2):
    """The group algebra F2 C2."""
    return group_algebra(GF2, C2)


@pytest.fixture(scope="session")
def q_c2(QQ, C2):
    """The group algebra Q C2."""
    return group_algebra(QQ, C2)


@pytest.fixture(scope="session")
def m2_f2(GF2):
    """2x2 matrices over F2."""
    return matrix_algebra(GF2, 2)


@pytest.fixture(scope="session")
def m2_q(QQ):
    """2x2 matrices over the rationals."""
    return matrix_algebra(QQ, 2)


@pytest.fixture(scope="session")
def t2_f2(GF2):
    """Upper triangular 2x2 matrices over F2."""
    return triangular_algebra(GF2, 2)


@pytest.fixture(scope="session")
def t2_f3(GF3):
    """Upper triangular 2x2 matrices over F3."""
    return triangular_algebra(GF3, 2)


@pytest.fixture(scope="session")
def t2_q(QQ):
    """Upper triangular 2x2 matrices over the rationals."""
    return triangular_algebra(QQ, 2)


@pytest.fixture(scope="session")
def matrix():
    """Build a matrix algebra element from rows."""

    def _matrix(algebra, *rows):
        return matrix_element(algebra, rows)

    return _matrix


@pytest.fixture(scope="session")
def half():
    """One half."""
    return Fraction(1, 2)
