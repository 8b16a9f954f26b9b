# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Module tests."""

from flask import Flask

from invenio_algebras import InvenioAlgebras


def test_version():
    """Test version import."""
    from invenio_algebras import __version__

    assert __version__


def test_init():
    """Test extension initialization."""
    app = Flask("testapp")
    ext = InvenioAlgebras(app)
    assert "invenio-algebras" in app.extensions

    app = Flask("testapp")
    ext = InvenioAlgebras()
    assert "invenio-algebras" not in app.extensions
    ext.init_app(app)
    assert "invenio-algebras" in app.extensions


def test_default_config():
    """Defaults are set without overriding the instance's values."""
    app = Flask("testapp")
    app.config["ALGEBRAS_THREADS"] = 4
    InvenioAlgebras(app)
    assert app.config["ALGEBRAS_THREADS"] == 4
    assert app.config["ALGEBRAS_DEFAULT_SHIFT_COUNT"] == 3
    assert app.config["ALGEBRAS_ENUMERATION_CAP"] == 2**24


def test_registries(app):
    """Bundled groups and examples are registered by id."""
    from invenio_algebras.proxies import (
        current_example_registry,
        current_group_registry,
    )

    assert {"C2", "C3", "S3", "D4", "Q8", "A4"} <= set(current_group_registry.ids())
    assert current_group_registry.lookup("S3").order == 6
    assert "m2_q" in current_example_registry
    assert "t2_f2" in current_example_registry.ids()
