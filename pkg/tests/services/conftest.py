# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Service tests."""

import pytest

from invenio_algebras.proxies import current_algebras


@pytest.fixture(scope="module")
def algebras_service(app):
    """Algebras service fixture."""
    return current_algebras.algebras_service


@pytest.fixture()
def atlas_service(algebras_service, tmp_path, monkeypatch):
    """The service writing to a fresh atlas directory."""
    config = algebras_service.config.override(atlas_dir=str(tmp_path / "atlas"))
    monkeypatch.setattr(algebras_service, "config", config)
    return algebras_service


@pytest.fixture()
def load(algebras_service):
    """Load a bundled example by id."""

    def _load(example_id):
        return algebras_service.load(example_id)

    return _load
