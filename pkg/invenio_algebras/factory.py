# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Application factory for the standalone command line."""

from flask import Flask

from .ext import InvenioAlgebras


def create_app(**config):
    """Minimal application with the algebras extension."""
    app = Flask("invenio-algebras")
    app.config.update(config)
    InvenioAlgebras(app)
    return app
