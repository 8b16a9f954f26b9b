# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Proxies for accessing the currently instantiated algebras extension."""

from flask import current_app
from werkzeug.local import LocalProxy

current_algebras = LocalProxy(lambda: current_app.extensions["invenio-algebras"])
"""Proxy for the instantiated algebras extension."""

current_algebras_service = LocalProxy(
    lambda: current_app.extensions["invenio-algebras"].algebras_service
)
"""Proxy to the instantiated algebras service."""

current_group_registry = LocalProxy(
    lambda: current_app.extensions["invenio-algebras"].group_registry
)
"""Proxy for the registry of named groups."""

current_example_registry = LocalProxy(
    lambda: current_app.extensions["invenio-algebras"].example_registry
)
"""Proxy for the registry of example descriptions."""
