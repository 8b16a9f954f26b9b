# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Exact engine for finite-dimensional associative algebras."""

from importlib_metadata import entry_points

from . import config
from .bundled import bundled_examples
from .registry import TypeRegistry
from .services import AlgebrasService, AlgebrasServiceConfig


class InvenioAlgebras:
    """Invenio-Algebras extension."""

    def __init__(self, app=None):
        """Extension initialization."""
        self.algebras_service = None
        self.group_registry = None
        self.example_registry = None
        if app:
            self.init_app(app)

    def init_app(self, app):
        """Flask application initialization."""
        self.init_config(app)
        self.init_services(app)
        self.init_registry(app)
        app.extensions["invenio-algebras"] = self

    def init_config(self, app):
        """Initialize configuration."""
        for k in dir(config):
            if k.startswith("ALGEBRAS_"):
                app.config.setdefault(k, getattr(config, k))

    def service_configs(self, app):
        """Customized service configs."""

        class ServiceConfigs:
            algebras = AlgebrasServiceConfig.build(app)

        return ServiceConfigs

    def init_services(self, app):
        """Initialize the algebras service."""
        service_configs = self.service_configs(app)
        self.algebras_service = AlgebrasService(config=service_configs.algebras)

    def init_registry(self, app):
        """Initialize the registries of named groups and example descriptions."""
        self.group_registry = TypeRegistry(app.config["ALGEBRAS_REGISTERED_GROUPS"])
        self.example_registry = TypeRegistry(
            list(bundled_examples()) + list(app.config["ALGEBRAS_REGISTERED_EXAMPLES"])
        )
        # Load from entry points
        register_entry_point(self.group_registry, "invenio_algebras.groups")
        register_entry_point(self.example_registry, "invenio_algebras.examples")


def register_entry_point(registry, ep_name):
    """Register types from an entry point.

    The entry point is called; it may return a single type or a list.
    """
    for ep in sorted(set(entry_points(group=ep_name)), key=lambda ep: ep.name):
        loaded = ep.load()()
        for type_ in loaded if isinstance(loaded, (list, tuple)) else [loaded]:
            registry.register_type(type_)
