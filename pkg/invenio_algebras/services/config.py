# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Algebras service configuration."""

from .. import config


class AlgebrasServiceConfig:
    """Algebras service configuration.

    Class attributes hold the defaults; :meth:`build` reads the application
    config and :meth:`override` applies per-invocation values such as the
    command line caps.
    """

    service_id = "algebras"

    enumeration_cap = config.ALGEBRAS_ENUMERATION_CAP
    radical_enumeration_cap = config.ALGEBRAS_RADICAL_ENUMERATION_CAP
    trace_dimension_cap = config.ALGEBRAS_TRACE_DIMENSION_CAP
    factor_degree_cap = config.ALGEBRAS_FACTOR_DEGREE_CAP
    torsion_order_cap = config.ALGEBRAS_TORSION_ORDER_CAP
    factor_seed = config.ALGEBRAS_FACTOR_SEED
    threads = config.ALGEBRAS_THREADS
    default_shift_count = config.ALGEBRAS_DEFAULT_SHIFT_COUNT
    atlas_dir = config.ALGEBRAS_ATLAS_DIR
    force = False
    timing = False

    config_keys = {
        "enumeration_cap": "ALGEBRAS_ENUMERATION_CAP",
        "radical_enumeration_cap": "ALGEBRAS_RADICAL_ENUMERATION_CAP",
        "trace_dimension_cap": "ALGEBRAS_TRACE_DIMENSION_CAP",
        "factor_degree_cap": "ALGEBRAS_FACTOR_DEGREE_CAP",
        "torsion_order_cap": "ALGEBRAS_TORSION_ORDER_CAP",
        "factor_seed": "ALGEBRAS_FACTOR_SEED",
        "threads": "ALGEBRAS_THREADS",
        "default_shift_count": "ALGEBRAS_DEFAULT_SHIFT_COUNT",
        "atlas_dir": "ALGEBRAS_ATLAS_DIR",
    }

    @classmethod
    def build(cls, app):
        """Subclass with the values of ``app.config``."""
        attrs = {
            attr: app.config.get(key, getattr(cls, attr))
            for attr, key in cls.config_keys.items()
        }
        return type(f"Custom{cls.__name__}", (cls,), attrs)

    @classmethod
    def override(cls, **values):
        """Subclass with the given values; ``None`` keeps the current value."""
        attrs = {}
        for attr, value in values.items():
            if not hasattr(cls, attr):
                raise AttributeError(f"Unknown service option '{attr}'")
            if value is not None:
                attrs[attr] = value
        return type(cls.__name__, (cls,), attrs)
