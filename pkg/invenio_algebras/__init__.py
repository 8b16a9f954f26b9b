# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Exact engine for finite-dimensional associative algebras."""

__version__ = "1.0.0"

from .ext import InvenioAlgebras  # noqa: E402
from .proxies import (  # noqa: E402
    current_algebras,
    current_algebras_service,
    current_example_registry,
    current_group_registry,
)

__all__ = (
    "__version__",
    "current_algebras",
    "current_algebras_service",
    "current_example_registry",
    "current_group_registry",
    "InvenioAlgebras",
)
