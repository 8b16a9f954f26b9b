# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Algebra descriptions and the report atlas."""

from .api import AlgebraDescription, AtlasStore

__all__ = (
    "AlgebraDescription",
    "AtlasStore",
)
