# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Algebras services."""

from .config import AlgebrasServiceConfig
from .descriptions import description_from_dict, load_description, serialize_description
from .results import AtlasEntry, ReportItem
from .service import COMMANDS, AlgebrasService

__all__ = (
    "COMMANDS",
    "AlgebrasService",
    "AlgebrasServiceConfig",
    "AtlasEntry",
    "ReportItem",
    "description_from_dict",
    "load_description",
    "serialize_description",
)
