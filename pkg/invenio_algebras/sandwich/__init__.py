# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""FC-subalgebra bounds and conjugate witnesses over infinite fields."""

from .nabla import (
    NablaEstimate,
    SandwichStatus,
    corollary_report,
    default_unit_sample,
    nabla_sandwich,
)
from .witnesses import WitnessList, conjugate_witnesses, verify_witnesses

__all__ = (
    "NablaEstimate",
    "SandwichStatus",
    "WitnessList",
    "conjugate_witnesses",
    "corollary_report",
    "default_unit_sample",
    "nabla_sandwich",
    "verify_witnesses",
)
