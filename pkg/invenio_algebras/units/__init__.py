# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Unit groups of finite algebras: enumeration, conjugacy, series and reports."""

from .reports import (
    fc_report,
    omega_annihilator_count,
    omega_subset,
    radical_structure_report,
    radical_unit_check,
    unit_structure_report,
)
from .series import (
    SeriesReport,
    commutator_subgroup,
    derived_series,
    derived_subgroup_by_closure,
    generated_subgroup,
    lower_central_series,
    series_report,
)
from .table import UnitGroupTable, conjugacy_data, enumerate_units

__all__ = (
    "SeriesReport",
    "UnitGroupTable",
    "commutator_subgroup",
    "conjugacy_data",
    "derived_series",
    "derived_subgroup_by_closure",
    "enumerate_units",
    "fc_report",
    "generated_subgroup",
    "lower_central_series",
    "omega_annihilator_count",
    "omega_subset",
    "radical_structure_report",
    "radical_unit_check",
    "series_report",
    "unit_structure_report",
)
