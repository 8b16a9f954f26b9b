# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Algebra descriptions shipped with the module.

Each ``<id>.json`` file in this package is registered under ``<id>`` in the
example registry, so commands accept ``m2_q`` in place of a file path.
"""

from pathlib import Path

from ..services.descriptions import load_description


class BundledExample:
    """A description file registered by its stem."""

    def __init__(self, path):
        """Constructor."""
        self.path = Path(path)

    @property
    def type_id(self):
        """Registry id."""
        return self.path.stem

    def load(self, groups=None):
        """Validate and build the description."""
        return load_description(self.path, groups=groups)

    def __repr__(self):
        """Return repr(self)."""
        return f"<BundledExample {self.type_id}>"


def bundled_examples():
    """All shipped descriptions, sorted by id."""
    return [BundledExample(p) for p in sorted(Path(__file__).parent.glob("*.json"))]
