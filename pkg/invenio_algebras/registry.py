# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Registry for looking up groups and example descriptions by id.

Registered objects need a ``type_id`` property:

.. code-block:: python

    registry.lookup("S3")
    for group in registry:
        ...
"""


class TypeRegistry:
    """Registry for looking up registered types per id."""

    def __init__(self, types):
        """Constructor."""
        self._registered_types = {}
        for t in types:
            self.register_type(t)

    def register_type(self, type_, force=False):
        """Register ``type_`` unless its id is taken (or ``force`` is set)."""
        type_id = type_.type_id
        if force:
            self._registered_types[type_id] = type_
        else:
            self._registered_types.setdefault(type_id, type_)

    def lookup(self, type_id, quiet=False, default=None):
        """Look up a registered type by its id."""
        if not quiet:
            return self._registered_types[type_id]
        return self._registered_types.get(type_id, default)

    def ids(self):
        """Registered ids in sorted order."""
        return sorted(self._registered_types)

    def __contains__(self, type_id):
        """Whether an id is registered."""
        return type_id in self._registered_types

    def __iter__(self):
        """Iterate over all types in registration order."""
        yield from self._registered_types.values()
