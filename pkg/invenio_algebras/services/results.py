# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Algebras service results."""

from .serializers import ReportJSONSerializer


class ReportItem:
    """A finished report with its serialized form, built lazily."""

    serializer = ReportJSONSerializer()

    def __init__(self, report):
        """Constructor."""
        self._report = report
        self._data = None

    @property
    def command(self):
        """Command the report answers."""
        return self._report["command"]

    @property
    def results(self):
        """Operation specific block."""
        return self._report["results"]

    def to_dict(self):
        """Report after the schema dump."""
        return self.serializer.dump_obj(self._report)

    def to_json(self):
        """Deterministic text of the report."""
        return self.data.decode("utf-8")

    @property
    def data(self):
        """Deterministic bytes of the report."""
        if self._data is None:
            self._data = self.serializer.serialize_bytes(self._report)
        return self._data


class AtlasEntry:
    """Outcome of one command inside an atlas run."""

    def __init__(self, command, status, filename=None, error=None):
        """Constructor."""
        self.command = command
        self.status = status
        self.filename = filename
        self.error = error

    def to_dict(self):
        """Serialize the entry."""
        data = {
            "command": self.command,
            "status": self.status,
            "filename": self.filename,
        }
        if self.error is not None:
            data["error"] = self.error.to_dict()
        return data
