# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Deterministic JSON serialization of reports."""

import json

from .schemas import ReportSchema


class ReportJSONSerializer:
    """Dump a report with :class:`ReportSchema` and render stable JSON.

    Keys are sorted, the indent is two spaces and the text ends with a
    newline, so identical reports give identical bytes.
    """

    schema_cls = ReportSchema

    def dump_obj(self, report):
        """Report after the schema dump."""
        return self.schema_cls().dump(report)

    def serialize_object(self, report):
        """Report as text."""
        data = self.dump_obj(report)
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def serialize_bytes(self, report):
        """Report as UTF-8 bytes."""
        return self.serialize_object(report).encode("utf-8")


def serialize_error(error):
    """Error report for standard error."""
    return json.dumps({"error": error.to_dict()}, sort_keys=True, indent=2) + "\n"
