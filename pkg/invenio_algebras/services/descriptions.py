# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Reading and writing algebra description documents.

A document is checked against the shipped JSON schema, loaded with the
marshmallow schemas and finally built by the constructors. Every error
carries a ``/``-separated location inside the document.
"""

import json
from contextlib import contextmanager
from importlib import resources

from jsonschema import Draft7Validator
from marshmallow import ValidationError

from ..arith.fields import field_from_dict
from ..constructors import (
    Cocycle,
    FiniteGroupTable,
    bundled_groups,
    direct_sum,
    group_algebra,
    matrix_algebra,
    structure_constants_algebra,
    triangular_algebra,
    twisted_group_algebra,
)
from ..errors import AlgebraError, InvalidGroupTable, ParseError, SchemaError
from ..records.api import AlgebraDescription
from .schemas import DescriptionSchema

DESCRIPTION_SCHEMA = "local://descriptions/description-v1.0.0.json"


def _load_jsonschema(*parts):
    path = resources.files("invenio_algebras.records.jsonschemas").joinpath(*parts)
    return json.loads(path.read_text(encoding="utf-8"))


_validator = None


def description_validator():
    """The (cached) JSON schema validator for description documents."""
    global _validator
    if _validator is None:
        _validator = Draft7Validator(
            _load_jsonschema("descriptions", "description-v1.0.0.json")
        )
    return _validator


def _path(parts):
    return "/".join(str(p) for p in parts)


def _first_message(messages, prefix=()):
    """Flatten marshmallow error messages to ``(location, message)``."""
    if isinstance(messages, dict):
        key = sorted(messages, key=str)[0]
        return _first_message(messages[key], prefix + (key,))
    if isinstance(messages, list) and messages:
        if isinstance(messages[0], (dict, list)):
            return _first_message(messages[0], prefix)
        return _path(prefix), str(messages[0])
    return _path(prefix), str(messages)


@contextmanager
def located(prefix):
    """Prefix the location of algebra errors raised inside the block."""
    try:
        yield
    except AlgebraError as e:
        if e.location is None:
            e.location = prefix
        elif not str(e.location).startswith(prefix):
            e.location = f"{prefix}/{e.location}"
        raise


def validate_document(document):
    """Check a document against the JSON schema and load it.

    :raises SchemaError: at the first offending location.
    """
    errors = sorted(
        description_validator().iter_errors(document),
        key=lambda e: (len(e.absolute_path), _path(e.absolute_path)),
    )
    if errors:
        error = errors[0]
        raise SchemaError(error.message, location=_path(error.absolute_path) or "/")
    try:
        return DescriptionSchema().load(document)
    except ValidationError as e:
        location, message = _first_message(e.messages)
        raise SchemaError(message, location=location) from e


def _group(reference, groups):
    if isinstance(reference, str):
        group = groups.get(reference)
        if group is None:
            raise InvalidGroupTable(f"Unknown group '{reference}'")
        return group
    with located("cayley"):
        return FiniteGroupTable(
            reference["cayley"],
            name=reference.get("name"),
            labels=reference.get("labels"),
        )


def build_algebra(field, block, groups, location="algebra"):
    """Build the algebra described by a loaded algebra block."""
    kind = block["kind"]
    with located(location):
        if kind == "structure_constants":
            return structure_constants_algebra(
                field, block["constants"], block["one"], labels=block.get("labels")
            )
        if kind == "matrix":
            return matrix_algebra(field, block["n"])
        if kind == "triangular":
            return triangular_algebra(field, block["n"])
        if kind == "direct_sum":
            summands = [
                build_algebra(field, summand, groups, f"{location}/summands/{i}")
                for i, summand in enumerate(block["summands"])
            ]
            algebra = summands[0]
            for summand in summands[1:]:
                algebra = direct_sum(algebra, summand)
            return algebra
        with located("group"):
            group = _group(block["group"], groups)
        if kind == "group_algebra":
            return group_algebra(field, group)
        if "coboundary" in block:
            with located("coboundary"):
                cocycle = Cocycle.coboundary(field, group, block["coboundary"])
        elif "cocycle" in block:
            cocycle = Cocycle(field, group, block["cocycle"])
        else:
            cocycle = Cocycle.trivial(field, group)
        return twisted_group_algebra(field, group, cocycle)


def description_from_dict(document, groups=None):
    """Validate and build a description given as parsed JSON.

    :param groups: Mapping of group names to :class:`FiniteGroupTable`;
        defaults to the bundled groups.
    """
    if groups is None:
        groups = {g.type_id: g for g in bundled_groups()}
    data = validate_document(document)
    with located("field"):
        field = field_from_dict(data["field"])
    algebra = build_algebra(field, data["algebra"], groups)
    elements = {}
    for name, coords in sorted(data["elements"].items()):
        location = f"elements/{name}"
        if len(coords) != algebra.dim:
            raise SchemaError(
                f"Element '{name}' has {len(coords)} coordinates, "
                f"expected {algebra.dim}",
                location=location,
            )
        with located(location):
            elements[name] = algebra.element(coords)
    return AlgebraDescription(
        document, algebra, elements=elements, sample=data["sample"]
    )


def load_description(path, groups=None):
    """Read, validate and build a description file.

    :raises ParseError: if the file cannot be read or is not JSON.
    :raises SchemaError: if the document does not match the schema.
    """
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e.strerror or e}") from e
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"Invalid JSON: {e.msg}", location=f"line {e.lineno}, column {e.colno}"
        ) from e
    return description_from_dict(document, groups=groups)


def serialize_description(algebra, name=None, elements=None):
    """A ``structure_constants`` document that loads back to ``algebra``."""
    F = algebra.field
    n = algebra.dim
    constants = [
        [[F.to_json(c) for c in algebra.product_vector(i, j)] for j in range(n)]
        for i in range(n)
    ]
    document = {
        "$schema": DESCRIPTION_SCHEMA,
        "field": F.to_dict(),
        "algebra": {
            "kind": "structure_constants",
            "constants": constants,
            "one": [F.to_json(c) for c in algebra.one],
            "labels": list(algebra.labels),
        },
    }
    if name is not None:
        document["name"] = name
    if elements:
        document["elements"] = {k: v.to_json() for k, v in sorted(elements.items())}
    return document
