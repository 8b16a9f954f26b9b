# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Description and report schemas."""

from marshmallow import (
    EXCLUDE,
    RAISE,
    Schema,
    ValidationError,
    fields,
    validate,
    validates_schema,
)

from ..arith.fields import FIELD_KINDS

ALGEBRA_KINDS = (
    "structure_constants",
    "group_algebra",
    "twisted_group_algebra",
    "matrix",
    "triangular",
    "direct_sum",
)

REQUIRED_BY_KIND = {
    "structure_constants": ("constants", "one"),
    "group_algebra": ("group",),
    "twisted_group_algebra": ("group",),
    "matrix": ("n",),
    "triangular": ("n",),
    "direct_sum": ("summands",),
}


class GroupReference(fields.Field):
    """A registered group name or an inline Cayley table."""

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, str):
            return value
        if isinstance(value, dict):
            return GroupSchema().load(value)
        raise ValidationError("Expected a group name or a Cayley table.")


class GroupSchema(Schema):
    """Inline group given by its Cayley table."""

    name = fields.String()
    labels = fields.List(fields.String())
    cayley = fields.List(fields.List(fields.Integer()), required=True)

    class Meta:
        """Schema meta."""

        unknown = RAISE


class FieldBlockSchema(Schema):
    """The base field."""

    kind = fields.String(required=True, validate=validate.OneOf(FIELD_KINDS))
    p = fields.Integer()
    degree = fields.Integer(load_default=1)
    modulus = fields.List(fields.Integer(), load_default=None)

    class Meta:
        """Schema meta."""

        unknown = RAISE

    @validates_schema
    def validate_characteristic(self, data, **kwargs):
        """Finite fields need a characteristic."""
        if data["kind"] != "rationals" and "p" not in data:
            raise ValidationError("Finite fields need a characteristic.", "p")


class AlgebraBlockSchema(Schema):
    """The algebra, one of the supported kinds with its payload."""

    kind = fields.String(required=True, validate=validate.OneOf(ALGEBRA_KINDS))
    constants = fields.List(fields.List(fields.List(fields.Raw())))
    one = fields.List(fields.Raw())
    labels = fields.List(fields.String())
    group = GroupReference()
    cocycle = fields.List(fields.List(fields.Raw()))
    coboundary = fields.List(fields.Raw())
    n = fields.Integer(validate=validate.Range(min=1))
    summands = fields.List(
        fields.Nested(lambda: AlgebraBlockSchema()), validate=validate.Length(min=2)
    )

    class Meta:
        """Schema meta."""

        unknown = RAISE

    @validates_schema
    def validate_payload(self, data, **kwargs):
        """Every kind needs its own payload."""
        for key in REQUIRED_BY_KIND[data["kind"]]:
            if key not in data:
                raise ValidationError(f"Required for kind '{data['kind']}'.", key)
        if "cocycle" in data and "coboundary" in data:
            raise ValidationError("Give either a cocycle or a coboundary.", "cocycle")


class DescriptionSchema(Schema):
    """An algebra description document."""

    schema = fields.String(data_key="$schema")
    name = fields.String()
    description = fields.String()
    field = fields.Nested(FieldBlockSchema, required=True)
    algebra = fields.Nested(AlgebraBlockSchema, required=True)
    elements = fields.Dict(
        keys=fields.String(), values=fields.List(fields.Raw()), load_default=dict
    )
    sample = fields.List(fields.String(), load_default=list)

    class Meta:
        """Schema meta."""

        unknown = RAISE

    @validates_schema
    def validate_sample(self, data, **kwargs):
        """Sample entries must be named elements."""
        for name in data.get("sample", []):
            if name not in data.get("elements", {}):
                raise ValidationError(f"'{name}' is not a named element.", "sample")


class GateSchema(Schema):
    """A hypothesis gate annotation."""

    hypothesis = fields.String(required=True)
    status = fields.String(required=True)
    gated = fields.Boolean(dump_default=True)


class AlgebraSummarySchema(Schema):
    """Identification of the algebra a report is about."""

    name = fields.String(allow_none=True)
    dim = fields.Integer()
    field = fields.Dict()
    labels = fields.List(fields.String())


class ReportSchema(Schema):
    """Report document written by every command."""

    schema = fields.String(data_key="$schema")
    tool = fields.Dict()
    input_digest = fields.String()
    command = fields.String()
    arguments = fields.List(fields.String())
    algebra = fields.Nested(AlgebraSummarySchema)
    gates = fields.List(fields.Nested(GateSchema))
    results = fields.Dict()
    timing = fields.Dict()

    class Meta:
        """Schema meta."""

        unknown = EXCLUDE
