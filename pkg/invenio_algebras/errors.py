# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Custom exceptions used in the Invenio-Algebras module.

Errors are split in two families which the command line maps to exit codes:
:class:`InputError` (bad documents or arguments, exit code 2) and
:class:`DomainError` (a well-posed question with a mathematical negative
answer, exit code 1).
"""


class AlgebraError(Exception):
    """Base class of all errors raised by this module."""

    exit_code = 1
    description = "Algebra error."

    def __init__(self, reason=None, location=None):
        """Constructor.

        :param reason: Description of what went wrong.
        :param location: Optional path into the input document.
        """
        self.reason = reason or self.description
        self.location = location
        super().__init__(self.reason)

    def __str__(self):
        """Return str(self)."""
        if self.location is not None:
            return f"{self.reason} (at '{self.location}')"
        return self.reason

    def to_dict(self):
        """Serialize the error for reports."""
        data = {"type": type(self).__name__, "message": self.reason}
        if self.location is not None:
            data["location"] = self.location
        return data


class InputError(AlgebraError):
    """The input (document, arguments, storage) is unusable."""

    exit_code = 2
    description = "Invalid input."


class DomainError(AlgebraError):
    """The computation has a mathematical negative outcome."""

    exit_code = 1
    description = "Domain error."


#
# Input errors
#
class ParseError(InputError):
    """The document could not be read or parsed as JSON."""

    description = "Document could not be parsed."


class SchemaError(InputError):
    """The document does not match the published schema."""

    description = "Document does not match the schema."


class InvalidFieldSpec(InputError):
    """The field block does not describe a supported field."""

    description = "Invalid field specification."


class InvalidAlgebra(InputError):
    """Structure constants violate associativity or unity."""

    description = "Structure constants do not define a unital associative algebra."


class InvalidGroupTable(InputError):
    """A Cayley table is not the table of a group."""

    description = "Invalid group table."


class InvalidCocycle(InputError):
    """A table violates the 2-cocycle identity."""

    description = "Invalid 2-cocycle."

    def __init__(self, triple=None, reason=None, location=None):
        """Constructor.

        :param triple: The violating triple of group indices ``(g, h, k)``.
        """
        self.triple = triple
        if reason is None and triple is not None:
            reason = f"Cocycle identity fails on the triple {tuple(triple)}"
        super().__init__(reason, location)


class FieldMismatch(InputError):
    """Operands live over different fields."""

    description = "Operands belong to different fields."


class AlgebraMismatch(InputError):
    """Operands live in different algebras."""

    description = "Operands belong to different algebras."


class UnknownElement(InputError):
    """A named element is neither defined nor a basis label."""

    description = "Unknown element."


class InvalidArgument(InputError):
    """A command argument is missing or malformed."""

    description = "Invalid command argument."


class StorageError(InputError):
    """The atlas directory cannot be used."""

    description = "Atlas storage failure."


#
# Domain errors
#
class NotAUnit(DomainError):
    """The element is not invertible."""

    description = "Element is not a unit."


class NotAnIdeal(DomainError):
    """A subspace is not a two-sided ideal."""

    description = "Subspace is not a two-sided ideal."


class UnsupportedFactorization(DomainError):
    """Polynomial factorization is not available for the input."""

    description = "Factorization not supported for this polynomial."


class UnsupportedCharacteristic(DomainError):
    """No radical method (or enumeration) applies within the configured caps."""

    description = "No method applies for this field at the configured caps."


class NotTorsion(DomainError):
    """The element has no finite multiplicative order (within the caps)."""

    description = "Element is not a torsion unit."


class ShiftNotUnit(DomainError):
    """The shifted element ``g - alpha`` is not a unit."""

    description = "Shifted element is not a unit."


class ExhaustedField(DomainError):
    """The field has fewer admissible shifts than requested."""

    description = "Not enough admissible shifts in the field."


class NotNilpotent(DomainError):
    """The element is not nilpotent."""

    description = "Element is not nilpotent."


class NotCommuting(DomainError):
    """Two elements were required to commute but do not."""

    description = "Elements do not commute."


class EnumerationTooLarge(DomainError):
    """The algebra has more elements than the enumeration cap."""

    description = "Algebra too large to enumerate."

    def __init__(self, required=None, cap=None, reason=None):
        """Constructor.

        :param required: Number of elements that would have to be scanned.
        :param cap: The configured cap.
        """
        self.required = required
        self.cap = cap
        if reason is None and required is not None:
            reason = f"Enumeration needs a cap of at least {required} (cap is {cap})"
        super().__init__(reason)


class ZeroCommutator(DomainError):
    """The commutator given for an annihilator count vanishes."""

    description = "The Lie commutator is zero."


class CommutingPair(DomainError):
    """No conjugate witnesses exist for a commuting pair."""

    description = "The pair commutes; no conjugate witnesses exist."


class InconclusiveSandwich(DomainError):
    """The sandwich bounds differ, so no exact statement is possible."""

    description = "Sandwich bounds differ; result is an interval."


class VerificationFailed(DomainError):
    """An internally verified identity did not hold."""

    description = "Internal verification failed."
