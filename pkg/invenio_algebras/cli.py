# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Command line interface.

Available as ``flask algebras ...`` inside an application and as the
standalone ``invenio-algebras`` script. Exit codes: 0 on success, 1 when the
question has a mathematical negative answer, 2 on unusable input.
"""

import click
from flask import current_app
from flask.cli import ScriptInfo, with_appcontext

from .errors import AlgebraError, StorageError
from .factory import create_app
from .proxies import current_algebras_service, current_example_registry
from .services.serializers import serialize_error

OPTIONS_KEY = "invenio-algebras.options"


def _fail(error):
    current_app.logger.debug("Command failed: %s", error)
    click.echo(serialize_error(error), err=True, nl=False)
    raise click.exceptions.Exit(error.exit_code)


def _write(item, out):
    if out is None:
        click.echo(item.to_json(), nl=False)
        return
    try:
        with open(out, "wb") as f:
            f.write(item.data)
    except OSError as e:
        raise StorageError(f"Cannot write {out}: {e.strerror or e}") from e


def run(command, source, *args):
    """Load ``source``, run ``command`` and write the report."""
    ctx = click.get_current_context()
    options = dict(ctx.meta[OPTIONS_KEY])
    out = options.pop("out")
    service = current_algebras_service
    original = service.config
    service.config = original.override(**options)
    try:
        description = service.load(source)
        item = service.run_command(command, description, args)
        _write(item, out)
    except AlgebraError as e:
        _fail(e)
    finally:
        service.config = original


@click.group()
@click.option("--out", type=click.Path(dir_okay=False), help="Write the report here.")
@click.option("--atlas-dir", type=click.Path(file_okay=False), help="Atlas directory.")
@click.option("--force", is_flag=True, default=None, help="Recompute atlas entries.")
@click.option(
    "--cap-enumeration", type=click.IntRange(min=1), help="Unit enumeration cap."
)
@click.option("--cap-factor-degree", type=click.IntRange(min=1), help="Factoring cap.")
@click.option("--threads", type=click.IntRange(min=1), help="Enumeration threads.")
@click.option("--timing", is_flag=True, default=None, help="Add wall-clock timing.")
@click.pass_context
def algebras(
    ctx, out, atlas_dir, force, cap_enumeration, cap_factor_degree, threads, timing
):
    """Exact computations on finite-dimensional algebras."""
    ctx.meta[OPTIONS_KEY] = dict(
        out=out,
        atlas_dir=atlas_dir,
        force=force,
        enumeration_cap=cap_enumeration,
        factor_degree_cap=cap_factor_degree,
        threads=threads,
        timing=timing,
    )


@algebras.command("validate")
@click.argument("description")
@with_appcontext
def validate(description):
    """Validate a description and summarize the algebra."""
    run("validate", description)


@algebras.command("radical")
@click.argument("description")
@click.option(
    "--method",
    type=click.Choice(["auto", "dickson", "trace", "enumeration"]),
    default="auto",
    show_default=True,
)
@with_appcontext
def radical(description, method):
    """Jacobson radical."""
    run("radical", description, method)


@algebras.command("center")
@click.argument("description")
@with_appcontext
def center(description):
    """Center of the algebra."""
    run("center", description)


@algebras.command("decompose")
@click.argument("description")
@click.argument("element")
@with_appcontext
def decompose(description, element):
    """Local decomposition of F[g]."""
    run("decompose", description, element)


@algebras.command("classify")
@click.argument("description")
@click.argument("element")
@with_appcontext
def classify(description, element):
    """Minimal polynomial, nilpotency, unipotency and torsion of an element."""
    run("classify", description, element)


@algebras.command("units")
@click.argument("description")
@with_appcontext
def units(description):
    """Enumerate the unit group with its conjugacy classes."""
    run("units", description)


@algebras.command("fc")
@click.argument("description")
@with_appcontext
def fc(description):
    """FC-radical, FC-subring and radical structure report."""
    run("fc", description)


@algebras.command("series")
@click.argument("description")
@with_appcontext
def series(description):
    """Derived and lower central series with the gated group conclusions."""
    run("series", description)


@algebras.command("omega")
@click.argument("description")
@click.argument("subset", type=click.Choice(["units", "group", "scalars", "gbar"]))
@click.argument("x")
@click.argument("y")
@with_appcontext
def omega(description, subset, x, y):
    """Count h in SUBSET with (1 - h)[x, y] = 0."""
    run("omega", description, subset, x, y)


@algebras.command("witnesses")
@click.argument("description")
@click.argument("a")
@click.argument("g")
@click.argument("k", type=click.IntRange(min=1), required=False)
@with_appcontext
def witnesses(description, a, g, k):
    """Distinct conjugates (g - alpha)^-1 a (g - alpha)."""
    args = (a, g) if k is None else (a, g, k)
    run("witnesses", description, *args)


@algebras.command("sandwich")
@click.argument("description")
@with_appcontext
def sandwich(description):
    """Bounds of the FC-subalgebra over the rationals."""
    run("sandwich", description)


@algebras.command("atlas")
@click.argument("description")
@with_appcontext
def atlas(description):
    """Compute and store every applicable report."""
    run("atlas", description)


@algebras.command("examples")
@with_appcontext
def examples():
    """List the registered example descriptions."""
    for type_id in current_example_registry.ids():
        click.echo(type_id)


def main():
    """Entry point of the ``invenio-algebras`` script."""
    algebras.main(prog_name="invenio-algebras", obj=ScriptInfo(create_app=create_app))
