# Copyright (c) 2020, Novo Nordisk Foundation Center for Biosustainability,
# Technical University of Denmark.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Expose axiom audits, program solving and feedback runs as commands."""

import json
import logging
from collections import OrderedDict

import click

from .app import init_app
from .core import audit_axioms, format_report
from .defeedback import feedback_solve
from .designal import SignalSpace
from .errorhandlers import EXIT_HYPOTHESIS_FAILURE
from .exceptions import ConvergenceFailure
from .herbrand import HerbrandSpace
from .instances import build_instance
from .lpfront import (
    format_program,
    ground_program,
    infer_level_mapping,
    parse_program,
    solve_supported_model,
)
from .schemas import NetworkSchema, SignalSchema
from .settings import current_config
from .solver import format_trace


logger = logging.getLogger(__name__)


class UltrafixGroup(click.Group):
    """
    A command group dispatching exceptions to registered handlers.

    A handler is looked up along the exception's method resolution order, so
    the most specific registration wins. It returns the exit code.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.config = None
        self.error_handlers = OrderedDict()

    def register_error_handler(self, exception_class, handler):
        self.error_handlers[exception_class] = handler

    def find_error_handler(self, error):
        for cls in type(error).__mro__:
            if cls in self.error_handlers:
                return self.error_handlers[cls]
        return None

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise
        except Exception as error:
            handler = self.find_error_handler(error)
            if handler is None:
                raise
            ctx.exit(handler(error))


seed_option = click.option(
    "--seed", type=int, default=None, help="Seed of every random draw."
)
budget_option = click.option(
    "--budget",
    type=click.IntRange(min=1),
    default=None,
    help="Maximal number of iteration stages.",
)
trace_option = click.option(
    "--trace", is_flag=True, help="Also print the iteration trace."
)
out_option = click.option(
    "--out",
    type=click.File("w"),
    default="-",
    help="Write the output here instead of standard output.",
)


@click.group(cls=UltrafixGroup)
@click.pass_context
def cli(ctx):
    """Construct fixed points on generalized ultrametric semilattices."""
    ctx.obj = ctx.command.config or current_config()


@cli.command()
@click.argument("instance")
@click.option(
    "--samples",
    type=click.IntRange(min=1),
    default=None,
    help="Number of random triples to test.",
)
@seed_option
@out_option
@click.pass_obj
def audit(config, instance, samples, seed, out):
    """Audit the axioms of INSTANCE (seq, designal or herbrand)."""
    samples = config.SAMPLES if samples is None else samples
    seed = config.SEED if seed is None else seed
    space = build_instance(instance, config, seed)
    report = audit_axioms(space, samples, seed)
    out.write(format_report(space, report))
    if not report.ok:
        logger.warning(
            f"{space.name} violates {', '.join(report.axioms_violated())}"
        )
        raise click.exceptions.Exit(EXIT_HYPOTHESIS_FAILURE)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@trace_option
@budget_option
@out_option
@click.pass_obj
def lp(config, path, trace, budget, out):
    """Print the supported model of the program in PATH."""
    budget = config.BUDGET if budget is None else budget
    with open(path, encoding="utf-8") as handle:
        program = parse_program(handle.read())
    ground = ground_program(program, program.constants())
    logger.debug(f"Ground program:\n{format_program(ground)}")
    result = solve_supported_model(ground, budget, config.SUCCESSOR_QUOTA)
    out.write("".join(f"{atom}\n" for atom in sorted(result.fixed_point)))
    if trace:
        space = HerbrandSpace(infer_level_mapping(ground))
        out.write(format_trace(space, result.trace))


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@trace_option
@budget_option
@seed_option
@out_option
@click.pass_obj
def de(config, path, trace, budget, seed, out):
    """Print the behaviour of the feedback network described in PATH."""
    budget = config.BUDGET if budget is None else budget
    seed = config.SEED if seed is None else seed
    with open(path, encoding="utf-8") as handle:
        network = NetworkSchema().load(json.load(handle))
    try:
        result = feedback_solve(
            network.component,
            network.horizon,
            budget,
            causality_samples=config.CAUSALITY_SAMPLES,
            sample_seed=seed,
        )
    except ConvergenceFailure as error:
        if trace and error.trace is not None:
            out.write(format_trace(SignalSpace(network.horizon), error.trace))
        raise
    out.write(json.dumps(SignalSchema().dump(result.fixed_point), indent=2))
    out.write("\n")
    if trace:
        out.write(format_trace(SignalSpace(network.horizon), result.trace))


def main():
    init_app(cli)
    cli(prog_name="ultrafix")
