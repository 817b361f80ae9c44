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

"""
Error handlers and the exit-code contract.

Every handler reports on standard error and returns the process exit code:

* 0 success
* 1 unexpected internal error
* 2 invalid input
* 3 a hypothesis of the construction does not hold
* 4 the construction did not converge
"""

import json
import logging
import sys

import click
from marshmallow import ValidationError

from .exceptions import ConvergenceFailure, InputError, NotLocallyHierarchical


logger = logging.getLogger(__name__)

EXIT_INTERNAL_ERROR = 1
EXIT_INPUT_ERROR = 2
EXIT_HYPOTHESIS_FAILURE = 3
EXIT_CONVERGENCE_FAILURE = 4


def init_app(group):
    group.register_error_handler(InputError, handle_input_error)
    group.register_error_handler(ValidationError, handle_validation_error)
    group.register_error_handler(json.JSONDecodeError, handle_input_error)
    group.register_error_handler(UnicodeDecodeError, handle_input_error)
    group.register_error_handler(OSError, handle_input_error)
    group.register_error_handler(
        NotLocallyHierarchical, handle_not_locally_hierarchical
    )
    group.register_error_handler(ConvergenceFailure, handle_convergence_failure)
    group.register_error_handler(Exception, handle_uncaught_error)


def handle_input_error(error):
    logger.debug(f"Rejected input: {error}")
    click.echo(f"Error: {error}", err=True)
    return EXIT_INPUT_ERROR


def handle_validation_error(error):
    """
    Handle marshmallow validation errors.

    Report every message collected by the schema, the way they are known to
    be available on the error object.
    """
    messages = json.dumps(error.normalized_messages(), sort_keys=True)
    logger.debug(f"Invalid document: {messages}")
    click.echo(f"Error: invalid document: {messages}", err=True)
    return EXIT_INPUT_ERROR


def handle_not_locally_hierarchical(error):
    logger.info(f"Dependency cycle through {len(error.cycle)} atoms")
    click.echo(f"Error: {error}", err=True)
    return EXIT_HYPOTHESIS_FAILURE


def handle_convergence_failure(error):
    logger.warning(str(error))
    click.echo(f"Error: {error}", err=True)
    return EXIT_CONVERGENCE_FAILURE


def handle_uncaught_error(error):
    """
    Handle any uncaught exceptions.

    Since the handler suppresses the actual exception, log it explicitly to
    ensure it's logged and recorded in Sentry.
    """
    logger.error("Uncaught exception", exc_info=sys.exc_info())
    click.echo("Error: internal error", err=True)
    return EXIT_INTERNAL_ERROR
