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

"""Configure the command group before it runs."""

import logging
import logging.config

from raven.handlers.logging import SentryHandler


logger = logging.getLogger(__name__)


def init_app(group):
    """Initialize the command group with config information and handlers."""
    # Import local modules here to avoid circular dependencies.
    from ultrafix import errorhandlers
    from ultrafix.settings import current_config

    group.config = current_config()

    # Configure logging
    logging.config.dictConfig(group.config.LOGGING)

    # Configure Sentry
    if group.config.SENTRY_DSN:
        sentry = SentryHandler(group.config.SENTRY_DSN, level=logging.ERROR)
        logging.getLogger().addHandler(sentry)

    # Register error handlers
    errorhandlers.init_app(group)

    logger.info("Initialization complete")
    return group
