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

"""Build the configured instances by name."""

import logging
import random

from fuzzywuzzy import process

from .designal import SignalSpace, parse_time
from .exceptions import UnknownInstance
from .herbrand import HerbrandSpace, LevelMap
from .seqspace import SequenceSpace


logger = logging.getLogger(__name__)

INSTANCE_NAMES = ("seq", "designal", "herbrand")


def _herbrand(config, seed):
    # The level mapping is part of the instance, so it is drawn from the seed.
    rng = random.Random(seed)
    levels = {
        f"p{index}": rng.randint(0, config.HERBRAND_MAX_LEVEL)
        for index in range(config.HERBRAND_ATOMS)
    }
    return HerbrandSpace(LevelMap(levels, alpha=config.HERBRAND_MAX_LEVEL + 1))


def build_instance(name, config, seed=0):
    """
    Return the instance called ``name`` with the parameters of ``config``.

    Raises
    ------
    UnknownInstance
        If ``name`` is not one of ``INSTANCE_NAMES``.

    """
    if name == "seq":
        return SequenceSpace(config.SEQ_ALPHABET, config.SEQ_DEPTH_CAP)
    elif name == "designal":
        return SignalSpace(
            parse_time(config.SIGNAL_HORIZON),
            config.SIGNAL_VALUES,
            config.SIGNAL_GRID,
            config.SIGNAL_MAX_EVENTS,
        )
    elif name == "herbrand":
        return _herbrand(config, seed)
    suggestion, score = process.extractOne(name, INSTANCE_NAMES)
    logger.debug(f"Closest instance to '{name}' is '{suggestion}' ({score})")
    choices = ", ".join(INSTANCE_NAMES)
    message = f"Unknown instance '{name}'; choose from {choices}"
    if score >= 60:
        message += f" (did you mean '{suggestion}'?)"
    raise UnknownInstance(message)
