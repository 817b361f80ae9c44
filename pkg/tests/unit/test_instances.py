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

"""Test building instances by name."""

import pytest

from ultrafix.designal import SignalSpace
from ultrafix.exceptions import UnknownInstance
from ultrafix.herbrand import HerbrandSpace
from ultrafix.instances import INSTANCE_NAMES, build_instance
from ultrafix.seqspace import SequenceSpace


@pytest.mark.parametrize(
    "name, cls",
    [
        ("seq", SequenceSpace),
        ("designal", SignalSpace),
        ("herbrand", HerbrandSpace),
    ],
)
def test_build_instance(config, name, cls):
    space = build_instance(name, config, 7)
    assert isinstance(space, cls)
    assert space.name == name


def test_configured_parameters(config):
    assert build_instance("seq", config).depth_cap == config.SEQ_DEPTH_CAP
    assert build_instance("designal", config).horizon == 4
    herbrand = build_instance("herbrand", config, 7)
    assert len(herbrand.base) == config.HERBRAND_ATOMS
    assert herbrand.level_map.alpha == config.HERBRAND_MAX_LEVEL + 1


def test_herbrand_levels_follow_the_seed(config):
    first = build_instance("herbrand", config, 3).level_map
    assert build_instance("herbrand", config, 3).level_map == first


@pytest.mark.raises
def test_suggestion(config):
    with pytest.raises(UnknownInstance, match="did you mean 'seq'"):
        build_instance("seqs", config)


@pytest.mark.raises
def test_no_suggestion(config):
    with pytest.raises(UnknownInstance) as error:
        build_instance("zzzzzz", config)
    assert "did you mean" not in str(error.value)
    assert ", ".join(INSTANCE_NAMES) in str(error.value)
