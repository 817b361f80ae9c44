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

"""Provide session level fixtures."""

import os

import pytest
from click.testing import CliRunner

from ultrafix.app import init_app
from ultrafix.cli import cli
from ultrafix.designal import SignalSpace
from ultrafix.herbrand import HerbrandSpace, LevelMap
from ultrafix.seqspace import SequenceSpace


os.environ["ENVIRONMENT"] = "testing"


@pytest.fixture(scope="session")
def app():
    """Provide an initialized command group for use in certain test cases."""
    init_app(cli)
    return cli


@pytest.fixture(scope="session")
def runner(app):
    """Provide a command-line runner to be used by almost all CLI tests."""
    return CliRunner(mix_stderr=False)


@pytest.fixture(scope="session")
def config(app):
    return app.config


@pytest.fixture
def seq_space():
    """Provide sequences over a three-letter alphabet, at most 3 long."""
    return SequenceSpace("abx", depth_cap=3)


@pytest.fixture
def signal_space():
    return SignalSpace(4)


@pytest.fixture
def example_levels():
    """Provide the level mapping of the program ``q. p :- q.``."""
    return LevelMap({"q": 0, "p": 1})


@pytest.fixture
def herbrand_space(example_levels):
    return HerbrandSpace(example_levels)


@pytest.fixture
def write_file(tmp_path):
    """Provide a function writing text to a fresh file, returning its path."""

    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write
