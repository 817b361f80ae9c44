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

"""Test the Herbrand instance."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ultrafix.core import audit_axioms, audit_exhaustive
from ultrafix.exceptions import BaseMismatch, NotAChain, PreconditionError
from ultrafix.herbrand import (
    HerbrandSpace,
    LevelMap,
    herb_distance,
    herb_meet,
    herb_sup_chain,
)


interpretations = st.frozensets(st.sampled_from(["p", "q"]))


def test_level_map(example_levels):
    assert example_levels["p"] == 1
    assert example_levels.alpha == 2
    assert example_levels.base == {"p", "q"}
    assert example_levels == LevelMap({"p": 1, "q": 0})


def test_empty_level_map():
    assert LevelMap({}).alpha == 1


@pytest.mark.raises
@pytest.mark.parametrize(
    "levels, alpha", [({"p": -1}, None), ({"p": 2}, 2), ({"p": 0}, 0)]
)
def test_invalid_level_map(levels, alpha):
    with pytest.raises(PreconditionError):
        LevelMap(levels, alpha)


def test_herb_meet(example_levels):
    both = frozenset({"q", "p"})
    assert herb_meet(example_levels, both, frozenset({"q"})) == {"q"}
    assert herb_meet(example_levels, both, both) == both
    assert herb_meet(
        example_levels, frozenset({"p"}), frozenset({"q"})
    ) == frozenset()


def test_herb_distance(example_levels):
    both = frozenset({"q", "p"})
    distance = herb_distance(example_levels, both, frozenset({"q"}))
    assert repr(distance) == "Level(1)"
    assert herb_distance(example_levels, both, both).is_zero
    distance = herb_distance(example_levels, frozenset({"q"}), frozenset())
    assert repr(distance) == "Level(0)"


def test_herb_sup_chain(example_levels):
    chain = [frozenset(), frozenset({"q"}), frozenset({"q", "p"})]
    assert herb_sup_chain(example_levels, chain) == {"p", "q"}
    assert herb_sup_chain(example_levels, chain[1:2]) == {"q"}


@pytest.mark.raises
def test_herb_sup_chain_of_incomparable():
    levels = LevelMap({"p": 0, "q": 0})
    with pytest.raises(NotAChain):
        herb_sup_chain(levels, [frozenset({"q"}), frozenset({"p"})])


@pytest.mark.raises
def test_atoms_outside_the_base(herbrand_space):
    with pytest.raises(BaseMismatch):
        herbrand_space.make({"r"})


def test_render(herbrand_space):
    assert herbrand_space.render(frozenset({"q", "p"})) == "{p, q}"
    assert herbrand_space.render(frozenset()) == "{}"


def test_elements(herbrand_space):
    assert len(herbrand_space.elements()) == 4


def test_exhaustive_audit_of_small_bases():
    """Audit every level assignment to bases of up to three atoms."""
    for size in range(4):
        atoms = [f"p{index}" for index in range(size)]
        for levels in itertools.product(range(3), repeat=size):
            space = HerbrandSpace(LevelMap(dict(zip(atoms, levels)), alpha=3))
            assert audit_exhaustive(space, space.elements()).ok, levels


def test_exhaustive_audit_of_four_atoms():
    """
    Audit bases of four atoms, one level assignment per permutation class.

    Renaming atoms maps interpretations onto interpretations, so sorted
    level tuples cover every assignment.
    """
    atoms = ["p0", "p1", "p2", "p3"]
    for levels in itertools.combinations_with_replacement(range(3), 4):
        space = HerbrandSpace(LevelMap(dict(zip(atoms, levels)), alpha=3))
        assert audit_exhaustive(space, space.elements()).ok, levels


def test_sampled_audit():
    space = HerbrandSpace(LevelMap({"a": 0, "b": 1, "c": 1, "d": 2, "e": 0}))
    assert audit_axioms(space, 500, 7).ok


@given(interpretations, interpretations)
def test_meet_is_below_both(i1, i2):
    levels = LevelMap({"q": 0, "p": 1})
    meet = herb_meet(levels, i1, i2)
    assert meet <= i1 & i2
    assert herb_meet(levels, meet, i1) == meet
    assert herb_meet(levels, meet, i2) == meet
