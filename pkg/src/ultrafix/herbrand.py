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

"""Herbrand interpretations over a finite base with a level mapping."""

import itertools
import logging
from types import MappingProxyType

from .core import DistanceValue, GusInstance, maximum_of_chain
from .exceptions import BaseMismatch, PreconditionError


logger = logging.getLogger(__name__)


class LevelMap:
    """
    A level for every ground atom of a finite Herbrand base.

    ``alpha`` is one more than the highest level, so every level lies below
    it. It encodes the distance zero of the instance.
    """

    def __init__(self, levels, alpha=None):
        self.levels = MappingProxyType(dict(levels))
        if any(level < 0 for level in self.levels.values()):
            raise PreconditionError("Levels must be natural numbers")
        highest = max(self.levels.values(), default=-1)
        self.alpha = max(highest + 1, 1) if alpha is None else alpha
        if self.alpha <= max(highest, 0):
            raise PreconditionError(
                f"Level {highest} is not below alpha {self.alpha}"
            )
        self.base = frozenset(self.levels)

    def __getitem__(self, atom):
        return self.levels[atom]

    def __eq__(self, other):
        if not isinstance(other, LevelMap):
            return NotImplemented
        return dict(self.levels) == dict(other.levels) and (
            self.alpha == other.alpha
        )

    def __hash__(self):
        return hash((frozenset(self.levels.items()), self.alpha))

    def __repr__(self):
        return f"LevelMap({dict(self.levels)!r}, alpha={self.alpha})"


def _check_base(level_map, *interpretations):
    for interpretation in interpretations:
        if not interpretation <= level_map.base:
            unknown = sorted(interpretation - level_map.base)
            raise BaseMismatch(f"Atoms {unknown} are not in the Herbrand base")


def _disagreement_level(level_map, i1, i2):
    """Return the least level where membership differs, ``None`` if equal."""
    return min((level_map[atom] for atom in i1 ^ i2), default=None)


def herb_meet(level_map, i1, i2):
    """
    Return the atoms of both interpretations below their first disagreement.

    An atom is kept when it belongs to both and the two interpretations agree
    on every atom of its level or lower.
    """
    _check_base(level_map, i1, i2)
    level = _disagreement_level(level_map, i1, i2)
    if level is None:
        return frozenset(i1)
    return frozenset(atom for atom in i1 & i2 if level_map[atom] < level)


def herb_distance(level_map, i1, i2):
    """
    Return ``Level(λ)`` for the least level ``λ`` of disagreement.

    The distance set is ordered by reverse membership, so a larger ``λ`` is a
    smaller distance and ``Zero`` stands for ``alpha``.
    """
    _check_base(level_map, i1, i2)
    level = _disagreement_level(level_map, i1, i2)
    if level is None:
        return DistanceValue.zero(HerbrandSpace.family)
    return DistanceValue.at(HerbrandSpace.family, level)


def herb_sup_chain(level_map, chain):
    return maximum_of_chain(
        lambda i1, i2: herb_meet(level_map, i1, i2), chain
    )


class HerbrandSpace(GusInstance):
    """Subsets of the base of ``level_map``, as frozensets of atoms."""

    name = "herbrand"
    family = "level"

    def __init__(self, level_map):
        self.level_map = level_map
        self._atoms = sorted(level_map.base)

    @property
    def base(self):
        return self.level_map.base

    def make(self, atoms):
        interpretation = frozenset(atoms)
        _check_base(self.level_map, interpretation)
        return interpretation

    def carrier_probe(self, rng):
        return frozenset(atom for atom in self._atoms if rng.random() < 0.5)

    def meet(self, a1, a2):
        return herb_meet(self.level_map, a1, a2)

    def distance(self, a1, a2):
        return herb_distance(self.level_map, a1, a2)

    @property
    def bottom(self):
        return frozenset()

    def render(self, element):
        return "{" + ", ".join(sorted(element)) + "}"

    def sup_chain(self, chain):
        return herb_sup_chain(self.level_map, chain)

    def elements(self):
        return [
            frozenset(atoms)
            for size in range(len(self._atoms) + 1)
            for atoms in itertools.combinations(self._atoms, size)
        ]
