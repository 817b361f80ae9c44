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

"""Finite sequences with prefix meet and Baire distance."""

import itertools
import logging

from .core import DistanceValue, GusInstance, maximum_of_chain
from .exceptions import DepthCapExceeded, InvalidElement, PreconditionError


logger = logging.getLogger(__name__)


def _common_prefix_length(s1, s2):
    length = 0
    for x, y in zip(s1, s2):
        if x != y:
            break
        length += 1
    return length


def seq_meet(s1, s2):
    """Return the longest common prefix."""
    return s1[: _common_prefix_length(s1, s2)]


def seq_distance(s1, s2):
    """
    Return ``Level(n)`` for the first index ``n`` where the sequences differ.

    An index past the end of exactly one sequence counts as a difference.
    """
    if s1 == s2:
        return DistanceValue.zero(SequenceSpace.family)
    return DistanceValue.at(SequenceSpace.family, _common_prefix_length(s1, s2))


class SequenceSpace(GusInstance):
    """
    Sequences over a finite alphabet, no longer than ``depth_cap``.

    Elements are tuples of symbols. Use ``make`` to build one from any
    iterable of symbols, e.g. a string of one-character symbols.
    """

    name = "seq"
    family = "index"

    def __init__(self, alphabet="ab", depth_cap=8):
        self.alphabet = tuple(alphabet)
        if not self.alphabet:
            raise PreconditionError("The alphabet must not be empty")
        if depth_cap < 0:
            raise PreconditionError("The depth cap must not be negative")
        self.depth_cap = depth_cap

    def make(self, symbols):
        sequence = tuple(symbols)
        if len(sequence) > self.depth_cap:
            raise DepthCapExceeded(
                f"Sequence of length {len(sequence)} exceeds the depth cap "
                f"{self.depth_cap}"
            )
        unknown = set(sequence) - set(self.alphabet)
        if unknown:
            raise InvalidElement(f"Symbols {sorted(unknown)} not in alphabet")
        return sequence

    def carrier_probe(self, rng):
        length = rng.randint(0, self.depth_cap)
        return tuple(rng.choice(self.alphabet) for _ in range(length))

    def meet(self, a1, a2):
        return seq_meet(a1, a2)

    def distance(self, a1, a2):
        return seq_distance(a1, a2)

    @property
    def bottom(self):
        return ()

    def render(self, element):
        return '"' + "".join(str(symbol) for symbol in element) + '"'

    def sup_chain(self, chain):
        return seq_sup_chain(chain)

    def elements(self):
        return [
            sequence
            for length in range(self.depth_cap + 1)
            for sequence in itertools.product(self.alphabet, repeat=length)
        ]


def seq_sup_chain(chain):
    """Return the supremum of a finite prefix chain, its longest element."""
    return maximum_of_chain(seq_meet, chain)
