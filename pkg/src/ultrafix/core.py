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

"""Generalized ultrametric semilattices and their axiom audit."""

import abc
import itertools
import logging
import random
from collections import OrderedDict
from dataclasses import dataclass, field
from numbers import Rational
from typing import Any, List, Optional, Tuple

from .exceptions import (
    ChainSupremumUnavailable,
    IncompatibleDistances,
    NotAChain,
    PreconditionError,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DistanceValue:
    """
    Symbolic element of a pointed distance set.

    A distance is either zero or a ``Level``. Levels are compared in reverse:
    a deeper level of agreement is a smaller distance, so ``Level(5)`` is
    below ``Level(2)``. This stands in for the ``2^-x`` distances without any
    floating point.

    Attributes
    ----------
    family : str
        The instance family ("index", "time", "level"). Values of different
        families are not comparable.
    level : numbers.Rational or None
        The disagreement level; ``None`` encodes zero.

    """

    family: str
    level: Optional[Rational] = None

    def __post_init__(self):
        if self.level is not None and self.level < 0:
            raise PreconditionError(f"Negative distance level {self.level}")

    @classmethod
    def zero(cls, family):
        return cls(family)

    @classmethod
    def at(cls, family, level):
        return cls(family, level)

    @property
    def kind(self):
        return "Zero" if self.level is None else "Level"

    @property
    def is_zero(self):
        return self.level is None

    def __repr__(self):
        if self.is_zero:
            return "Zero"
        return f"Level({self.level})"


def distance_leq(d1, d2):
    """Return whether ``d1`` is below or equal to ``d2``."""
    if d1.family != d2.family:
        raise IncompatibleDistances(
            f"Cannot compare {d1.family} distance with {d2.family} distance"
        )
    if d1.is_zero:
        return True
    if d2.is_zero:
        return False
    return d1.level >= d2.level


def distance_lt(d1, d2):
    return distance_leq(d1, d2) and d1 != d2


class GusInstance(abc.ABC):
    """
    A generalized ultrametric semilattice realized on a concrete carrier.

    Subclasses supply the carrier sampler, the meet and the distance. Carrier
    elements must be immutable values whose ``==`` is equality of canonical
    forms.
    """

    name = "abstract"
    family = "abstract"

    @abc.abstractmethod
    def carrier_probe(self, rng):
        """Draw one carrier element using the given ``random.Random``."""

    @abc.abstractmethod
    def meet(self, a1, a2):
        pass

    @abc.abstractmethod
    def distance(self, a1, a2):
        pass

    @property
    def zero(self):
        return DistanceValue.zero(self.family)

    @property
    def bottom(self):
        """Return the designated least element, used as a default seed."""
        raise PreconditionError(f"{self.name} has no designated bottom")

    def distance_leq(self, d1, d2):
        return distance_leq(d1, d2)

    def distance_lt(self, d1, d2):
        return self.distance_leq(d1, d2) and d1 != d2

    def render(self, element):
        return repr(element)

    def sup_chain(self, chain):
        raise ChainSupremumUnavailable(
            f"{self.name} cannot take the supremum of a chain"
        )

    def elements(self):
        """Return every carrier element, for finite carriers only."""
        raise PreconditionError(f"The carrier of {self.name} is not enumerable")


def derived_order(space, a1, a2):
    """Return whether ``a1`` is below ``a2``, i.e. ``a1 ⊓ a2 = a1``."""
    return space.meet(a1, a2) == a1


def maximum_of_chain(meet, chain):
    """
    Return the supremum of a finite ascending chain, its last element.

    ``meet`` is the meet of the carrier. Raises ``NotAChain`` if two adjacent
    elements are not ordered.
    """
    chain = list(chain)
    if not chain:
        raise PreconditionError("The supremum of an empty chain is undefined")
    for lower, upper in zip(chain, chain[1:]):
        if meet(lower, upper) != lower:
            raise NotAChain(f"{lower!r} is not below {upper!r}")
    return chain[-1]


################################################################################
# Axioms                                                                       #
################################################################################


def _pairs(a1, a2, a3):
    return ((a1, a2), (a2, a3), (a1, a3))


def _associativity(space, a1, a2, a3):
    meet = space.meet
    return meet(meet(a1, a2), a3) == meet(a1, meet(a2, a3))


def _commutativity(space, a1, a2, a3):
    return all(
        space.meet(x, y) == space.meet(y, x) for x, y in _pairs(a1, a2, a3)
    )


def _idempotence(space, a1, a2, a3):
    return all(space.meet(x, x) == x for x in (a1, a2, a3))


def _pointedness(space, a1, a2, a3):
    return all(
        space.distance_leq(space.zero, space.distance(x, y))
        for x, y in _pairs(a1, a2, a3)
    )


def _distance_order(space, a1, a2, a3):
    leq = space.distance_leq
    values = [space.distance(x, y) for x, y in _pairs(a1, a2, a3)]
    for x in values:
        if not leq(x, x):
            return False
    for x, y in itertools.product(values, repeat=2):
        if leq(x, y) and leq(y, x) and x != y:
            return False
    for x, y, z in itertools.product(values, repeat=3):
        if leq(x, y) and leq(y, z) and not leq(x, z):
            return False
    return True


def _identity_of_indiscernibles(space, a1, a2, a3):
    return all(
        (space.distance(x, y) == space.zero) == (x == y)
        for x, y in _pairs(a1, a2, a3)
    )


def _symmetry(space, a1, a2, a3):
    return all(
        space.distance(x, y) == space.distance(y, x)
        for x, y in _pairs(a1, a2, a3)
    )


def _ultrametric_inequality(space, a1, a2, a3):
    # The inequality quantifies over the whole distance set; only the
    # distances realized by the triple are tried.
    leq = space.distance_leq
    d12 = space.distance(a1, a2)
    d23 = space.distance(a2, a3)
    d13 = space.distance(a1, a3)
    for p in (d12, d23, d13):
        if leq(d12, p) and leq(d23, p) and not leq(d13, p):
            return False
    return True


def _coordination_meet(space, a1, a2, a3):
    if not space.distance_leq(space.distance(a1, a2), space.distance(a1, a3)):
        return True
    left = space.meet(a1, a3)
    return space.meet(left, space.meet(a1, a2)) == left


def _coordination_distance(space, a1, a2, a3):
    return space.distance_leq(
        space.distance(space.meet(a1, a2), space.meet(a1, a3)),
        space.distance(a2, a3),
    )


AXIOMS = OrderedDict(
    [
        ("associativity", _associativity),
        ("commutativity", _commutativity),
        ("idempotence", _idempotence),
        ("pointedness", _pointedness),
        ("distance_order", _distance_order),
        ("identity_of_indiscernibles", _identity_of_indiscernibles),
        ("symmetry", _symmetry),
        ("ultrametric_inequality", _ultrametric_inequality),
        ("coordination_meet", _coordination_meet),
        ("coordination_distance", _coordination_distance),
    ]
)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: Tuple[Any, Any, Any]


@dataclass
class AxiomReport:
    samples_tested: int
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def axioms_violated(self):
        return sorted({v.axiom for v in self.violations})


def replay(space, axiom, witness):
    """Re-evaluate a single axiom on a recorded witness triple."""
    return AXIOMS[axiom](space, *witness)


def _audit(space, triples):
    report = AxiomReport(samples_tested=0)
    for triple in triples:
        report.samples_tested += 1
        for axiom, holds in AXIOMS.items():
            if not holds(space, *triple):
                report.violations.append(Violation(axiom, tuple(triple)))
    logger.info(
        f"Audited {report.samples_tested} triples of {space.name}: "
        f"{len(report.violations)} violations"
    )
    return report


def audit_axioms(space, n_samples, seed):
    """
    Audit the generalized ultrametric semilattice axioms on random triples.

    Parameters
    ----------
    space : GusInstance
        The instance under audit.
    n_samples : int
        The number of triples to draw; must be at least one.
    seed : int
        Seed of the ``random.Random`` handed to the instance sampler, which
        makes the audit reproducible.

    Returns
    -------
    AxiomReport
        Every failed axiom together with the triple witnessing the failure.

    """
    if n_samples < 1:
        raise PreconditionError("An audit needs at least one sample")
    rng = random.Random(seed)
    probe = space.carrier_probe
    triples = [
        (probe(rng), probe(rng), probe(rng)) for _ in range(n_samples)
    ]
    return _audit(space, triples)


def audit_exhaustive(space, elements):
    """Audit the axioms on every ordered triple of the given elements."""
    elements = list(elements)
    if not elements:
        raise PreconditionError("An audit needs at least one element")
    return _audit(space, itertools.product(elements, repeat=3))


def format_report(space, report):
    """Render an axiom report as lines of text."""
    lines = [
        f"instance {space.name}",
        f"samples {report.samples_tested}",
        f"violations {len(report.violations)}",
    ]
    for violation in report.violations:
        witness = " ".join(space.render(a) for a in violation.witness)
        lines.append(f"violation {violation.axiom} {witness}")
    return "\n".join(lines) + "\n"
