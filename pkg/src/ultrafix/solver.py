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
Constructive fixed points of strictly contracting functions.

The construction iterates ``Φ F = λa. F(a) ⊓ F(F(a))`` from a post-fixed point
of ``F``. The iterates form an ascending chain; whenever a configured number
of successor stages has passed, a limit stage takes the supremum of the chain
so far. Iteration stops once ``Φ F`` has a fixed point, which is then a fixed
point of ``F`` as well provided ``F`` is strictly contracting on orbits.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, List, Optional, Union

from .core import DistanceValue, derived_order
from .exceptions import (
    BudgetExhausted,
    CarrierBoundExceeded,
    NotDirected,
    PreconditionError,
)


logger = logging.getLogger(__name__)

CONVERGED = "Converged"
BUDGET_EXHAUSTED = "BudgetExhausted"
LIMIT = "limit"


@dataclass(frozen=True)
class Endofunction:
    apply: Callable[[Any], Any]
    name: str = "F"

    def __call__(self, element):
        return self.apply(element)


@dataclass(frozen=True)
class Stage:
    label: Union[int, str]
    element: Any


@dataclass
class IterationTrace:
    stages: List[Stage]
    verdict: str
    fixed_point: Any = None

    @property
    def elements(self):
        return [stage.element for stage in self.stages]

    def is_ascending(self, space):
        elements = self.elements
        return all(
            derived_order(space, lower, upper)
            for lower, upper in zip(elements, elements[1:])
        )


@dataclass
class FixResult:
    fixed_point: Any
    trace: IterationTrace
    f_fixed_check: bool


@dataclass(frozen=True)
class ContractionViolation:
    a1: Any
    a2: Any
    before: DistanceValue
    after: DistanceValue


@dataclass(frozen=True)
class OrbitViolation:
    seed: Any
    step: int
    element: Any
    before: DistanceValue
    after: DistanceValue


@dataclass(frozen=True)
class OrderViolation:
    a1: Any
    a2: Any


@dataclass
class CheckReport:
    samples_tested: int
    violations: List[Any] = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def phi(space, function, element):
    """Return ``F(a) ⊓ F(F(a))``, always a post-fixed point of ``F``."""
    image = function(element)
    return space.meet(image, function(image))


def phi_function(space, function):
    """Return ``Φ F`` as an endofunction in its own right."""
    return Endofunction(
        lambda element: phi(space, function, element), name=f"Φ {function.name}"
    )


def is_post_fixed(space, function, element):
    return derived_order(space, element, function(element))


def _require_sample(pairs):
    pairs = list(pairs)
    if not pairs:
        raise PreconditionError("The check needs a non-empty sample")
    return pairs


def check_contracting(space, function, pairs):
    """List the sampled pairs whose images are further apart than they are."""
    pairs = _require_sample(pairs)
    report = CheckReport(samples_tested=len(pairs))
    for a1, a2 in pairs:
        before = space.distance(a1, a2)
        after = space.distance(function(a1), function(a2))
        if not space.distance_leq(after, before):
            report.violations.append(
                ContractionViolation(a1, a2, before, after)
            )
    return report


def check_strictly_contracting(space, function, pairs):
    """List the sampled pairs of distinct elements whose images are not
    strictly closer than they are."""
    pairs = _require_sample(pairs)
    report = CheckReport(samples_tested=len(pairs))
    for a1, a2 in pairs:
        if a1 == a2:
            continue
        before = space.distance(a1, a2)
        after = space.distance(function(a1), function(a2))
        if not space.distance_lt(after, before):
            report.violations.append(
                ContractionViolation(a1, a2, before, after)
            )
    return report


def check_strictly_contracting_on_orbits(space, function, seeds, budget):
    """
    Walk the orbit of every seed and check successive distances shrink.

    Whenever ``a ≠ F(a)`` along an orbit, ``d(F(a), F(F(a)))`` must be
    strictly below ``d(a, F(a))``. Each orbit is followed for at most
    ``budget`` steps, or until it reaches a fixed point or leaves a bounded
    carrier.
    """
    if budget < 1:
        raise PreconditionError("The orbit budget must be at least one")
    report = CheckReport(samples_tested=0)
    for seed in seeds:
        element = seed
        for step in range(budget):
            try:
                image = function(element)
                if image == element:
                    break
                image_of_image = function(image)
            except CarrierBoundExceeded:
                break
            report.samples_tested += 1
            before = space.distance(element, image)
            after = space.distance(image, image_of_image)
            if not space.distance_lt(after, before):
                report.violations.append(
                    OrbitViolation(seed, step, element, before, after)
                )
            element = image
    return report


def check_order_preserving(space, function, pairs):
    """List the sampled pairs with ``a1 ⊑ a2`` but not ``F(a1) ⊑ F(a2)``."""
    pairs = _require_sample(pairs)
    report = CheckReport(samples_tested=len(pairs))
    for a1, a2 in pairs:
        if derived_order(space, a1, a2) and not derived_order(
            space, function(a1), function(a2)
        ):
            report.violations.append(OrderViolation(a1, a2))
    return report


def solve_fixed_point(
    space,
    function,
    seed,
    budget,
    successor_quota=None,
    from_post_fixed=False,
):
    """
    Construct the fixed point of ``function`` by staged ``Φ`` iteration.

    Parameters
    ----------
    space : GusInstance
        The carrier the function acts on.
    function : Endofunction
        Expected to be contracting and strictly contracting on orbits. This
        is not verified; a function violating it shows up as an exhausted
        budget or as a failed ``f_fixed_check``.
    seed : carrier element
        Any element. The iteration starts at ``Φ F(seed)``, or at ``seed``
        itself when ``from_post_fixed`` is set.
    budget : int
        The maximal number of stages, limit stages included.
    successor_quota : int, optional
        Insert a limit stage after this many successor stages.
    from_post_fixed : bool
        Start from ``seed``, which must be a post-fixed point of ``function``.

    Returns
    -------
    FixResult
        The fixed point with the trace of every stage.

    Raises
    ------
    BudgetExhausted
        If no stage was a fixed point of ``Φ F`` within the budget, or the
        iteration left a bounded carrier. The exception carries the trace.
    ChainSupremumUnavailable
        If a limit stage is due and the instance cannot take it.

    """
    if budget < 1:
        raise PreconditionError("The stage budget must be at least one")
    if successor_quota is not None and successor_quota < 1:
        raise PreconditionError("The successor quota must be at least one")
    stages = []

    def exhausted(reason):
        trace = IterationTrace(stages, BUDGET_EXHAUSTED)
        logger.info(
            f"Gave up on {function.name} after {len(stages)} stages: {reason}"
        )
        raise BudgetExhausted(
            f"No fixed point of {function.name} within {budget} stages "
            f"({reason})",
            trace,
        )

    try:
        if from_post_fixed:
            if not is_post_fixed(space, function, seed):
                raise PreconditionError(
                    f"{space.render(seed)} is not a post-fixed point of "
                    f"{function.name}"
                )
            current = seed
        else:
            current = phi(space, function, seed)
    except CarrierBoundExceeded as error:
        exhausted(str(error))
    stages.append(Stage(0, current))

    counter = 0
    successors = 0
    while True:
        try:
            following = phi(space, function, current)
        except CarrierBoundExceeded as error:
            exhausted(str(error))
        if following == current:
            break
        if len(stages) >= budget:
            exhausted("stage budget spent")
        counter += 1
        successors += 1
        stages.append(Stage(counter, following))
        current = following
        if successor_quota is not None and successors >= successor_quota:
            if len(stages) >= budget:
                exhausted("stage budget spent")
            current = space.sup_chain([stage.element for stage in stages])
            stages.append(Stage(LIMIT, current))
            successors = 0

    trace = IterationTrace(stages, CONVERGED, fixed_point=current)
    f_fixed_check = function(current) == current
    if f_fixed_check:
        logger.debug(f"{function.name} converged in {len(stages)} stages")
    else:
        logger.warning(
            f"{space.render(current)} is fixed by Φ {function.name} but not "
            f"by {function.name}; it is not strictly contracting on orbits"
        )
    return FixResult(current, trace, f_fixed_check)


def directed_supremum(space, elements):
    """
    Return the least upper bound of a finite directed set.

    A finite set is directed exactly when it has a maximum, which is then its
    supremum. Raises ``NotDirected`` otherwise.
    """
    elements = list(elements)
    for candidate in elements:
        if all(derived_order(space, other, candidate) for other in elements):
            return candidate
    raise NotDirected(
        f"The {len(elements)} given elements of {space.name} have no maximum"
    )


def fix_via_postfixed_supremum(space, function, elements=None):
    """
    Return the supremum of all post-fixed points of ``function``.

    For a strictly contracting function on a finite carrier this is its
    unique fixed point. ``elements`` defaults to the full carrier.
    """
    if elements is None:
        elements = space.elements()
    post_fixed = [a for a in elements if is_post_fixed(space, function, a)]
    logger.debug(
        f"{len(post_fixed)} post-fixed points of {function.name} "
        f"in {space.name}"
    )
    return directed_supremum(space, post_fixed)


@dataclass(frozen=True)
class InductionVerdict:
    holds: bool
    failed_stage: Optional[Union[int, str]] = None
    fixed_point: Any = None

    def __str__(self):
        if self.holds:
            return "Holds"
        return f"Fails at stage {self.failed_stage}"


def check_induction_principle(
    space, function, predicate, witness, budget, successor_quota=None
):
    """
    Check fixed-point induction along the actual iteration.

    The iteration is the one of ``solve_fixed_point`` seeded with
    ``witness``; ``witness`` itself is stage 0. The predicate is checked at
    every stage, limit stages included, and so finally at the fixed point.
    """
    if not predicate(witness):
        raise PreconditionError("The witness does not satisfy the predicate")
    result = solve_fixed_point(
        space, function, witness, budget, successor_quota=successor_quota
    )
    labelled = [(0, witness)]
    for stage in result.trace.stages:
        label = stage.label if stage.label == LIMIT else stage.label + 1
        labelled.append((label, stage.element))
    for label, element in labelled:
        if not predicate(element):
            return InductionVerdict(False, label, result.fixed_point)
    return InductionVerdict(True, None, result.fixed_point)


def format_trace(space, trace):
    """Render a trace one stage per line, ending with the verdict."""
    lines = [
        f"stage {stage.label} {space.render(stage.element)}"
        for stage in trace.stages
    ]
    lines.append(f"verdict {trace.verdict}")
    return "\n".join(lines) + "\n"
