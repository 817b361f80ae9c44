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

"""Discrete-event components and the behaviour of their feedback loops."""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .designal import EventSignal, SignalSpace, format_time
from .exceptions import NotStrictlyCausal, PreconditionError
from .solver import (
    Endofunction,
    check_strictly_contracting,
    solve_fixed_point,
)


logger = logging.getLogger(__name__)

TRIGGER = (Fraction(0), "tick")


@dataclass(frozen=True)
class Component:
    """
    A function on signals that preserves the horizon.

    ``declared_delay`` is the least delay the component guarantees between
    input and output; ``None`` means no delay is guaranteed and the component
    is not assumed to be strictly causal.
    """

    transfer: Callable[[EventSignal], EventSignal]
    name: str
    declared_delay: Optional[Fraction] = None

    def __call__(self, signal):
        return self.transfer(signal)


def delay_component(delta):
    """Shift every event by ``delta``, dropping those moved past the horizon."""
    delta = Fraction(delta)
    if delta <= 0:
        raise PreconditionError(f"Delay {delta} must be positive")

    def transfer(signal):
        return EventSignal(
            signal.horizon,
            [
                (time + delta, value)
                for time, value in signal.events
                if time + delta < signal.horizon
            ],
        )

    return Component(transfer, f"delay({format_time(delta)})", delta)


def map_component(function, name="map"):
    """Apply ``function`` to the value of every event, keeping its time."""

    def transfer(signal):
        return EventSignal(
            signal.horizon,
            [(time, function(value)) for time, value in signal.events],
        )

    return Component(transfer, name)


def table_map_component(table, default=None):
    """
    Map values through a lookup table.

    Values missing from ``table`` map to ``default`` or, if there is none, to
    themselves.
    """
    table = dict(table)

    def lookup(value):
        if value in table:
            return table[value]
        return value if default is None else default

    return map_component(lookup, name="map")


def source_component(stimulus):
    """
    Merge an exogenous signal into the input.

    Events of ``stimulus`` win over input events at the same time; stimulus
    events at or past the input's horizon are ignored.
    """

    def transfer(signal):
        merged = dict(signal.events)
        merged.update(
            (time, value)
            for time, value in stimulus.events
            if time < signal.horizon
        )
        return EventSignal(signal.horizon, sorted(merged.items()))

    return Component(transfer, "source")


def compose(*components):
    """
    Chain components in pipeline order; the first one sees the input first.

    The declared delay of the chain is the sum of the declared delays, or
    ``None`` if no component declares one.
    """
    if not components:
        raise PreconditionError("Nothing to compose")

    def transfer(signal):
        for component in components:
            signal = component(signal)
        return signal

    delays = [c.declared_delay for c in components if c.declared_delay]
    return Component(
        transfer,
        " | ".join(component.name for component in components),
        sum(delays) if delays else None,
    )


@dataclass(frozen=True)
class Network:
    """A component closed in feedback over signals with a given horizon."""

    horizon: Fraction
    component: Component


def feedback_solve(
    component,
    horizon,
    budget,
    seed=None,
    causality_samples=200,
    sample_seed=0,
):
    """
    Return the behaviour of ``component`` in a feedback loop.

    The loop's behaviour is the unique signal ``s`` with ``component(s) =
    s``, constructed by the fixed-point solver from ``seed`` (the empty
    signal by default).

    A component declaring a delay is trusted to be strictly causal. For any
    other component strict causality is sampled after solving, on
    ``causality_samples`` random pairs drawn with ``sample_seed``. A violation
    raises ``NotStrictlyCausal`` since a fixed point found that way need not
    be unique.
    """
    space = SignalSpace(horizon)
    function = Endofunction(component.transfer, component.name)
    seed = space.bottom if seed is None else seed
    result = solve_fixed_point(space, function, seed, budget)
    if component.declared_delay is None:
        rng = random.Random(sample_seed)
        pairs = [
            (space.carrier_probe(rng), space.carrier_probe(rng))
            for _ in range(causality_samples)
        ]
        report = check_strictly_contracting(space, function, pairs)
        if not report.ok:
            logger.warning(
                f"{component.name} is not strictly causal: "
                f"{len(report.violations)} of {report.samples_tested} "
                "sampled pairs"
            )
            raise NotStrictlyCausal(
                f"{component.name} declares no delay and is not strictly "
                "causal; its feedback behaviour is not determined",
                report,
                result.trace,
            )
    return result
