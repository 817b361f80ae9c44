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

"""Discrete-event signals with rational time stamps on a bounded horizon."""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .core import DistanceValue, GusInstance, maximum_of_chain
from .exceptions import HorizonMismatch, InvalidElement, PreconditionError


logger = logging.getLogger(__name__)

RationalTime = Fraction


def parse_time(text):
    """Parse ``"num/den"`` or an integer string into an exact time."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as error:
        raise InvalidElement(f"Invalid time stamp '{text}'") from error


def format_time(time):
    time = Fraction(time)
    return f"{time.numerator}/{time.denominator}"


@dataclass(frozen=True)
class EventSignal:
    """
    A finite list of ``(time, value)`` events below a horizon.

    Times are exact, strictly increasing and lie in ``[0, horizon)``, so the
    signal is a partial function of time. Values are opaque symbols.
    """

    horizon: Fraction
    events: Tuple[Tuple[Fraction, str], ...] = ()

    def __post_init__(self):
        horizon = Fraction(self.horizon)
        events = tuple((Fraction(time), value) for time, value in self.events)
        if horizon <= 0:
            raise InvalidElement(f"Horizon {horizon} must be positive")
        times = [time for time, _ in events]
        if any(later <= earlier for earlier, later in zip(times, times[1:])):
            raise InvalidElement("Event times must be strictly increasing")
        if times and (times[0] < 0 or times[-1] >= horizon):
            raise InvalidElement(
                f"Event times must lie in [0, {format_time(horizon)})"
            )
        object.__setattr__(self, "horizon", horizon)
        object.__setattr__(self, "events", events)

    def before(self, cutoff):
        """Return the restriction of the signal to times below ``cutoff``."""
        return EventSignal(
            self.horizon, [(t, v) for t, v in self.events if t < cutoff]
        )


def _check_horizons(s1, s2):
    if s1.horizon != s2.horizon:
        raise HorizonMismatch(
            f"Horizons {format_time(s1.horizon)} and "
            f"{format_time(s2.horizon)} differ"
        )


def first_disagreement(s1, s2):
    """
    Return ``(index, time)`` of the first disagreement of two signals.

    ``index`` is the length of the common event prefix, ``time`` the least
    time where one signal has an event the other lacks or the values differ,
    or ``None`` if the signals are equal.
    """
    _check_horizons(s1, s2)
    for index, (e1, e2) in enumerate(zip(s1.events, s2.events)):
        if e1 != e2:
            return index, min(e1[0], e2[0])
    shorter = min(len(s1.events), len(s2.events))
    longer = s1 if len(s1.events) > len(s2.events) else s2
    if len(longer.events) == shorter:
        return shorter, None
    return shorter, longer.events[shorter][0]


def sig_meet(s1, s2):
    """Return the greatest common prefix of two signals."""
    _, time = first_disagreement(s1, s2)
    if time is None:
        return s1
    return s1.before(time)


def sig_distance(s1, s2):
    """Return ``Level(t)`` for the first disagreement time ``t``."""
    _, time = first_disagreement(s1, s2)
    if time is None:
        return DistanceValue.zero(SignalSpace.family)
    return DistanceValue.at(SignalSpace.family, time)


def sig_sup_chain(chain):
    chain = list(chain)
    for signal in chain[1:]:
        _check_horizons(chain[0], signal)
    return maximum_of_chain(sig_meet, chain)


class SignalSpace(GusInstance):
    """
    Discrete-event signals with a common horizon.

    The sampler draws up to ``max_events`` events on the time grid with step
    ``1 / grid``, values from ``values``.
    """

    name = "designal"
    family = "time"

    def __init__(self, horizon, values=("a", "b"), grid=2, max_events=5):
        self.horizon = Fraction(horizon)
        if self.horizon <= 0:
            raise PreconditionError("The horizon must be positive")
        if grid < 1:
            raise PreconditionError("The grid must have at least one step")
        self.values = tuple(values)
        self.grid = grid
        self.max_events = max_events

    @property
    def grid_times(self):
        return [
            Fraction(j, self.grid)
            for j in range(math.ceil(self.horizon * self.grid))
        ]

    def make(self, events):
        return EventSignal(self.horizon, events)

    def carrier_probe(self, rng):
        grid_times = self.grid_times
        count = rng.randint(0, min(self.max_events, len(grid_times)))
        times = sorted(rng.sample(grid_times, count))
        return EventSignal(
            self.horizon, [(time, rng.choice(self.values)) for time in times]
        )

    def meet(self, a1, a2):
        return sig_meet(a1, a2)

    def distance(self, a1, a2):
        return sig_distance(a1, a2)

    @property
    def bottom(self):
        return EventSignal(self.horizon)

    def render(self, element):
        events = " ".join(f"{t}:{v}" for t, v in element.events)
        return f"[{events}]"

    def sup_chain(self, chain):
        return sig_sup_chain(chain)

    def elements(self):
        """Enumerate every signal on the grid; feasible for tiny grids only."""
        choices = (None,) + self.values
        signals = []
        grid_times = self.grid_times
        for assignment in itertools.product(choices, repeat=len(grid_times)):
            signals.append(
                EventSignal(
                    self.horizon,
                    [
                        (time, value)
                        for time, value in zip(grid_times, assignment)
                        if value is not None
                    ],
                )
            )
        return signals
