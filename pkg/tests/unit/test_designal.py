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

"""Test the discrete-event signal instance."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ultrafix.core import audit_axioms, audit_exhaustive, derived_order
from ultrafix.designal import (
    EventSignal,
    SignalSpace,
    first_disagreement,
    format_time,
    parse_time,
    sig_distance,
    sig_meet,
    sig_sup_chain,
)
from ultrafix.exceptions import HorizonMismatch, InvalidElement, NotAChain


def signal(*events, horizon=4):
    return EventSignal(horizon, events)


@st.composite
def signals(draw, horizon=4):
    times = draw(
        st.lists(
            st.fractions(min_value=0, max_value=horizon, max_denominator=4),
            unique=True,
            max_size=5,
        ).map(sorted)
    )
    times = [time for time in times if time < horizon]
    values = draw(
        st.lists(
            st.sampled_from("ab"), min_size=len(times), max_size=len(times)
        )
    )
    return EventSignal(horizon, list(zip(times, values)))


def test_sig_meet():
    s1 = signal((1, "a"), (2, "b"))
    assert sig_meet(s1, signal((1, "a"), (2, "c"))) == signal((1, "a"))
    assert sig_meet(s1, s1) == s1
    assert sig_meet(signal((1, "a")), signal((1, "a"), (3, "b"))) == signal(
        (1, "a")
    )


def test_sig_distance():
    assert repr(sig_distance(signal((1, "a")), signal((1, "b")))) == "Level(1)"
    assert sig_distance(signal((1, "a")), signal((1, "a"))).is_zero
    distance = sig_distance(signal((Fraction(1, 2), "a")), signal())
    assert distance.level == Fraction(1, 2)


def test_first_disagreement():
    assert first_disagreement(signal((1, "a")), signal((2, "a"))) == (0, 1)
    assert first_disagreement(signal((1, "a")), signal((1, "a"))) == (1, None)


def test_sig_sup_chain():
    chain = [signal(), signal((1, "a")), signal((1, "a"), (2, "b"))]
    assert sig_sup_chain(chain) == chain[-1]
    assert sig_sup_chain([chain[1]]) == chain[1]


@pytest.mark.raises
def test_sig_sup_chain_of_incomparable():
    with pytest.raises(NotAChain):
        sig_sup_chain([signal((1, "a")), signal((1, "b"))])


@pytest.mark.raises
def test_horizons_must_agree():
    with pytest.raises(HorizonMismatch):
        sig_meet(signal(horizon=4), signal(horizon=2))


@pytest.mark.raises
@pytest.mark.parametrize(
    "horizon, events",
    [
        (0, []),
        (4, [(2, "a"), (1, "b")]),
        (4, [(1, "a"), (1, "b")]),
        (4, [(4, "a")]),
        (4, [(-1, "a")]),
    ],
)
def test_invalid_signals(horizon, events):
    with pytest.raises(InvalidElement):
        EventSignal(horizon, events)


def test_times_are_exact():
    s = signal(("1/3", "a"), (Fraction(2, 3), "b"))
    assert s.events == ((Fraction(1, 3), "a"), (Fraction(2, 3), "b"))
    assert s.before(Fraction(1, 2)) == signal((Fraction(1, 3), "a"))


@pytest.mark.parametrize(
    "text, expected",
    [("1/2", Fraction(1, 2)), ("3", Fraction(3)), (" 4/2", 2)],
)
def test_parse_time(text, expected):
    assert parse_time(text) == expected


@pytest.mark.raises
@pytest.mark.parametrize("text", ["", "a/b", "1/0"])
def test_parse_invalid_time(text):
    with pytest.raises(InvalidElement):
        parse_time(text)


def test_format_time():
    assert format_time(3) == "3/1"
    assert format_time(Fraction(2, 4)) == "1/2"


def test_render(signal_space):
    s = signal((Fraction(1, 2), "a"), (1, "b"))
    assert signal_space.render(s) == "[1/2:a 1:b]"


def test_grid_enumeration():
    space = SignalSpace(1, values=("a", "b"), grid=2)
    assert space.grid_times == [0, Fraction(1, 2)]
    assert len(space.elements()) == 9


def test_exhaustive_audit_on_small_grid():
    space = SignalSpace(1, values=("a", "b"), grid=2)
    assert audit_exhaustive(space, space.elements()).ok


def test_sampled_audit(signal_space):
    """Audit ten thousand seeded random triples."""
    report = audit_axioms(signal_space, 10_000, 42)
    assert report.samples_tested == 10_000
    assert report.ok


@given(signals(), signals())
def test_meet_is_a_common_prefix(s1, s2):
    meet = sig_meet(s1, s2)
    count = len(meet.events)
    assert s1.events[:count] == meet.events == s2.events[:count]


@given(signals(), signals())
def test_distance_is_symmetric(s1, s2):
    assert sig_distance(s1, s2) == sig_distance(s2, s1)


def is_restriction(s1, s2):
    """Return whether ``s1`` is ``s2`` cut off at some time."""
    cutoffs = [time for time, _ in s2.events] + [s2.horizon]
    return any(s2.before(cutoff) == s1 for cutoff in cutoffs)


@given(signals(), signals())
def test_order_is_restriction(s1, s2):
    space = SignalSpace(4)
    assert derived_order(space, s1, s2) is is_restriction(s1, s2)
    meet = sig_meet(s1, s2)
    assert derived_order(space, meet, s1) and is_restriction(meet, s1)


def test_order_on_examples():
    space = SignalSpace(4)
    s = signal((1, "a"), (2, "b"))
    assert derived_order(space, signal((1, "a")), s)
    assert derived_order(space, signal(), s)
    assert not derived_order(space, signal((2, "b")), s)
    assert not derived_order(space, signal((1, "b")), s)
