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

"""Marshmallow schemas for the signal and network JSON formats."""

from marshmallow import (
    Schema,
    ValidationError,
    fields,
    post_load,
    pre_dump,
    validate,
    validates_schema,
)

from .defeedback import (
    TRIGGER,
    Network,
    compose,
    delay_component,
    source_component,
    table_map_component,
)
from .designal import EventSignal, format_time, parse_time
from .exceptions import InvalidElement


class RationalTime(fields.Field):
    """An exact time stamp written as ``"num/den"``."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return format_time(value)

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return parse_time(value)
        except InvalidElement as error:
            raise ValidationError(str(error)) from error


class EventSchema(Schema):
    t = RationalTime(required=True)
    v = fields.Str(required=True)


class SignalSchema(Schema):
    horizon = RationalTime(required=True)
    events = fields.List(fields.Nested(EventSchema), load_default=list)

    @pre_dump
    def unpack_signal(self, signal, **kwargs):
        return {
            "horizon": signal.horizon,
            "events": [{"t": t, "v": v} for t, v in signal.events],
        }

    @post_load
    def make_signal(self, data, **kwargs):
        events = [(event["t"], event["v"]) for event in data["events"]]
        try:
            return EventSignal(data["horizon"], events)
        except InvalidElement as error:
            raise ValidationError(str(error), "events") from error


class StageSchema(Schema):
    kind = fields.Str(required=True, validate=validate.OneOf(["delay", "map"]))
    delta = RationalTime()
    table = fields.Dict(
        keys=fields.Str(), values=fields.Str(), load_default=dict
    )
    default = fields.Str(load_default=None, allow_none=True)

    @validates_schema
    def validate_kind(self, data, **kwargs):
        if data["kind"] == "delay":
            if "delta" not in data:
                raise ValidationError("A delay needs a delta", "delta")
            if data["delta"] <= 0:
                raise ValidationError("The delta must be positive", "delta")
        elif "delta" in data:
            raise ValidationError("Only a delay takes a delta", "delta")

    @post_load
    def make_component(self, data, **kwargs):
        if data["kind"] == "delay":
            return delay_component(data["delta"])
        return table_map_component(data["table"], data["default"])


class NetworkSchema(Schema):
    """
    A pipeline of components closed in feedback.

    The optional ``stimulus`` is merged into the loop input ahead of the first
    stage. Without it, the loop is primed by a single trigger event at time
    zero.
    """

    horizon = RationalTime(required=True)
    stimulus = fields.List(fields.Nested(EventSchema), load_default=None)
    pipeline = fields.List(
        fields.Nested(StageSchema), required=True, validate=validate.Length(1)
    )

    @post_load
    def make_network(self, data, **kwargs):
        horizon = data["horizon"]
        if data["stimulus"] is None:
            events = [TRIGGER]
        else:
            events = [(event["t"], event["v"]) for event in data["stimulus"]]
        try:
            stimulus = EventSignal(horizon, events)
        except InvalidElement as error:
            raise ValidationError(str(error), "stimulus") from error
        component = compose(source_component(stimulus), *data["pipeline"])
        return Network(horizon, component)
