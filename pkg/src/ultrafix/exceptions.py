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

"""Custom exceptions raised by the library."""


class UltrafixError(Exception):
    """Base class of every error raised on purpose by this package."""


class PreconditionError(UltrafixError, ValueError):
    """An operation was called with arguments outside of its domain."""


class BaseTooLarge(PreconditionError):
    pass


class IncompatibleDistances(UltrafixError, TypeError):
    """Two distance values from different instance families were compared."""


class CarrierError(UltrafixError, ValueError):
    """An element does not belong to the carrier it is used with."""


class InvalidElement(CarrierError):
    pass


class HorizonMismatch(CarrierError):
    pass


class BaseMismatch(CarrierError):
    pass


class NotAChain(CarrierError):
    pass


class CarrierBoundExceeded(CarrierError):
    """
    A function produced an element the bounded carrier cannot represent.

    The solver treats this as running out of budget rather than as a bug in
    the caller, since it is how unbounded growth shows at desk scale.
    """


class DepthCapExceeded(CarrierBoundExceeded):
    pass


class ChainSupremumUnavailable(UltrafixError):
    pass


class NotDirected(UltrafixError):
    pass


class ConvergenceFailure(UltrafixError):
    """The fixed-point construction did not deliver a trustworthy answer."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class BudgetExhausted(ConvergenceFailure):
    pass


class NotStrictlyCausal(ConvergenceFailure):
    def __init__(self, message, report, trace=None):
        super().__init__(message, trace)
        self.report = report


class InputError(UltrafixError, ValueError):
    """Malformed user input, e.g. a program text or a network description."""


class ProgramSyntaxError(InputError):
    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class GroundingError(InputError):
    pass


class UnknownInstance(InputError):
    pass


class NotLocallyHierarchical(UltrafixError):
    def __init__(self, cycle):
        super().__init__(
            "Program is not locally hierarchical; dependency cycle: "
            + " -> ".join(list(cycle) + [cycle[0]])
        )
        self.cycle = list(cycle)
