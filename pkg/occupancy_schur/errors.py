# Copyright 2026 The occupancy-schur Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exceptions raised by the occupancy_schur package."""


class OccupancySchurError(Exception):
    """Base class for all exceptions in the occupancy_schur package
    """


class InvalidProbabilityVector(OccupancySchurError, ValueError):
    """Raised when a list of reals cannot be turned into a simplex point
    """


class InvalidArgument(OccupancySchurError, ValueError):
    """Raised when a scalar argument violates an operation's precondition
    """


class DimensionMismatch(InvalidArgument):
    """Raised when two vectors that must share a dimension do not
    """


class DomainError(InvalidArgument):
    """Raised when a finite-difference step would leave the open simplex
    """


class BudgetExceeded(OccupancySchurError):
    """Raised when an exact backend is asked for an instance outside its
    budget; callers should fall back to Monte Carlo.
    """


class InvalidConfiguration(OccupancySchurError):
    """Raised when the user specifies an invalid configuration
    """


class VerificationFailed(OccupancySchurError):
    """Raised when an acceptance sweep finds a violated invariant."""
