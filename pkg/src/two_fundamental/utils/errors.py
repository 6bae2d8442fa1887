# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Exception hierarchy for two-fundamental.

Every error raised on purpose by the package derives from
:class:`TwoFundamentalError`, itself a ``ValueError``, so the CLI boundary can
tell domain failures (exit code 1) apart from genuine bugs.
"""


class TwoFundamentalError(ValueError):
    """Base class for all domain errors."""

    pass


class InvalidVertexError(TwoFundamentalError):
    """Exception raised when a vertex id is not a valid id of the graph it refers to."""

    pass


class GraphConstructionError(TwoFundamentalError):
    """Exception raised when graph data violates the graph invariants."""

    pass


class NotAHomomorphismError(TwoFundamentalError):
    """Exception raised when a vertex assignment does not preserve adjacency."""

    pass


class InvalidActionError(TwoFundamentalError):
    """Exception raised when a multiplication table or action is not a group action on the graph."""

    pass


class PreconditionError(TwoFundamentalError):
    """Exception raised when an operation is called outside its documented preconditions."""

    pass


class BudgetExceededError(TwoFundamentalError):
    """Exception raised when an enumeration grows past its configured budget."""

    pass


class NotACoveringError(TwoFundamentalError):
    """Exception raised when an operation needs a 2-covering and gets something else."""

    pass


class RelatorNotKilledError(TwoFundamentalError):
    """Exception raised when generator images do not satisfy a relator."""

    pass


class HypothesisError(TwoFundamentalError):
    """Exception raised when a theorem's hypotheses fail for the given input."""

    pass


class FormatError(TwoFundamentalError):
    """Exception raised when a text file does not follow its line format."""

    pass


class ConfigurationError(TwoFundamentalError):
    """Exception raised when an environment setting cannot be parsed."""

    pass


class InvariantViolationError(TwoFundamentalError):
    """Exception raised when an internal cross-check fails; it signals a bug rather than bad input."""

    pass
