# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""
Input validation utilities for two-fundamental.

Every operation that takes vertex ids checks them against the graph they refer
to before doing any work, so a bad id surfaces as :class:`InvalidVertexError`
naming the offending parameter rather than as an ``IndexError`` deep inside an
enumeration.
"""

import functools
import inspect
import operator
from typing import Any, Callable

from loguru import logger

from two_fundamental.utils.errors import InvalidVertexError
from two_fundamental.utils.messages import INVALID_VERTEX

# Maximum length of a rendered value in log lines
MAX_LOG_VALUE_LENGTH = 64


def _sanitize_for_log(value: Any) -> str:
    """Render a value for logging, truncating long reprs."""
    text = repr(value)
    if len(text) > MAX_LOG_VALUE_LENGTH:
        return f"{text[:MAX_LOG_VALUE_LENGTH]}... (truncated)"
    return text


def validate_vertex(value: Any, vertex_count: int, param: str = "vertex") -> int:
    """
    Validate that ``value`` is a vertex id of a graph with ``vertex_count`` vertices.

    Args:
        value: The candidate vertex id.
        vertex_count: Number of vertices of the graph the id refers to.
        param: Parameter name used in the error message.

    Returns:
        The validated id (unchanged).

    Raises:
        InvalidVertexError: If ``value`` is not an ``int`` in ``range(vertex_count)``.
    """
    # bool is an int subclass; True is never a meaningful vertex id
    if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < vertex_count:
        logger.warning(f"Rejected {param}={_sanitize_for_log(value)} for a graph with {vertex_count} vertices")
        raise InvalidVertexError(INVALID_VERTEX.format(param=param, value=value, count=vertex_count))
    return value


def validate_vertices(*vertex_params: str, graph_param: str = "g"):
    """
    Decorator that validates vertex-id parameters before function execution.

    ``graph_param`` names the parameter holding the graph, optionally followed by
    a dotted attribute path (``"p.target"`` validates against ``p.target``).
    ``None`` values are skipped so optional vertex parameters stay optional.

    Usage:
        @validate_vertices("v")
        def neighborhood(g: Graph, v: int) -> frozenset[int]:
            ...

        @validate_vertices("w", graph_param="p.target")
        def monodromy(p: GraphMap, w: int, loops) -> Monodromy:
            ...
    """
    root, _, attr_path = graph_param.partition(".")
    resolve = operator.attrgetter(attr_path) if attr_path else (lambda obj: obj)

    def decorator(func: Callable) -> Callable:
        sig = inspect.signature(func)

        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            bound_args = sig.bind(*args, **kwargs)
            bound_args.apply_defaults()
            graph = resolve(bound_args.arguments[root])
            for param_name in vertex_params:
                value = bound_args.arguments.get(param_name)
                if value is not None:
                    validate_vertex(value, graph.vertex_count, param_name)
            return func(*args, **kwargs)

        return wrapper

    return decorator
