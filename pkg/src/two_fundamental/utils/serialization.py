# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Canonical JSON serialization for two-fundamental reports.

This module is the single boundary that turns every CLI handler result into a
JSON-native tree before it is written to standard output.  Domain values are
frozen dataclasses, frozensets, enums and pydantic models; none of them are
accepted by ``json.dumps`` directly, and set iteration order would make the
output nondeterministic.

Public surface
--------------
* :func:`to_jsonable`: recursive normalizer producing only JSON-native types
  (``dict | list | str | int | float | bool | None``).  Sets are emitted as
  sorted lists so identical inputs give byte-identical reports.
* :func:`json_response`: decorator for every CLI handler.  Wraps the handler
  call and the serialization of its return value; on any exception it returns
  the structured failure envelope built by :func:`_failure_envelope`.
* :func:`dumps`: the one ``json.dumps`` call used for output.
"""

import dataclasses
import functools
import json
import traceback
from enum import Enum
from typing import Any, Callable

from loguru import logger

from two_fundamental.utils.settings import env_flag


# ---------------------------------------------------------------------------
# Module constants
# ---------------------------------------------------------------------------

#: Maximum number of characters from str(exc) preserved in the failure envelope.
_ERROR_MESSAGE_LIMIT = 1024

#: Maximum number of characters from the traceback preserved in the envelope.
_TRACEBACK_TAIL_LIMIT = 4096

#: Opt-in flag (``TWOFUND_INCLUDE_RAW``) that adds the traceback tail to the
#: failure envelope.  The full traceback always goes to the log sink.
_INCLUDE_RAW_FLAG = "INCLUDE_RAW"

#: Safety bound on recursion depth.
_MAX_DEPTH = 64


# ---------------------------------------------------------------------------
# Core serializer
# ---------------------------------------------------------------------------

def to_jsonable(obj: Any) -> Any:
    """Convert ``obj`` into a JSON-native tree.

    Conversion rules, in priority order:

    1. ``Enum`` values are unwrapped to ``.value``.
    2. JSON-native scalars are returned as-is.
    3. Pydantic v2 models are flattened via
       ``model_dump(by_alias=True, exclude_none=True, mode="json")``.
    4. Objects exposing ``to_dict()`` are flattened via that method.
    5. Dataclass instances become a dict of their fields.
    6. ``dict`` / ``list`` / ``tuple`` are recursed element-wise; ``set`` /
       ``frozenset`` are recursed and then sorted.
    7. Objects exposing ``__dict__`` are flattened via ``vars(obj)``.
    8. Anything else falls through to ``str(obj)`` and is logged at DEBUG.

    Args:
        obj: Any value returned by a handler.

    Returns:
        A JSON-native tree suitable for ``json.dumps``.
    """
    return _to_jsonable(obj, depth=0, seen=set())


def _sort_key(value: Any) -> tuple:
    # ints before strings before composites; composites compare by their JSON text
    if isinstance(value, bool) or value is None:
        return (0, str(value))
    if isinstance(value, (int, float)):
        return (1, value)
    if isinstance(value, str):
        return (2, value)
    return (3, json.dumps(value, sort_keys=True))


def _to_jsonable(obj: Any, depth: int, seen: set) -> Any:
    if depth > _MAX_DEPTH:
        logger.debug(f"to_jsonable: max depth {_MAX_DEPTH} exceeded for {type(obj).__name__}")
        return str(obj)

    # 1. Enum first: (str, Enum) mixins would otherwise pass the scalar check.
    if isinstance(obj, Enum):
        return _to_jsonable(obj.value, depth + 1, seen)

    # 2. JSON-native scalars
    if obj is None or isinstance(obj, (str, int, float, bool)):
        return obj

    # 3. Pydantic v2 model
    model_dump = getattr(obj, "model_dump", None)
    if callable(model_dump):
        dumped = model_dump(by_alias=True, exclude_none=True, mode="json")
        if isinstance(dumped, (dict, list)):
            return _to_jsonable(dumped, depth + 1, seen)

    # 4. Domain types with an explicit wire shape
    to_dict = getattr(obj, "to_dict", None)
    if callable(to_dict):
        dumped = to_dict()
        if isinstance(dumped, (dict, list)):
            return _to_jsonable(dumped, depth + 1, seen)

    obj_id = id(obj)

    # 5. Dataclasses (shallow field dict; recursion handles nesting)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        if obj_id in seen:
            return None
        seen.add(obj_id)
        try:
            fields = {f.name: getattr(obj, f.name) for f in dataclasses.fields(obj)}
            return _to_jsonable(fields, depth + 1, seen)
        finally:
            seen.discard(obj_id)

    # 6. Containers (cycle-guarded)
    if isinstance(obj, dict):
        if obj_id in seen:
            return None
        seen.add(obj_id)
        try:
            return {str(k): _to_jsonable(v, depth + 1, seen) for k, v in obj.items()}
        finally:
            seen.discard(obj_id)

    if isinstance(obj, (list, tuple, set, frozenset)):
        if obj_id in seen:
            return None
        seen.add(obj_id)
        try:
            items = [_to_jsonable(v, depth + 1, seen) for v in obj]
        finally:
            seen.discard(obj_id)
        if isinstance(obj, (set, frozenset)):
            items.sort(key=_sort_key)
        return items

    # 7. Plain object with attributes
    if hasattr(obj, "__dict__"):
        if obj_id in seen:
            return None
        seen.add(obj_id)
        try:
            return _to_jsonable(vars(obj), depth + 1, seen)
        finally:
            seen.discard(obj_id)

    # 8. Last resort
    logger.debug(f"to_jsonable: falling back to str() for {type(obj).__name__}")
    return str(obj)


def dumps(tree: Any) -> str:
    """Serialize a JSON-native tree deterministically (sorted keys, fixed separators)."""
    return json.dumps(tree, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# Failure envelope
# ---------------------------------------------------------------------------

def _include_raw_traceback() -> bool:
    return env_flag(_INCLUDE_RAW_FLAG)


def _failure_envelope(command: str, exc: BaseException) -> dict:
    """Build the structured error envelope returned when a handler raises.

    Every field is a JSON-native primitive.  The traceback tail is added under
    ``raw.traceback_tail`` only when ``TWOFUND_INCLUDE_RAW`` is truthy.
    """
    envelope = {
        "ok": False,
        "error": {
            "type": exc.__class__.__name__,
            "message": str(exc)[:_ERROR_MESSAGE_LIMIT],
            "command": command,
        },
        "raw": {},
    }
    if _include_raw_traceback():
        envelope["raw"]["traceback_tail"] = traceback.format_exc()[-_TRACEBACK_TAIL_LIMIT:]
    return envelope


def is_failure(payload: Any) -> bool:
    """Return True when ``payload`` is a failure envelope."""
    return isinstance(payload, dict) and payload.get("ok") is False and "error" in payload


# ---------------------------------------------------------------------------
# Decorator
# ---------------------------------------------------------------------------

def json_response(fn: Callable) -> Callable:
    """Wrap ``fn`` so its return value is serialized through :func:`to_jsonable`.

    Behavior:
      * Success → ``to_jsonable(result)`` is returned.
      * ANY exception raised while running ``fn`` → :func:`_failure_envelope`
        is returned as a normal value and the traceback is logged via
        ``logger.exception``.  The caller maps envelopes to exit code 1.
    """
    command = getattr(fn, "command_name", fn.__name__)

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return to_jsonable(fn(*args, **kwargs))
        except Exception as exc:  # noqa: BLE001
            logger.exception(f"[json_response] {command} failed")
            return _failure_envelope(command, exc)

    return wrapper
