# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Tests for :mod:`two_fundamental.utils.serialization`.

Coverage focuses on the report boundary:

* domain values (frozen dataclasses, frozensets, enums, pydantic models and
  types with ``to_dict``) become JSON-native trees;
* sets come out sorted so identical inputs give identical reports;
* self-referential structures do not blow the stack;
* the decorator turns any exception into the failure envelope.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum

import pytest
from pydantic import BaseModel, Field

from two_fundamental.tools.graph_core.graph_core import complete_graph, cycle_graph
from two_fundamental.tools.integer_homology.smith import AbelianGroup
from two_fundamental.tools.path_homotopy.path_homotopy import Parity, Path
from two_fundamental.utils.errors import PreconditionError
from two_fundamental.utils.serialization import (
    _failure_envelope,
    dumps,
    is_failure,
    json_response,
    to_jsonable,
)


# ---------------------------------------------------------------------------
# to_jsonable: scalars and enums
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("value", [None, True, False, 0, 1, -3, 1.5, "", "hello"])
def test_scalars_pass_through(value):
    assert to_jsonable(value) == value


def test_str_enum_mixin_unwrapped_to_value():
    """``(str, Enum)`` members must come out as plain ``str``, not the enum instance."""
    result = to_jsonable(Parity.ODD)
    assert result == "odd"
    assert type(result) is str


def test_int_enum_unwrapped():
    class Side(int, Enum):
        LEFT = 0
        RIGHT = 1

    assert to_jsonable([Side.RIGHT, Side.LEFT]) == [1, 0]


# ---------------------------------------------------------------------------
# to_jsonable: containers
# ---------------------------------------------------------------------------

def test_dict_keys_coerced_to_str():
    assert to_jsonable({0: "a", (1, 2): "b"}) == {"0": "a", "(1, 2)": "b"}


def test_tuple_becomes_list():
    assert to_jsonable((1, (2, 3))) == [1, [2, 3]]


def test_sets_are_sorted():
    assert to_jsonable(frozenset({3, 1, 2})) == [1, 2, 3]
    assert to_jsonable({"b", 2, "a", 1}) == [1, 2, "a", "b"]
    assert to_jsonable({(1, 2), (0, 5)}) == [[0, 5], [1, 2]]


def test_set_order_is_deterministic():
    first = dumps(to_jsonable({frozenset({4, 2}), frozenset({1})}))
    second = dumps(to_jsonable({frozenset({1}), frozenset({2, 4})}))
    assert first == second


# ---------------------------------------------------------------------------
# to_jsonable: domain types
# ---------------------------------------------------------------------------

def test_to_dict_wins_over_dataclass_fields():
    """``Path`` is a dataclass, but its wire shape is the bare vertex list."""
    assert to_jsonable(Path(cycle_graph(5), (0, 1, 2))) == [0, 1, 2]


def test_abelian_group():
    assert to_jsonable(AbelianGroup(1, (2,))) == {"free_rank": 1, "torsion": [2]}


def test_plain_dataclass_becomes_field_dict():
    @dataclass(frozen=True)
    class Summary:
        name: str
        members: frozenset[int]

    assert to_jsonable(Summary("fiber", frozenset({5, 1}))) == {"name": "fiber", "members": [1, 5]}


def test_graph_round_trips_through_json():
    encoded = json.dumps(to_jsonable({"graph": complete_graph(3)}))
    assert json.loads(encoded)["graph"]


def test_pydantic_model_uses_aliases_and_drops_none():
    class Envelope(BaseModel):
        schema_: str = Field(alias="schema")
        note: str | None = None

    assert to_jsonable(Envelope(schema="x")) == {"schema": "x"}


# ---------------------------------------------------------------------------
# to_jsonable: safety guards
# ---------------------------------------------------------------------------

def test_self_referential_dict_does_not_recurse_forever():
    payload: dict = {"name": "loop"}
    payload["self"] = payload

    result = to_jsonable(payload)

    assert result["name"] == "loop"
    assert result["self"] is None


def test_unknown_object_falls_back_to_str():
    class Opaque:
        __slots__ = ()

        def __str__(self) -> str:
            return "opaque-token"

    assert to_jsonable(Opaque()) == "opaque-token"


def test_non_dict_model_dump_result_is_rejected():
    class WeirdModel:
        def model_dump(self, **_kwargs):
            return object()

        def to_dict(self):
            return {"fallback": True}

    assert to_jsonable(WeirdModel()) == {"fallback": True}


def test_idempotent_on_already_jsonable_tree():
    payload = {"a": 1, "b": [True, None, "x"], "c": {"d": 2.5}}
    assert to_jsonable(to_jsonable(payload)) == payload


def test_dumps_is_sorted_and_newline_terminated():
    text = dumps({"b": 1, "a": "ℤ"})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert "ℤ" in text


# ---------------------------------------------------------------------------
# Failure envelope
# ---------------------------------------------------------------------------

def test_failure_envelope_shape_is_json_native():
    try:
        raise PreconditionError("cutoff must be non-negative")
    except PreconditionError as exc:
        envelope = _failure_envelope("oracle", exc)

    encoded = json.dumps(envelope)
    assert envelope == {
        "ok": False,
        "error": {"type": "PreconditionError", "message": "cutoff must be non-negative", "command": "oracle"},
        "raw": {},
    }
    assert not re.search(r"<.+ object at 0x[0-9a-f]+>", encoded)
    assert is_failure(envelope)


def test_failure_envelope_includes_traceback_when_flag_set(monkeypatch):
    monkeypatch.setenv("TWOFUND_INCLUDE_RAW", "true")
    try:
        raise ValueError("exposed")
    except ValueError as exc:
        envelope = _failure_envelope("h1", exc)

    assert "ValueError" in envelope["raw"]["traceback_tail"]


@pytest.mark.parametrize("falsy", ["", "0", "false", "no", "off", "anything-else"])
def test_failure_envelope_omits_traceback_for_falsy_flag(monkeypatch, falsy):
    monkeypatch.setenv("TWOFUND_INCLUDE_RAW", falsy)
    try:
        raise ValueError("nope")
    except ValueError as exc:
        envelope = _failure_envelope("h1", exc)

    assert envelope["raw"] == {}


def test_failure_envelope_truncates_long_messages():
    try:
        raise RuntimeError("x" * 5000)
    except RuntimeError as exc:
        envelope = _failure_envelope("h1", exc)

    assert len(envelope["error"]["message"]) == 1024


@pytest.mark.parametrize(
    "payload",
    [{"ok": True, "error": None}, {"ok": False}, [], None, {"verdict": False}],
)
def test_is_failure_rejects_non_envelopes(payload):
    assert not is_failure(payload)


# ---------------------------------------------------------------------------
# @json_response decorator
# ---------------------------------------------------------------------------

def test_decorator_preserves_metadata():
    @json_response
    def tabulate(args, settings):
        """Docstring survives."""
        return None

    assert tabulate.__name__ == "tabulate"
    assert tabulate.__doc__ == "Docstring survives."


def test_decorator_serializes_result():
    @json_response
    def handler(args, settings):
        return {"fiber": frozenset({4, 0}), "parity": Parity.EVEN}

    assert handler(None, None) == {"fiber": [0, 4], "parity": "even"}


def test_decorator_returns_envelope_when_body_raises():
    def handler(args, settings):
        raise PreconditionError("Graph is not connected.")

    handler.command_name = "present"
    wrapped = json_response(handler)

    result = wrapped(None, None)
    assert is_failure(result)
    assert result["error"]["command"] == "present"
    assert result["error"]["message"] == "Graph is not connected."


def test_decorator_returns_envelope_when_serializer_raises(monkeypatch):
    import two_fundamental.utils.serialization as serialization

    def _raise(*_args, **_kwargs):
        raise RuntimeError("serializer boom")

    monkeypatch.setattr(serialization, "to_jsonable", _raise)

    @json_response
    def handler():
        return {"fine": True}

    result = handler()
    assert result["error"]["type"] == "RuntimeError"
    assert result["error"]["command"] == "handler"
