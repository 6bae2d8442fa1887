# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Multihomomorphisms: set-valued graph maps, the points of a Hom poset."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from two_fundamental.tools.graph_core.graph_core import Graph, GraphMap
from two_fundamental.utils.errors import NotAHomomorphismError, PreconditionError
from two_fundamental.utils.messages import (
    EMPTY_VALUE_SET,
    MAP_SIZE_MISMATCH,
    NOT_A_MULTIHOM,
    NOT_SINGLETON_VALUED,
    TARGET_MISMATCH,
)
from two_fundamental.utils.validation import validate_vertex


@dataclass(frozen=True)
class Multihom:
    """``η`` with nonempty ``η(v) ⊆ V(target)`` and ``η(v) × η(w) ⊆ E(target)`` on source edges."""

    source: Graph
    target: Graph
    values: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(frozenset(s) for s in self.values))
        if len(self.values) != self.source.vertex_count:
            raise NotAHomomorphismError(
                MAP_SIZE_MISMATCH.format(got=len(self.values), expected=self.source.vertex_count)
            )
        for v, chosen in enumerate(self.values):
            if not chosen:
                raise NotAHomomorphismError(EMPTY_VALUE_SET.format(v=v))
            for w in chosen:
                validate_vertex(w, self.target.vertex_count, f"values[{v}]")
        for a, b in self.source.edges:
            if any(not self.values[b] <= self.target.adjacency[x] for x in self.values[a]):
                raise NotAHomomorphismError(NOT_A_MULTIHOM.format(a=a, b=b))

    @classmethod
    def from_map(cls, f: GraphMap) -> Multihom:
        return cls(f.source, f.target, tuple(frozenset((y,)) for y in f.assignment))

    @classmethod
    def from_sets(cls, source: Graph, target: Graph, values: Iterable[Iterable[int]]) -> Multihom:
        return cls(source, target, tuple(frozenset(s) for s in values))

    def __call__(self, v: int) -> frozenset[int]:
        return self.values[v]

    def __le__(self, other: Multihom) -> bool:
        return all(a <= b for a, b in zip(self.values, other.values))

    def __lt__(self, other: Multihom) -> bool:
        return self <= other and self != other

    def is_homomorphism(self) -> bool:
        return all(len(s) == 1 for s in self.values)

    def to_map(self) -> GraphMap:
        if not self.is_homomorphism():
            raise PreconditionError(NOT_SINGLETON_VALUED)
        return GraphMap(self.source, self.target, tuple(next(iter(s)) for s in self.values))

    def pushforward(self, p: GraphMap) -> Multihom:
        """``p_*η``: compose with a graph map out of the target."""
        if p.source != self.target:
            raise PreconditionError(TARGET_MISMATCH.format(detail="η's target is not the map's source"))
        return Multihom(self.source, p.target, tuple(p.image(s) for s in self.values))

    def sort_key(self) -> tuple:
        return tuple(tuple(sorted(s)) for s in self.values)

    def to_dict(self) -> list[list[int]]:
        return [sorted(s) for s in self.values]
