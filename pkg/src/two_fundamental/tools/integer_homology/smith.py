# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Exact integer linear algebra: Smith normal form, lattices and abelian groups.

Entries are Python integers throughout, so coefficient growth never
overflows.  :func:`smith_normal_form` tracks both transforms, which is what
the kernel and membership helpers need; sympy's ``DomainMatrix`` checks that
they are unimodular.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from loguru import logger
from sympy import ZZ
from sympy.polys.matrices import DM

from two_fundamental.utils.errors import InvariantViolationError, PreconditionError
from two_fundamental.utils.messages import (
    MATRIX_PRODUCT_SHAPE,
    MATRIX_SHAPE,
    NON_SQUARE_DETERMINANT,
    NOT_A_NORMAL_FORM,
    SMITH_INVARIANT,
    TORSION_NOT_A_CHAIN,
)


@dataclass(frozen=True)
class IntMatrix:
    """An immutable ``rows x cols`` integer matrix."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries))
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise PreconditionError(MATRIX_SHAPE.format(rows=self.rows, cols=self.cols))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(len(rows), width, tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        return cls(rows, len(columns), tuple(tuple(c[i] for c in columns) for i in range(rows)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows, tuple(self.columns()))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise PreconditionError(
                MATRIX_PRODUCT_SHAPE.format(rows=self.rows, cols=self.cols, other_rows=other.rows, other_cols=other.cols)
            )
        other_cols = other.columns()
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in other_cols) for row in self.entries),
        )

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.entries)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        return IntMatrix(self.rows, self.cols + other.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def to_domain_matrix(self):
        return DM([list(row) for row in self.entries], ZZ)

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise PreconditionError(NON_SQUARE_DETERMINANT)
        if self.rows == 0:
            return 1
        return int(self.to_domain_matrix().det())

    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}


class SmithDecomposition(NamedTuple):
    """``U · M · V = D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d)


def _smallest_nonzero(a: list[list[int]], t: int) -> tuple[int, int] | None:
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[i])):
            x = a[i][j]
            if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(m: IntMatrix, *, verify: bool = True) -> SmithDecomposition:
    """Smith normal form with transforms.

    Pivots on the smallest nonzero absolute value (row-major on ties) and
    eliminates with floor division.  The diagonal is nonnegative and each
    entry divides the next.  With ``verify`` the product identity and
    ``det U, det V ∈ {±1}`` are checked before returning.
    """
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j: int, k: int) -> None:
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(target: int, source: int, factor: int) -> None:
        a[target] = [x + factor * y for x, y in zip(a[target], a[source])]
        u[target] = [x + factor * y for x, y in zip(u[target], u[source])]

    def add_col(target: int, source: int, factor: int) -> None:
        for row in a:
            row[target] += factor * row[source]
        for row in v:
            row[target] += factor * row[source]

    t = 0
    while t < min(rows, cols):
        pivot = _smallest_nonzero(a, t)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        p = a[t][t]
        for i in range(t + 1, rows):
            if a[i][t]:
                add_row(i, t, -(a[i][t] // p))
        for j in range(t + 1, cols):
            if a[t][j]:
                add_col(j, t, -(a[t][j] // p))
        if any(a[i][t] for i in range(t + 1, rows)) or any(a[t][j] for j in range(t + 1, cols)):
            continue
        offender = next(
            (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
            None,
        )
        if offender is not None:
            add_row(t, offender, 1)
            continue
        if p < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    decomposition = SmithDecomposition(
        IntMatrix(rows, rows, tuple(map(tuple, u))),
        IntMatrix(rows, cols, tuple(map(tuple, a))),
        IntMatrix(cols, cols, tuple(map(tuple, v))),
    )
    if verify:
        _verify(m, decomposition)
    logger.debug(f"SNF of {rows}x{cols} matrix: rank {decomposition.rank}")
    return decomposition


def _verify(m: IntMatrix, snf: SmithDecomposition) -> None:
    U, D, V = snf
    if (U @ m @ V) != D:
        raise InvariantViolationError(SMITH_INVARIANT.format(detail="transforms do not reproduce D"))
    if abs(U.determinant()) != 1 or abs(V.determinant()) != 1:
        raise InvariantViolationError(SMITH_INVARIANT.format(detail="transforms are not unimodular"))
    diagonal = snf.invariant_factors
    if any(later % earlier for earlier, later in zip(diagonal, diagonal[1:])):
        raise InvariantViolationError(SMITH_INVARIANT.format(detail="diagonal is not a divisibility chain"))


# ---------------------------------------------------------------------------
# Lattices
# ---------------------------------------------------------------------------

def matrix_rank(m: IntMatrix) -> int:
    return smith_normal_form(m, verify=False).rank


def kernel_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    """A ℤ-basis of ``{x : m x = 0}``: the columns of ``V`` past the rank."""
    snf = smith_normal_form(m, verify=False)
    return [snf.V.column(j) for j in range(snf.rank, m.cols)]


def solve_integer(m: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """An integer solution of ``m x = b``, or None."""
    snf = smith_normal_form(m, verify=False)
    c = snf.U.apply(b)
    y = [0] * m.cols
    for i, x in enumerate(c):
        d = snf.D[i, i] if i < min(m.rows, m.cols) else 0
        if d == 0:
            if x:
                return None
        elif x % d:
            return None
        else:
            y[i] = x // d
    return snf.V.apply(y)


def column_span_contains(m: IntMatrix, b: Sequence[int]) -> bool:
    return solve_integer(m, b) is not None


def lattice_contains(m: IntMatrix, vectors: Iterable[Sequence[int]]) -> bool:
    return all(column_span_contains(m, b) for b in vectors)


def lattice_equal(a: IntMatrix, b: IntMatrix) -> bool:
    """Whether the column lattices of ``a`` and ``b`` coincide."""
    return lattice_contains(a, b.columns()) and lattice_contains(b, a.columns())


# ---------------------------------------------------------------------------
# Abelian groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianGroup:
    """ℤ^free_rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k with ``d₁ | d₂ | …`` and every ``dᵢ >= 2``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0 or any(d < 2 for d in self.torsion):
            raise PreconditionError(NOT_A_NORMAL_FORM.format(rank=self.free_rank, torsion=self.torsion))
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise PreconditionError(TORSION_NOT_A_CHAIN.format(torsion=self.torsion))

    @classmethod
    def trivial(cls) -> AbelianGroup:
        return cls()

    @classmethod
    def free(cls, rank: int) -> AbelianGroup:
        return cls(rank)

    @classmethod
    def cyclic(cls, n: int) -> AbelianGroup:
        """ℤ/n (``n = 0`` gives ℤ, ``n = 1`` the trivial group)."""
        return cls.from_relations(IntMatrix.from_rows([[n]], 1))

    @classmethod
    def from_relations(cls, relations: IntMatrix) -> AbelianGroup:
        """ℤ^cols modulo the row lattice of ``relations``."""
        factors = smith_normal_form(relations, verify=False).invariant_factors
        return cls(relations.cols - len(factors), tuple(d for d in factors if d > 1))

    def direct_sum(self, other: AbelianGroup) -> AbelianGroup:
        parts = self.torsion + other.torsion
        diagonal = IntMatrix.from_rows(
            [[d if i == j else 0 for j in range(len(parts))] for i, d in enumerate(parts)], len(parts)
        )
        torsion = AbelianGroup.from_relations(diagonal).torsion
        return AbelianGroup(self.free_rank + other.free_rank, torsion)

    def has_free_summand(self) -> bool:
        return self.free_rank > 0

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """The group order, or None when infinite."""
        if self.free_rank:
            return None
        result = 1
        for d in self.torsion:
            result *= d
        return result

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def direct_sum(groups: Iterable[AbelianGroup]) -> AbelianGroup:
    result = AbelianGroup.trivial()
    for group in groups:
        result = result.direct_sum(group)
    return result
