"""Sparse exact matrices over Q and their rank.

Rank is computed by fraction-free sparse elimination: every row is scaled to a
primitive integer vector, rows are combined as ``p*r - v*pivot_row`` and the
content is divided out again.  Pivots are chosen Markowitz-style (shortest row,
then the column touching the fewest rows) to limit fill-in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping

import numpy as np

Number = int | Fraction


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, c), x in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            x = Fraction(x)
            if x:
                clean[(r, c)] = x
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, data: Iterable[Iterable[Number]]) -> "ExactMatrix":
        data = [list(row) for row in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, {(i, j): x for i, row in enumerate(data)
                                for j, x in enumerate(row) if x})

    @classmethod
    def from_columns(cls, nrows: int, columns: list[Mapping[int, Number]]) -> "ExactMatrix":
        return cls(nrows, len(columns), {(r, c): x for c, col in enumerate(columns)
                                         for r, x in col.items() if x})

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), x in self.entries.items():
            out[r][c] = x
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, {(c, r): x for (r, c), x in self.entries.items()})

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(self.rows)]
        for (r, c), x in self.entries.items():
            out[r][c] = x
        return out

    def column(self, c: int) -> dict[int, Fraction]:
        return {r: x for (r, cc), x in self.entries.items() if cc == c}

    def to_mod_p(self, p: int) -> np.ndarray:
        """Entry-wise reduction into GF(p); raises if a denominator vanishes mod p."""
        A = np.zeros((self.rows, self.cols), dtype=np.int64)
        for (r, c), x in self.entries.items():
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            A[r, c] = (x.numerator % p) * pow(den, p - 2, p) % p
        return A


def primitive(row: Mapping[int, Number]) -> dict[int, int]:
    """Scale a rational sparse vector to a primitive integer vector (same line)."""
    if not row:
        return {}
    den = reduce(lcm, (Fraction(x).denominator for x in row.values()), 1)
    ints = {k: int(Fraction(x) * den) for k, x in row.items() if x}
    g = reduce(gcd, ints.values(), 0)
    return {k: v // g for k, v in ints.items()} if g > 1 else ints


def rank_exact(M: ExactMatrix) -> int:
    """Rank over Q; deterministic for a given matrix."""
    if M.nnz == 0:
        return 0
    rows: dict[int, dict[int, int]] = {}
    for i, row in enumerate(M.row_dicts()):
        if row:
            rows[i] = primitive(row)
    col_rows: dict[int, set[int]] = {}
    for i, row in rows.items():
        for c in row:
            col_rows.setdefault(c, set()).add(i)

    rank = 0
    while rows:
        # shortest row, ties by index for determinism
        pr = min(rows, key=lambda i: (len(rows[i]), i))
        prow = rows.pop(pr)
        for c in prow:
            col_rows[c].discard(pr)
        pc = min(prow, key=lambda c: (len(col_rows[c]), abs(prow[c]), c))
        pv = prow[pc]
        rank += 1
        for i in sorted(col_rows[pc]):
            row = rows[i]
            v = row[pc]
            g = gcd(pv, v)
            mp, mv = pv // g, v // g
            new = {c: mp * x for c, x in row.items()}
            for c, x in prow.items():
                y = new.get(c, 0) - mv * x
                if y:
                    new[c] = y
                else:
                    new.pop(c, None)
            for c in row:
                if c not in new:
                    col_rows[c].discard(i)
            for c in new:
                if c not in row:
                    col_rows.setdefault(c, set()).add(i)
            if new:
                cont = reduce(gcd, new.values(), 0)
                if cont > 1:
                    new = {c: x // cont for c, x in new.items()}
                rows[i] = new
            else:
                del rows[i]
        col_rows[pc] = set()
    return rank


def nullspace(M: ExactMatrix) -> list[dict[int, Fraction]]:
    """Basis of the right kernel {x : M x = 0} via reduced row echelon form over Q.

    Vectors are returned as sparse dicts over column indices, one per free
    column, normalised to 1 on that free column.
    """
    dense = M.to_dense()
    pivots: list[int] = []
    r = 0
    for c in range(M.cols):
        piv = next((i for i in range(r, M.rows) if dense[i][c]), None)
        if piv is None:
            continue
        dense[r], dense[piv] = dense[piv], dense[r]
        inv = 1 / dense[r][c]
        dense[r] = [x * inv for x in dense[r]]
        for i in range(M.rows):
            if i != r and dense[i][c]:
                f = dense[i][c]
                dense[i] = [x - f * y for x, y in zip(dense[i], dense[r])]
        pivots.append(c)
        r += 1
        if r == M.rows:
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        vec = {free: Fraction(1)}
        for i, pc in enumerate(pivots):
            if dense[i][free]:
                vec[pc] = -dense[i][free]
        basis.append(vec)
    return basis
