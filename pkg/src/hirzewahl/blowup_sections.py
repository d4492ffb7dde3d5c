"""Global sections on F_n and on its blow-ups, in the affine chart (t, s).

A section of aC0 + bF is a polynomial in t^i s^k with 0 <= k <= a and
0 <= i <= b - kn (s = 0 is the section disjoint from C0).  Sections of
sigma^*D - sum m_j E_j are those vanishing to order m_j at the j-th point,
which is a linear condition on the coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Sequence, Union

from .linalg import ExactMatrix, rank_exact
from .picard import BlownSurface, DivisorClass, HirzebruchSurface, Point

__all__ = ["MonomialBasis", "ExactMatrix", "monomial_basis", "constraint_matrix",
           "h0_blowup", "pick_generic_points", "rank_exact"]

# height bound for sampled rational coordinates
HEIGHT = 1009


@dataclass(frozen=True)
class MonomialBasis:
    divisor: DivisorClass
    exponents: tuple[tuple[int, int], ...]   # (i, k) for t^i s^k

    def __len__(self) -> int:
        return len(self.exponents)

    def index(self) -> dict[tuple[int, int], int]:
        return {e: j for j, e in enumerate(self.exponents)}


def monomial_basis(S: Union[HirzebruchSurface, BlownSurface, int], D: DivisorClass) -> MonomialBasis:
    """Monomials spanning H^0(F_n, aC0 + bF), ordered by k then i."""
    n = S if isinstance(S, int) else S.n
    a, b = D.a, D.b
    exps = []
    if a >= 0:
        for k in range(a + 1):
            for i in range(b - k * n + 1):
                exps.append((i, k))
    return MonomialBasis(D.base_part(), tuple(exps))


def _falling(x: int, r: int) -> int:
    return factorial(x) // factorial(x - r) if r <= x else 0


def derivative_orders(m: int) -> list[tuple[int, int]]:
    """(p, q) with p + q < m: the partials d^p/dt^p d^q/ds^q defining order-m vanishing."""
    return [(p, tot - p) for tot in range(m) for p in range(tot, -1, -1)]


def constraint_matrix(exponents: Sequence[tuple[int, int]], points: Sequence[Point],
                      mults: Sequence[int]) -> ExactMatrix:
    """One row per (point, partial of order < m_j), one column per monomial."""
    if len(points) != len(mults):
        raise ValueError("one multiplicity per point required")
    entries = {}
    row = 0
    for (t0, s0), m in zip(points, mults):
        if m < 0:
            raise ValueError("vanishing orders must be nonnegative")
        t0, s0 = Fraction(t0), Fraction(s0)
        for p, q in derivative_orders(m):
            for c, (i, k) in enumerate(exponents):
                if i < p or k < q:
                    continue
                entries[(row, c)] = _falling(i, p) * _falling(k, q) * t0 ** (i - p) * s0 ** (k - q)
            row += 1
    return ExactMatrix(row, len(exponents), entries)


def _check_points(X: BlownSurface) -> tuple[Point, ...]:
    if X.points is None:
        raise ValueError("point coordinates required for sections on a blow-up")
    if len(set(X.points)) != len(X.points):
        raise ValueError("duplicate points")
    return X.points


def h0_blowup(X: Union[BlownSurface, HirzebruchSurface], D: DivisorClass) -> int:
    """h^0(X, sigma^*(aC0 + bF) - sum m_j E_j) for m_j >= 0 at the points of X."""
    basis = monomial_basis(X, D)
    if isinstance(X, HirzebruchSurface) or not any(D.m):
        if D.m and X.delta != len(D.m):
            raise ValueError("divisor does not live on X")
        return len(basis)
    if D.delta != X.delta:
        raise ValueError("divisor does not live on X")
    if any(x < 0 for x in D.m):
        raise ValueError("only nonnegative vanishing orders are supported")
    points = _check_points(X)
    M = constraint_matrix(basis.exponents, points, D.m)
    return len(basis) - rank_exact(M)


def expected_conditions(mults: Sequence[int]) -> int:
    """Number of conditions imposed by order-m_j vanishing: sum binom(m_j + 1, 2)."""
    return sum(comb(m + 1, 2) for m in mults)


def pick_generic_points(n: int, delta: int, seed: int, height: int = HEIGHT) -> list[Point]:
    """Seeded small-height rational points with distinct nonzero t and nonzero s.

    The chart is the same for every n, so ``n`` only documents the intended
    surface.
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    rng = random.Random(seed)

    def coord() -> Fraction:
        while True:
            num = rng.randint(-height, height)
            if num:
                return Fraction(num, rng.randint(1, height))

    pts: list[Point] = []
    used: set[Fraction] = set()
    while len(pts) < delta:
        t = coord()
        if t in used:
            continue
        used.add(t)
        pts.append((t, coord()))
    return pts


def generic_blowup(n: int, delta: int, seed: int, points: Optional[Sequence[Point]] = None) -> BlownSurface:
    pts = pick_generic_points(n, delta, seed) if points is None else list(points)
    return BlownSurface(HirzebruchSurface(n), delta, tuple(pts))
