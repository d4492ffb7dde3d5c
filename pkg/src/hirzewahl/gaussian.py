"""Gaussian maps in the affine chart and their exact ranks.

For sections f, g of L the map sends f ^ g to f dg - g df.  In the chart (t, s)
this is a pair of polynomials (coefficients of dt and ds), so the map becomes
an integer matrix with one column per pair f < g.  Restriction to a dense open
set is injective on sections and on twisted forms, so the matrix rank is the
rank of the map.

Coordinates are translated so the first blown-up point sits at the origin.
The exponent set of a section space is closed under lowering exponents, so
translations act on it; the rank is unchanged and the constraint rows at the
origin are unit vectors.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .blowup_sections import constraint_matrix, monomial_basis, pick_generic_points
from .kernels import MODULUS, rank_mod_p
from .linalg import ExactMatrix, nullspace, primitive, rank_exact
from .picard import DivisorClass, Point
from .riemann_roch import dim_table

__all__ = ["GaussianReport", "section_basis", "gaussian_matrix", "rank_exact",
           "check_surjectivity_PhiX", "WedgeBudgetExceeded", "wedge_image"]

Poly = dict[tuple[int, int], int]


class WedgeBudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class GaussianReport:
    n: int
    a: int
    b: int
    delta: int
    domain_dim: int
    wedge_dim: int
    target_dim: int
    rank: int
    surjective: Optional[bool]      # None: target dimension not asserted
    seed: Optional[int]
    timing: float
    rank_mod_p: int
    hypothesis: bool
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.hypothesis:
            if self.rank > min(self.wedge_dim, self.target_dim):
                raise ArithmeticError(f"rank {self.rank} exceeds min(wedge, target) in {self}")
            if self.surjective != (self.rank == self.target_dim):
                raise ValueError("surjective flag inconsistent with rank")
        elif self.surjective is not None:
            raise ValueError("surjectivity is only asserted under the dimension hypothesis")

    def as_dict(self, with_timing: bool = False) -> dict:
        d = {k: getattr(self, k) for k in (
            "n", "a", "b", "delta", "domain_dim", "wedge_dim", "target_dim", "rank",
            "surjective", "seed", "rank_mod_p", "hypothesis")}
        d["notes"] = list(self.notes)
        if with_timing:
            d["timing"] = self.timing
        return d


def _shift(points: Sequence[Point], center: bool) -> list[Point]:
    pts = [(Fraction(t), Fraction(s)) for t, s in points]
    if center and pts:
        t0, s0 = pts[0]
        pts = [(t - t0, s - s0) for t, s in pts]
    return pts


def section_basis(n: int, L: DivisorClass, points: Sequence[Point] = (),
                  center: bool = True) -> list[Poly]:
    """Primitive integer polynomials spanning sections of sigma^*L - sum m_j E_j.

    ``L.m`` holds the vanishing orders at ``points``; with ``center`` the
    coordinates are translated so the first point is the origin.
    """
    basis = monomial_basis(n, L)
    exps = basis.exponents
    if not exps:
        return []
    mults = tuple(L.m)
    if len(mults) != len(points):
        raise ValueError(f"{len(mults)} vanishing orders for {len(points)} points")
    pts = _shift(points, center)
    if not any(mults):
        return [{e: 1} for e in exps]
    C = constraint_matrix(exps, pts, mults)
    out = []
    for vec in nullspace(C):
        prim = primitive(vec)
        out.append({exps[c]: v for c, v in sorted(prim.items())})
    return out


def wedge_image(f: Poly, g: Poly) -> dict[tuple[int, int, int], int]:
    """f dg - g df as {(block, i, k): coefficient}."""
    # key (block, i, k): block 0 is the dt coefficient, block 1 the ds coefficient
    col: dict[tuple[int, int, int], int] = {}
    for (i, k), x in f.items():
        for (p, q), y in g.items():
            c = x * y
            if p != i:
                key = (0, i + p - 1, k + q)
                col[key] = col.get(key, 0) + (p - i) * c
            if q != k:
                key = (1, i + p, k + q - 1)
                col[key] = col.get(key, 0) + (q - k) * c
    return {key: v for key, v in col.items() if v}


def gaussian_matrix(n: int, L: DivisorClass, points: Sequence[Point] = (),
                    center: bool = True, basis: Optional[list[Poly]] = None) -> ExactMatrix:
    """Chart matrix of the Gaussian map on sections of L (vanishing orders in L.m).

    Columns are the pairs (f, g), f < g, in lexicographic order of basis
    indices; rows are the (block, monomial) keys that occur, sorted.
    """
    if basis is None:
        basis = section_basis(n, L, points, center)
    cols = [wedge_image(basis[u], basis[v])
            for u in range(len(basis)) for v in range(u + 1, len(basis))]
    keys = sorted({key for col in cols for key in col})
    row_of = {key: r for r, key in enumerate(keys)}
    return ExactMatrix.from_columns(len(keys), [{row_of[k]: v for k, v in col.items()}
                                                for col in cols])


def check_surjectivity_PhiX(n: int, a: int, b: int, delta: int, seed: int = 42,
                            points: Optional[Sequence[Point]] = None,
                            max_wedge: Optional[int] = None) -> GaussianReport:
    """Exact rank of the Gaussian map of K_X + C~ against the expected target dimension.

    K_X + C~ = sigma^*(K + C) - sum E_j, so the sections are those of
    (a-2)C0 + (b-2-n)F vanishing at the delta points.
    """
    if points is None:
        points = pick_generic_points(n, delta, seed)
    points = list(points)
    if len(points) != delta:
        raise ValueError(f"points required: {delta} expected, {len(points)} given")
    start = time.perf_counter()
    L = DivisorClass(a - 2, b - 2 - n, (1,) * delta)
    basis = section_basis(n, L, points)
    dom = len(basis)
    wedge = comb(dom, 2)
    if max_wedge is not None and wedge > max_wedge:
        raise WedgeBudgetExceeded(f"wedge dimension {wedge} exceeds budget {max_wedge}")
    M = gaussian_matrix(n, L, points, basis=basis)
    rank = rank_exact(M)
    rmod = rank_mod_p(M.to_mod_p(MODULUS))
    if rmod > rank:
        raise ArithmeticError(f"rank mod p ({rmod}) exceeds rational rank ({rank})")
    table = dim_table(n, a, b, delta)
    notes = list(table.notes)
    if not table.hypothesis:
        notes.append("outside the dimension hypothesis; target dimension not asserted")
    surjective = (rank == table.h0_twist2) if table.hypothesis else None
    return GaussianReport(n, a, b, delta, dom, wedge, table.h0_twist2, rank, surjective,
                          seed, time.perf_counter() - start, rmod, table.hypothesis,
                          tuple(notes))
