"""Euler characteristics and cohomology dimensions of line bundles on F_n and
its blow-ups, plus the cotangent-twist dimension table for nodal curves."""

from __future__ import annotations

from dataclasses import dataclass, field

from .picard import (DivisorClass, HirzebruchSurface, Surface, canonical, genus,
                     intersect, nodal_classes, self_intersection, surface)


class CohomologyError(ArithmeticError):
    """A derived cohomology dimension came out negative; the formulas are broken."""


@dataclass(frozen=True)
class CohomologyTriple:
    h0: int
    h1: int
    h2: int
    chi: int

    def __post_init__(self):
        if min(self.h0, self.h1, self.h2) < 0:
            raise CohomologyError(f"negative cohomology dimension in {self}")
        if self.h0 - self.h1 + self.h2 != self.chi:
            raise CohomologyError(f"alternating sum mismatch in {self}")


def chi_line(S: Surface, D: DivisorClass) -> int:
    """Riemann-Roch with chi(O) = 1 (rational surface)."""
    num = self_intersection(D, S) - intersect(D, canonical(S), S)
    if num % 2:
        raise ArithmeticError(f"non-integral Euler characteristic for {D}")
    return 1 + num // 2


def h0_fn(n: int, a: int, b: int) -> int:
    # pi_* O(aC0 + bF) = O(b) + O(b - n) + ... + O(b - an) on P^1
    if a < 0:
        return 0
    return sum(max(0, b - k * n + 1) for k in range(a + 1))


def h_line(S: HirzebruchSurface, D: DivisorClass) -> CohomologyTriple:
    if D.m:
        raise ValueError("h_line works on F_n only; use blowup_sections.h0_blowup")
    n = S.n
    K = canonical(S)
    h0 = h0_fn(n, D.a, D.b)
    h2 = h0_fn(n, K.a - D.a, K.b - D.b)
    chi = chi_line(S, D)
    h1 = h0 + h2 - chi
    if h1 < 0:
        raise CohomologyError(f"h1 = {h1} < 0 for {D} on F_{n}")
    return CohomologyTriple(h0, h1, h2, chi)


def h0_anticanonical(n: int) -> int:
    S = HirzebruchSurface(n)
    return h_line(S, -canonical(S)).h0


def chi_omega_twist(S: Surface, D: DivisorClass) -> int:
    """chi(Omega^1(D)) in closed form: D^2 - (2 + delta)."""
    return self_intersection(D, S) - (2 + S.delta)


def chi_omega_twist_rank2(S: Surface, D: DivisorClass) -> int:
    """Same quantity through Riemann-Roch for the rank-2 bundle Omega^1(D).

    c1 = K + 2D, c2 = c2(Omega^1) + K.D + D^2 with c2(Omega^1) = e(X) = 4 + delta.
    """
    K = canonical(S)
    c1 = K + 2 * D
    c2 = 4 + S.delta + intersect(K, D, S) + self_intersection(D, S)
    twice = 4 - intersect(c1, K, S) + self_intersection(c1, S) - 2 * c2
    if twice % 2:
        raise ArithmeticError(f"non-integral rank-2 Euler characteristic for {D}")
    return twice // 2


def dim_table_hypothesis(n: int, a: int, b: int, delta: int) -> bool:
    general = a >= max(5, delta + 2) and b >= max((a - 2) * n + 6, (a - 1) * n + delta + 2)
    flat = n == 0 and a >= max(5, delta + 2) and b >= max(5, delta + 2)
    return general or flat


@dataclass(frozen=True)
class DimTable:
    n: int
    a: int
    b: int
    delta: int
    h0_twist1: int          # h^0(Omega^1_X(2K_X + C~))
    h1_twist1: int
    h2_twist1: int
    h0_twist2: int          # h^0(Omega^1_X(2K_X + 2C~))
    h1_twist2: int
    h2_twist2: int
    h0_restricted: int      # h^0(Omega^1_X(2K_X + 2C~)|C~)
    h1_restricted: int
    hypothesis: bool
    notes: tuple[str, ...] = field(default=())

    def rows(self) -> dict[str, tuple[int, int, int]]:
        return {
            "twist1": (self.h0_twist1, self.h1_twist1, self.h2_twist1),
            "twist2": (self.h0_twist2, self.h1_twist2, self.h2_twist2),
            "restricted": (self.h0_restricted, self.h1_restricted, 0),
        }


def dim_table(n: int, a: int, b: int, delta: int) -> DimTable:
    """The seven dimensions attached to a delta-nodal curve in |aC0 + bF|.

    Values are formal outside the hypothesis region (``hypothesis=False``).
    """
    g = genus(n, a, b).g
    C2 = 2 * a * b - a * a * n
    notes = []
    if n != 0 and a >= max(5, delta + 2) and b >= max(5, delta + 2) \
            and not dim_table_hypothesis(n, a, b, delta):
        notes.append("b >= max(5, delta+2) alternative applied only for n = 0")
    return DimTable(
        n, a, b, delta,
        h0_twist1=8 * g + 22 - 3 * C2, h1_twist1=delta, h2_twist1=0,
        h0_twist2=16 * g - 4 * C2 - 5 * delta + 14, h1_twist2=0, h2_twist2=0,
        h0_restricted=8 * g - C2 - 4 * delta - 8, h1_restricted=0,
        hypothesis=dim_table_hypothesis(n, a, b, delta),
        notes=tuple(notes),
    )


def twist_chis(n: int, a: int, b: int, delta: int) -> tuple[int, int]:
    """chi(Omega^1_X(2K_X + C~)) and chi(Omega^1_X(2K_X + 2C~)) through the lattice."""
    cls = nodal_classes(n, a, b, delta)
    S = surface(n, delta)
    return chi_omega_twist(S, cls.twist1), chi_omega_twist(S, cls.twist2)
