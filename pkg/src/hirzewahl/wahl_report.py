"""Hypothesis checkers and corank reports for nodal curves on Hirzebruch surfaces.

Every report carries its full list of inequalities, so scans can chart where
each one starts to hold; a corank is only given when all of them do.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .blowup_sections import generic_blowup, h0_blowup
from .picard import DivisorClass, HirzebruchSurface, canonical, genus
from .riemann_roch import dim_table_hypothesis, h0_anticanonical


def anticanonical_corank(n: int) -> int:
    # h^0(-K) on F_n: 9 up to n = 3, n + 6 from n = 3 on
    return 9 if n <= 2 else n + 6


@dataclass(frozen=True)
class Hypothesis:
    name: str
    text: str
    satisfied: bool


@dataclass(frozen=True)
class CorankReport:
    n: int
    a: int
    b: int
    delta: int
    hypotheses: tuple[Hypothesis, ...]
    corank: Optional[int]
    g: int
    g_tilde: int
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if (self.corank is not None) != self.fires:
            raise ValueError("corank must be present exactly when all hypotheses hold")
        if self.corank is not None and self.corank != anticanonical_corank(self.n):
            raise ArithmeticError("corank disagrees with h^0(-K)")

    @property
    def fires(self) -> bool:
        return all(h.satisfied for h in self.hypotheses)

    def as_dict(self) -> dict:
        return {
            "n": self.n, "a": self.a, "b": self.b, "delta": self.delta,
            "g": self.g, "g_tilde": self.g_tilde, "fires": self.fires,
            "corank": self.corank,
            "hypotheses": [{"name": h.name, "text": h.text, "satisfied": h.satisfied}
                           for h in self.hypotheses],
            "notes": list(self.notes),
        }


def _report(n, a, b, delta, hyps, notes) -> CorankReport:
    g = genus(n, a, b, delta)
    fires = all(h.satisfied for h in hyps)
    corank = h0_anticanonical(n) if fires else None
    return CorankReport(n, a, b, delta, tuple(hyps), corank, g.g, g.g_tilde, tuple(notes))


def _tight(bounds: dict[str, int]) -> str:
    top = max(bounds.values())
    names = [k for k, v in bounds.items() if v == top]
    return f"binding bound on b: {' = '.join(names)} = {top}"


def check_thm_A(n: int, a: int, b: int, delta: int) -> CorankReport:
    """a >= 6 and b >= max{(a+7)n, (a-1)n + delta + 2, 6 delta - 3n + 3}."""
    bounds = {"(a+7)n": (a + 7) * n,
              "(a-1)n+delta+2": (a - 1) * n + delta + 2,
              "6delta-3n+3": 6 * delta - 3 * n + 3}
    hyps = [Hypothesis("a", "a >= 6", a >= 6),
            Hypothesis("b", "b >= max{(a+7)n, (a-1)n+delta+2, 6delta-3n+3}",
                       b >= max(bounds.values()))]
    notes = [_tight(bounds)]
    if delta < 0:
        hyps.append(Hypothesis("delta", "delta >= 0", False))
    if delta == 1 and not all(h.satisfied for h in hyps) and check_thm_1nodal(n, a, b).fires:
        notes.append("gap region: covered by the one-node bounds only")
    return _report(n, a, b, delta, hyps, notes)


def check_thm_1nodal(n: int, a: int, b: int) -> CorankReport:
    """One node off C0: a >= 6 and b >= max{(a-2)n + 6, an + 3}."""
    bounds = {"(a-2)n+6": (a - 2) * n + 6, "an+3": a * n + 3}
    hyps = [Hypothesis("node", "node off C0 (declared)", True),
            Hypothesis("a", "a >= 6", a >= 6),
            Hypothesis("b", "b >= max{(a-2)n+6, an+3}", b >= max(bounds.values()))]
    return _report(n, a, b, 1, hyps, [_tight(bounds)])


def h0rho_surjective_regime(n: int, a: int, b: int, delta: int) -> bool:
    """Dimension hypothesis (delta-free part), delta > a + b - an/2 and g - delta >= 2."""
    base = (a >= 5 and b >= (a - 2) * n + 6) or (n == 0 and a >= 5 and b >= 5)
    if not base or b < 0:
        return False
    # delta > a + b - an/2, cleared of the half
    return 2 * delta > 2 * a + 2 * b - a * n and genus(n, a, b, delta).g_tilde >= 2


@dataclass(frozen=True)
class EmbeddingVerdict:
    verdict: str            # "cannot embed" | "no conclusion"
    reason: str
    corank_n: Optional[int] = None
    corank_m: Optional[int] = None


def embedding_obstruction(n: int, m: int, a: int, b: int, delta: int) -> EmbeddingVerdict:
    if m == n:
        raise ValueError("target surface must differ from the source (m != n)")
    if m < 4:
        return EmbeddingVerdict("no conclusion", f"m = {m} < 4: corank on F_m is 9, not m + 6")
    rep = check_thm_A(n, a, b, delta)
    if rep.corank is None:
        return EmbeddingVerdict("no conclusion", "corank hypotheses not met on F_n")
    cm = anticanonical_corank(m)
    if cm == rep.corank:
        return EmbeddingVerdict("no conclusion", f"coranks agree ({cm})", rep.corank, cm)
    return EmbeddingVerdict("cannot embed",
                            f"corank {rep.corank} on F_{n} vs {cm} on F_{m} ({rep.corank} != {cm})",
                            rep.corank, cm)


@dataclass(frozen=True)
class ConjectureCheck:
    lhs: int
    rhs: int
    holds: bool
    seed: int


def conjecture_check(n: int, delta: int, seed: int = 42) -> ConjectureCheck:
    """h^0(F_n, -K) against h^0(X, -K_X) at delta seeded points."""
    lhs = h0_anticanonical(n)
    if delta == 0:
        rhs = lhs
    else:
        X = generic_blowup(n, delta, seed)
        minus_K = -canonical(HirzebruchSurface(n))
        rhs = h0_blowup(X, DivisorClass(minus_K.a, minus_K.b, (1,) * delta))
    return ConjectureCheck(lhs, rhs, lhs >= rhs, seed)


def wahl_dims(g: int) -> tuple[int, int, bool]:
    """(dim of wedge^2 H^0(K), dim of H^0(3K), whether the first can reach the second)."""
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    wedge = g * (g - 1) // 2
    target = 5 * g - 5
    return wedge, target, wedge >= target


def regions(n: int, a: int, b: int, delta: int) -> dict[str, bool]:
    """Membership flags used by scans."""
    return {
        "thmA": check_thm_A(n, a, b, delta).fires,
        "dim_table": dim_table_hypothesis(n, a, b, delta),
        "h0rho": h0rho_surjective_regime(n, a, b, delta),
    }
