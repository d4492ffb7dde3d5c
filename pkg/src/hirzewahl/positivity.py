"""Positivity checks on F_n and Bl_delta F_n.

The Reider and Nakai-Moishezon checks only look at the families of irreducible
curves that can occur when the blown-up points are off C0 and on distinct
fibres:

* sigma^*F, sigma^*F - E_j, E_j, sigma^*C0;
* Gamma = alpha C0 + beta F - sum n_j E_j with alpha >= 1, beta >= alpha n and
  0 <= n_j <= alpha (the last from Gamma.(sigma^*F - E_j) >= 0).

Genericity of the points is declared by the caller, not verified here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .kernels import reider_cone_scan
from .picard import (BlownSurface, DivisorClass, HirzebruchSurface, Surface,
                     blowup, canonical, exceptional, fiber, intersect,
                     self_intersection, section)


def _fn_class(S: Surface, D: DivisorClass) -> tuple[int, int]:
    if D.m and any(D.m):
        raise ValueError("expected a class without exceptional part")
    return D.a, D.b


def is_bpf(S: Surface, D: DivisorClass) -> bool:
    a, b = _fn_class(S, D)
    if a < 0 or b < 0:
        return False
    return b >= a * S.n


def is_very_ample(S: Surface, D: DivisorClass) -> bool:
    # a = 0 classes factor through the ruling, never an embedding
    a, b = _fn_class(S, D)
    if a < 1 or b < 0:
        return False
    return b > a * S.n


# --------------------------------------------------------------------- Reider

@dataclass(frozen=True)
class Blocker:
    label: str
    curve: DivisorClass
    n_dot: int          # N.Gamma
    self_int: int       # Gamma^2
    case: str


@dataclass(frozen=True)
class ReiderReport:
    n_class: DivisorClass
    n_squared: int
    blockers: tuple[Blocker, ...]
    verdict: bool
    inconclusive: bool = False
    cone_minimum: Optional[int] = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        expected = self.n_squared >= 10 and not self.blockers and not self.inconclusive
        if self.verdict != expected:
            raise ValueError("verdict inconsistent with N^2, blockers and conclusiveness")


def reider_case(dot: int, sq: int) -> Optional[str]:
    """Which Reider exclusion a curve with N.G = dot, G^2 = sq violates, if any."""
    if dot < 0:
        return "N not nef"
    if dot == 0 and sq in (-1, -2):
        return "i"
    if dot == 1 and sq in (0, -1):
        return "ii"
    if dot == 2 and sq == 0:
        return "iii"
    return None


def special_curves(delta: int) -> list[tuple[str, DivisorClass]]:
    out = [("F", fiber(delta))]
    for j in range(delta):
        out.append((f"F-E{j + 1}", fiber(delta) + DivisorClass(0, 0, tuple(int(i == j) for i in range(delta)))))
        out.append((f"E{j + 1}", exceptional(j, delta)))
    out.append(("C0", section(delta)))
    return out


def cone_minimum(D: DivisorClass, n: int) -> Optional[int]:
    """Lower bound per unit alpha of D.Gamma over the general cone.

    With d = beta - alpha n >= 0 and 0 <= n_j <= alpha,
    D.Gamma = a d + alpha b - sum m_j n_j >= a d + alpha (b - sum max(m_j, 0)).
    Returns that slope when a >= 0 (so D.Gamma >= alpha * slope), else None.
    """
    if D.a < 0:
        return None
    return D.b - sum(x for x in D.m if x > 0)


def _exceptional_vectors(alpha: int, delta: int):
    return product(range(alpha + 1), repeat=delta)


def _finite_cone_search(N: DivisorClass, X: BlownSurface, slope: int):
    """Exact search of the finite set of cone curves with N.Gamma <= 2.

    Needs N.a >= 0 and slope > 0, so alpha <= 2 // slope.  When N.a == 0 the
    value does not depend on d, but Gamma^2 grows with d, so d stays bounded by
    the point where Gamma^2 > 0.
    """
    n, delta = X.n, X.delta
    for alpha in range(1, 2 // slope + 1):
        if N.a > 0:
            d_hi = max(0, (2 - alpha * slope) // N.a)
        else:
            # Gamma^2 = n alpha^2 + 2 alpha d - sum n_j^2 >= 2 alpha d - delta alpha^2
            d_hi = delta * alpha // 2 + 1
        for d in range(d_hi + 1):
            for nv in _exceptional_vectors(alpha, delta):
                G = DivisorClass(alpha, alpha * n + d, nv)
                dot, sq = intersect(N, G, X), self_intersection(G, X)
                case = reider_case(dot, sq)
                if case:
                    return Blocker("cone", G, dot, sq, case)
    return None


def reider_very_ample(X: BlownSurface, D: DivisorClass, *, generic: Optional[bool] = None,
                      bound: Optional[int] = None) -> ReiderReport:
    """Reider's sufficient condition for D = K_X + N to be very ample.

    ``generic`` declares that the points avoid C0 and lie on distinct fibres;
    it defaults to True when X carries points (those are validated on
    construction) and must be given explicitly otherwise.  When the cone of
    candidate curves cannot be bounded, it is scanned up to ``bound`` (default
    4 max(a, b)); a clean truncated scan is reported as inconclusive.
    """
    if X.delta < 1:
        raise ValueError("reider_very_ample expects a blow-up with delta >= 1")
    if D.delta != X.delta:
        raise ValueError("divisor does not live on X")
    if generic is None:
        generic = X.has_points
    N = D - canonical(X)
    n_sq = self_intersection(N, X)
    if not generic:
        return ReiderReport(N, n_sq, (), False, inconclusive=True,
                            notes=("point genericity (off C0, distinct fibres) not declared",))

    blockers: list[Blocker] = []
    for label, G in special_curves(X.delta):
        dot, sq = intersect(N, G, X), self_intersection(G, X)
        case = reider_case(dot, sq)
        if case:
            blockers.append(Blocker(label, G, dot, sq, case))

    notes: list[str] = []
    inconclusive = False
    slope = cone_minimum(N, X.n)
    if slope is not None and slope >= 3:
        pass  # every cone curve has N.Gamma >= 3 alpha >= 3
    elif slope is not None and slope > 0:
        hit = _finite_cone_search(N, X, slope)
        if hit:
            blockers.append(hit)
    else:
        if bound is None:
            bound = 4 * max(D.a, D.b, 1)
        best, hits, w = reider_cone_scan(N.a, N.b, N.m, X.n, bound, bound)
        if hits:
            G = DivisorClass(w[0], w[1], w[2:])
            dot, sq = intersect(N, G, X), self_intersection(G, X)
            blockers.append(Blocker("cone", G, dot, sq, reider_case(dot, sq)))
        elif best < 0:
            G = _first_negative(N, X, bound)
            blockers.append(Blocker("cone", G, intersect(N, G, X), self_intersection(G, X),
                                    "N not nef"))
        else:
            inconclusive = True
            notes.append(f"cone unbounded below N.Gamma <= 2; scanned alpha, beta <= {bound}")
    verdict = n_sq >= 10 and not blockers and not inconclusive
    return ReiderReport(N, n_sq, tuple(blockers), verdict, inconclusive, slope, tuple(notes))


def _first_negative(N: DivisorClass, X: BlownSurface, bound: int) -> DivisorClass:
    # for fixed (alpha, beta) the minimum takes n_j = alpha exactly where m_j > 0
    n = X.n
    for alpha in range(1, bound + 1):
        nv = tuple(alpha if x > 0 else 0 for x in N.m)
        for beta in range(alpha * n, bound + 1):
            G = DivisorClass(alpha, beta, nv)
            if intersect(N, G, X) < 0:
                return G
    raise AssertionError("scan reported a negative value that could not be located")


def reider_oracle(X: BlownSurface, D: DivisorClass, bound: Optional[int] = None):
    """Brute-force cone enumeration for cross-checking ``reider_very_ample``."""
    N = D - canonical(X)
    if bound is None:
        bound = 4 * max(D.a, D.b, 1)
    return reider_cone_scan(N.a, N.b, N.m, X.n, bound, bound)


# ------------------------------------------------------------ Nakai-Moishezon

def nakai_moishezon_delta1(X: BlownSurface, D: DivisorClass) -> bool:
    """Ampleness on Bl_1 F_n (toric, so ample is very ample); node off C0 assumed."""
    if X.delta != 1:
        raise ValueError("Nakai-Moishezon check is implemented for a single point only")
    if self_intersection(D, X) <= 0:
        return False
    for _, G in special_curves(1):
        if intersect(D, G, X) <= 0:
            return False
    cmin = cone_minimum(D, X.n)
    return cmin is not None and cmin > 0


# -------------------------------------------------------------- jet ampleness

@dataclass(frozen=True)
class JetCertificate:
    holds: bool
    order: int                       # 2 delta - 1
    L: DivisorClass                  # (2d-1) C0 + (2dn + 2d - n - 1) F
    twist: tuple[int, int]           # F (x) L^-1 = Omega^1(x C0 + y F)
    twist_section_ok: bool           # 2a - 3 - 2 delta >= 0
    twist_fiber_ok: bool             # 2b - 3 - n - 2 delta n - 2 delta >= (2a - 3 - 2 delta) n


def jet_ample_F(n: int, a: int, b: int, delta: int) -> JetCertificate:
    """Sufficient condition for Omega^1(2K + 2C) on F_n to be (2 delta - 1)-jet ample."""
    holds = a >= delta + 2 and b >= (a - 1) * n + delta + 2
    L = DivisorClass(2 * delta - 1, 2 * delta * n + 2 * delta - n - 1)
    x = 2 * a - 3 - 2 * delta
    y = 2 * b - 3 - n - 2 * delta * n - 2 * delta
    cert = JetCertificate(holds, 2 * delta - 1, L, (x, y), x >= 0, y >= x * n)
    if holds and not (cert.twist_section_ok and cert.twist_fiber_ok):
        raise ArithmeticError(f"jet hypothesis holds but twist bounds fail at {(n, a, b, delta)}")
    return cert


# ------------------------------------------------------------ A/B/M pipeline

@dataclass(frozen=True)
class DecompositionABM:
    A: DivisorClass
    B: DivisorClass
    M: DivisorClass

    def __post_init__(self):
        delta = self.M.delta
        ones = (1,) * delta
        lhs = 2 * DivisorClass(self.A.a, self.A.b, ones) + DivisorClass(self.B.a, self.B.b, ones)
        if lhs != self.M:
            raise ArithmeticError("M != 2(sigma^*A - E) + (sigma^*B - E)")


def abm_decomposition(a: int, b: int, delta: int = 0) -> DecompositionABM:
    if a < 0 or b < 0:
        raise ValueError("a, b must be nonnegative")
    A = DivisorClass(a // 3, b // 3)
    B = DivisorClass(a - 2 * (a // 3), b - 2 * (b // 3))
    if 2 * A + B != DivisorClass(a, b):
        raise ArithmeticError("2A + B != aC0 + bF")
    return DecompositionABM(A, B, DivisorClass(a, b, (3,) * delta))


@dataclass(frozen=True)
class BigNefReport:
    n: int
    a: int
    b: int
    delta: int
    hypotheses: tuple[tuple[str, bool], ...]
    sub_reports: tuple[tuple[str, object], ...]
    failed: tuple[str, ...]
    verdict: bool

    @property
    def hypothesis_ok(self) -> bool:
        return all(ok for _, ok in self.hypotheses)


def a_piece_bound(n: int, a: int, b: int, delta: int) -> bool:
    """Numerical range where sigma^*A - E is expected very ample."""
    return a >= 6 and b >= max((a + 3) * n, 6 * delta - 3 * n + 3)


def b_piece_bound(n: int, a: int, b: int, delta: int) -> bool:
    # the B piece and the partial sums sigma^*B - E_1 - ... - E_j need the wider (a+7)n margin
    return a >= 6 and b >= max((a + 7) * n, 6 * delta - 3 * n + 3)


def thm_pipeline_bignef(n: int, a: int, b: int, delta: int) -> BigNefReport:
    """Very-ampleness chain behind the vanishing that gives surjectivity of the
    Gaussian map of K_X + C~ (A, B pieces of M = C~ - E and the partial sums)."""
    hyps = (("a >= 6", a >= 6),
            ("b >= (a+7)n", b >= (a + 7) * n),
            ("b >= 6 delta - 3n + 3", b >= 6 * delta - 3 * n + 3))
    dec = abm_decomposition(a, b, delta)
    subs: list[tuple[str, object]] = []
    if delta == 0:
        S = HirzebruchSurface(n)
        subs.append(("A", is_very_ample(S, dec.A)))
        subs.append(("B", is_very_ample(S, dec.B)))
    else:
        X = blowup(n, delta)
        ones = (1,) * delta
        subs.append(("sigma*A-E", reider_very_ample(X, DivisorClass(dec.A.a, dec.A.b, ones), generic=True)))
        subs.append(("sigma*B-E", reider_very_ample(X, DivisorClass(dec.B.a, dec.B.b, ones), generic=True)))
        for j in range(1, delta + 1):
            m = (1,) * j + (0,) * (delta - j)
            subs.append((f"sigma*B-E1..E{j}",
                         reider_very_ample(X, DivisorClass(dec.B.a, dec.B.b, m), generic=True)))
    failed = [name for name, ok in hyps if not ok]
    for name, rep in subs:
        ok = rep if isinstance(rep, bool) else rep.verdict
        if not ok:
            failed.append(name)
    return BigNefReport(n, a, b, delta, hyps, tuple(subs), tuple(failed), not failed)
