"""Picard lattices of Hirzebruch surfaces F_n and their blow-ups at reduced points.

A divisor class on Bl_delta F_n is stored as ``(a, b, m)`` meaning
``a*C0 + b*F - sum_j m_j E_j`` (pullbacks implied on the blow-up).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union


@dataclass(frozen=True)
class HirzebruchSurface:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Hirzebruch twist must be nonnegative, got n={self.n}")

    @property
    def delta(self) -> int:
        return 0

    @property
    def base(self) -> "HirzebruchSurface":
        return self


Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class BlownSurface:
    """F_n blown up at ``delta`` points of the torus chart (t, s).

    ``points`` is optional; lattice computations never look at it.  When given,
    the points must lie on pairwise distinct fibres (distinct t) and off both
    C0 and the section s = 0 (so s != 0).
    """

    base: HirzebruchSurface
    delta: int
    points: Optional[tuple[Point, ...]] = None

    def __post_init__(self):
        if self.delta < 0:
            raise ValueError(f"delta must be nonnegative, got {self.delta}")
        if self.points is None:
            return
        pts = tuple((Fraction(t), Fraction(s)) for t, s in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) != self.delta:
            raise ValueError(f"expected {self.delta} points, got {len(pts)}")
        ts = [t for t, _ in pts]
        if len(set(ts)) != len(ts):
            raise ValueError("two points share a fibre (equal t coordinate)")
        if any(s == 0 for _, s in pts):
            raise ValueError("points must have nonzero s coordinate")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def has_points(self) -> bool:
        return self.points is not None


Surface = Union[HirzebruchSurface, BlownSurface]


def blowup(n: int, delta: int, points: Optional[Sequence[Point]] = None) -> BlownSurface:
    return BlownSurface(HirzebruchSurface(n), delta, None if points is None else tuple(points))


def surface(n: int, delta: int = 0) -> Surface:
    """F_n itself for ``delta == 0``, otherwise its blow-up at ``delta`` points."""
    return HirzebruchSurface(n) if delta == 0 else blowup(n, delta)


@dataclass(frozen=True)
class DivisorClass:
    a: int
    b: int
    m: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))

    @property
    def delta(self) -> int:
        return len(self.m)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_length(self, other)
        return DivisorClass(self.a + other.a, self.b + other.b,
                            tuple(x + y for x, y in zip(self.m, other.m)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b, tuple(-x for x in self.m))

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.a, k * self.b, tuple(k * x for x in self.m))

    __rmul__ = __mul__

    def base_part(self) -> "DivisorClass":
        """The class a*C0 + b*F on F_n (drops the exceptional part)."""
        return DivisorClass(self.a, self.b)

    def pullback(self, delta: int) -> "DivisorClass":
        """sigma^* of a class on F_n, living on the blow-up at ``delta`` points."""
        if self.m:
            raise ValueError("pullback expects a class on F_n")
        return DivisorClass(self.a, self.b, (0,) * delta)

    def __str__(self) -> str:
        terms = [(self.a, "C0"), (self.b, "F")] + [(-x, f"E{j + 1}") for j, x in enumerate(self.m)]
        out = ""
        for c, name in terms:
            if not c:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            if not out:
                out = f"{'-' if c < 0 else ''}{mag}{name}"
            else:
                out += f" {'-' if c < 0 else '+'} {mag}{name}"
        return out or "0"


def _check_same_length(d1: DivisorClass, d2: DivisorClass) -> None:
    if len(d1.m) != len(d2.m):
        raise ValueError(f"divisor classes live on different surfaces "
                         f"({len(d1.m)} vs {len(d2.m)} exceptional curves)")


def exceptional(j: int, delta: int) -> DivisorClass:
    """The class E_j (0-based j) on Bl_delta F_n."""
    m = [0] * delta
    m[j] = -1
    return DivisorClass(0, 0, tuple(m))


def fiber(delta: int = 0) -> DivisorClass:
    return DivisorClass(0, 1, (0,) * delta)


def section(delta: int = 0) -> DivisorClass:
    return DivisorClass(1, 0, (0,) * delta)


def intersect(d1: DivisorClass, d2: DivisorClass, S: Surface) -> int:
    """Intersection number on S: C0^2 = -n, C0.F = 1, F^2 = 0, E_j^2 = -1."""
    if d1.delta != S.delta or d2.delta != S.delta:
        raise ValueError(f"classes with {d1.delta} and {d2.delta} exceptional parts "
                         f"do not live on a surface with delta={S.delta}")
    n = S.n
    return (-d1.a * d2.a * n + d1.a * d2.b + d2.a * d1.b
            - sum(x * y for x, y in zip(d1.m, d2.m)))


def self_intersection(d: DivisorClass, S: Surface) -> int:
    return intersect(d, d, S)


def canonical(S: Surface) -> DivisorClass:
    return DivisorClass(-2, -(2 + S.n), (-1,) * S.delta)


class NodalClasses(NamedTuple):
    C: DivisorClass            # sigma^* C
    C_tilde: DivisorClass      # sigma^* C - 2E
    K: DivisorClass
    adjoint: DivisorClass      # K_X + C~
    twist1: DivisorClass       # 2K_X + C~
    twist2: DivisorClass       # 2K_X + 2C~


def nodal_classes(n: int, a: int, b: int, delta: int) -> NodalClasses:
    if a < 0 or b < 0:
        raise ValueError("curve class needs a, b >= 0")
    S = surface(n, delta)
    C = DivisorClass(a, b, (0,) * delta)
    Ct = DivisorClass(a, b, (2,) * delta)
    K = canonical(S)
    return NodalClasses(C, Ct, K, K + Ct, 2 * K + Ct, 2 * K + 2 * Ct)


class Genus(NamedTuple):
    g: int
    g_tilde: int


def genus(n: int, a: int, b: int, delta: int = 0) -> Genus:
    """Arithmetic genus of C in |aC0 + bF| and geometric genus of its normalisation."""
    if a < 0 or b < 0:
        raise ValueError("curve class needs a, b >= 0")
    twice = 2 + 2 * a * b - 2 * a - 2 * b + a * n * (1 - a)
    if twice % 2:
        raise ArithmeticError(f"non-integral genus at n={n}, a={a}, b={b}")
    g = twice // 2
    return Genus(g, g - delta)


def adjunction_genus(D: DivisorClass, S: Surface) -> int:
    """1 + (D^2 + D.K)/2, evaluated through the pairing."""
    num = self_intersection(D, S) + intersect(D, canonical(S), S)
    if num % 2:
        raise ArithmeticError(f"adjunction parity failure for {D}")
    return 1 + num // 2
