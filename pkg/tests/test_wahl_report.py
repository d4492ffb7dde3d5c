import pytest

from hirzewahl.gaussian import check_surjectivity_PhiX
from hirzewahl.picard import DivisorClass, HirzebruchSurface, canonical
from hirzewahl.riemann_roch import dim_table_hypothesis, h_line
from hirzewahl.wahl_report import (CorankReport, Hypothesis, check_thm_1nodal, check_thm_A,
                                   conjecture_check, embedding_obstruction,
                                   h0rho_surjective_regime, wahl_dims)


def minus_K_h0(n):
    S = HirzebruchSurface(n)
    return h_line(S, -canonical(S)).h0


def test_thm_A_examples():
    assert check_thm_A(0, 6, 9, 1).corank == 9
    rep = check_thm_A(5, 6, 66, 1)
    assert rep.corank == 11 and "(a+7)n" in rep.notes[0]
    rep = check_thm_A(0, 5, 9, 1)
    assert rep.corank is None and not rep.hypotheses[0].satisfied


def test_thm_1nodal_examples():
    assert check_thm_1nodal(1, 6, 10).corank == 9
    assert check_thm_1nodal(4, 6, 27).corank == 10
    assert check_thm_1nodal(0, 6, 2).corank is None


def test_gap_region_flagged():
    rep = check_thm_A(0, 6, 6, 1)
    assert rep.corank is None
    assert any("gap region" in x for x in rep.notes)


def test_report_invariants():
    with pytest.raises(ValueError):
        CorankReport(0, 6, 9, 1, (Hypothesis("a", "a >= 6", False),), 9, 40, 39)
    with pytest.raises(ArithmeticError):
        CorankReport(4, 6, 60, 1, (Hypothesis("a", "a >= 6", True),), 9, 40, 39)


def test_h0rho_examples():
    assert h0rho_surjective_regime(0, 5, 5, 12)
    assert not h0rho_surjective_regime(0, 5, 5, 15)
    assert not any(h0rho_surjective_regime(n, a, b, 0)
                   for n in range(4) for a in range(5, 10) for b in range(5, 40))


def test_corank_paths_agree_and_regions():
    fired = 0
    outside = set()
    for n in range(7):
        for a in range(0, 13):
            for b in range(0, 81):
                for d in range(5):
                    rep = check_thm_A(n, a, b, d)
                    if rep.corank is not None:
                        fired += 1
                        assert rep.corank == minus_K_h0(n)
                        if not dim_table_hypothesis(n, a, b, d):
                            outside.add((n, b, d))
                        assert not h0rho_surjective_regime(n, a, b, d)
    assert fired > 100
    # containment holds for nodal curves; smooth curves on F_0 with b in {3, 4} escape
    assert outside == {(0, 3, 0), (0, 4, 0)}


@pytest.mark.parametrize("b", [3, 4])
def test_smooth_f0_escape_points_still_surjective(b):
    # F_0 = P^1 x P^1: Omega^1(2K + 2C) = O(2a-6, 2b-4) + O(2a-4, 2b-6) by Kunneth
    a = 6
    target = (2 * a - 5) * (2 * b - 3) + (2 * a - 3) * max(0, 2 * b - 5)
    rep = check_surjectivity_PhiX(0, a, b, 0)
    assert rep.surjective is None
    assert rep.target_dim == target == rep.rank


@pytest.mark.parametrize("args", [(0, 6, 9, 1), (1, 6, 13, 1), (0, 6, 15, 2), (0, 7, 10, 1)])
def test_thm_A_points_are_surjective(args):
    assert check_thm_A(*args).corank is not None
    rep = check_surjectivity_PhiX(*args, seed=42)
    assert rep.surjective is True, rep


def test_embedding_obstruction():
    v = embedding_obstruction(0, 5, 6, 9, 1)
    assert v.verdict == "cannot embed" and "9" in v.reason and "11" in v.reason
    assert embedding_obstruction(1, 2, 6, 20, 1).verdict == "no conclusion"
    v = embedding_obstruction(4, 7, 6, 52, 1)
    assert v.verdict == "cannot embed" and (v.corank_n, v.corank_m) == (10, 13)
    assert embedding_obstruction(0, 5, 5, 9, 1).verdict == "no conclusion"
    with pytest.raises(ValueError):
        embedding_obstruction(3, 3, 6, 90, 1)


def test_conjecture_examples():
    c = conjecture_check(0, 1, 42)
    assert (c.lhs, c.rhs, c.holds) == (9, 8, True)
    c = conjecture_check(5, 0, 1)
    assert (c.lhs, c.rhs) == (11, 11)
    c = conjecture_check(0, 9, 42)
    assert (c.lhs, c.rhs) == (9, 0)


def test_wahl_dims():
    assert wahl_dims(9) == (36, 40, False)
    assert wahl_dims(10) == (45, 45, True)
    assert wahl_dims(2) == (1, 5, False)
    with pytest.raises(ValueError):
        wahl_dims(1)
