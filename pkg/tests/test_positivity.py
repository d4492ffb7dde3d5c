import pytest
from hypothesis import given, strategies as st

from hirzewahl.picard import DivisorClass, HirzebruchSurface, blowup, exceptional, intersect
from hirzewahl.positivity import (ReiderReport, a_piece_bound, abm_decomposition, cone_minimum,
                                  is_bpf, is_very_ample, jet_ample_F,
                                  nakai_moishezon_delta1, reider_case, reider_oracle,
                                  reider_very_ample, thm_pipeline_bignef)


def sigma_A_minus_E(n, a, b, delta):
    A = abm_decomposition(a, b, delta).A
    return blowup(n, delta), DivisorClass(A.a, A.b, (1,) * delta)


def test_fn_criteria():
    F2 = HirzebruchSurface(2)
    assert is_very_ample(F2, DivisorClass(1, 3))
    assert not is_very_ample(F2, DivisorClass(1, 2)) and is_bpf(F2, DivisorClass(1, 2))
    for n in range(4):
        S = HirzebruchSurface(n)
        assert is_bpf(S, DivisorClass(0, 0)) and not is_very_ample(S, DivisorClass(0, 0))
        assert not is_very_ample(S, DivisorClass(0, 5))
        assert not is_bpf(S, DivisorClass(-1, 5))


def test_reider_examples():
    X, D = sigma_A_minus_E(0, 6, 9, 1)
    rep = reider_very_ample(X, D, generic=True)
    assert rep.n_squared == 36 and rep.verdict and not rep.blockers

    X, D = sigma_A_minus_E(0, 3, 3, 1)
    rep = reider_very_ample(X, D, generic=True)
    assert rep.n_squared == 14 and not rep.verdict
    b = next(x for x in rep.blockers if x.label == "F-E1")
    assert (b.n_dot, b.self_int, b.case) == (1, -1, "ii")


def test_reider_pullback_without_exceptional_part():
    # sigma^*D contracts each E_j, so E_j itself blocks (N.E = 1, E^2 = -1)
    X = blowup(1, 2)
    rep = reider_very_ample(X, DivisorClass(3, 40, (0, 0)), generic=True)
    assert is_very_ample(HirzebruchSurface(1), DivisorClass(3, 40))
    assert not rep.verdict
    assert {x.label for x in rep.blockers} == {"E1", "E2"}


def test_reider_inconclusive_without_genericity():
    X = blowup(0, 1)
    rep = reider_very_ample(X, DivisorClass(2, 3, (1,)))
    assert rep.inconclusive and not rep.verdict
    with pytest.raises(ValueError):
        reider_very_ample(HirzebruchSurface(0), DivisorClass(2, 3))
    with pytest.raises(ValueError):
        ReiderReport(DivisorClass(1, 1, (1,)), 12, (), False)


def test_reider_case_table():
    assert reider_case(0, -1) == "i" and reider_case(0, -2) == "i"
    assert reider_case(1, 0) == "ii" and reider_case(1, -1) == "ii"
    assert reider_case(2, 0) == "iii"
    assert reider_case(-1, 5) == "N not nef"
    assert reider_case(2, -1) is None and reider_case(3, 0) is None


def _cone_blocked(rep):
    return any(b.label == "cone" for b in rep.blockers)


def test_reider_agrees_with_enumeration_oracle():
    """Symbolic cone search vs brute force up to alpha, beta <= 4 max(a, b)."""
    seen = 0
    for n in range(4):
        for delta in range(1, 4):
            X = blowup(n, delta)
            for a in range(0, 5):
                for b in range(0, 4 * n + 6):
                    for m in {(1,) * delta, (1,) + (0,) * (delta - 1), (2,) * delta}:
                        D = DivisorClass(a, b, m)
                        rep = reider_very_ample(X, D, generic=True)
                        if rep.inconclusive:
                            continue
                        best, hits, witness = reider_oracle(X, D)
                        assert _cone_blocked(rep) == (hits > 0 or best < 0), (n, delta, a, b, m)
                        slope = cone_minimum(rep.n_class, n)
                        if slope is not None and slope >= 0:
                            # N.Gamma >= alpha * slope >= slope
                            assert best >= slope
                        seen += 1
    assert seen > 500


def test_reider_true_above_a_piece_bound():
    for n in range(5):
        for delta in range(1, 4):
            for a in range(6, 11):
                lo = max((a + 3) * n, 6 * delta - 3 * n + 3)
                for b in range(lo, lo + 10):
                    assert a_piece_bound(n, a, b, delta)
                    X, D = sigma_A_minus_E(n, a, b, delta)
                    assert reider_very_ample(X, D, generic=True).verdict, (n, delta, a, b)


@given(st.integers(0, 4), st.integers(1, 3), st.integers(0, 15), st.integers(0, 40))
def test_reider_monotone_in_b(n, delta, a, b):
    X, D = sigma_A_minus_E(n, a, b, delta)
    if reider_very_ample(X, D, generic=True).verdict:
        X, D = sigma_A_minus_E(n, a, b + 3, delta)
        assert reider_very_ample(X, D, generic=True).verdict


def test_reider_implies_nakai_delta1():
    for n in range(5):
        X = blowup(n, 1)
        for a in range(0, 16):
            for b in range(0, 50):
                _, D = sigma_A_minus_E(n, a, b, 1)
                if reider_very_ample(X, D, generic=True).verdict:
                    assert nakai_moishezon_delta1(X, D), (n, a, b)


def test_nakai_examples():
    X = blowup(1, 1)
    assert nakai_moishezon_delta1(X, DivisorClass(2, 3, (1,)))
    assert not nakai_moishezon_delta1(X, DivisorClass(1, 1, (1,)))
    assert not nakai_moishezon_delta1(X, exceptional(0, 1))
    with pytest.raises(ValueError):
        nakai_moishezon_delta1(blowup(1, 2), DivisorClass(2, 3, (1, 1)))


def test_nakai_against_candidate_enumeration():
    # direct check of D.G > 0 over the candidate families with small alpha, beta
    for n in range(4):
        X = blowup(n, 1)
        cands = [DivisorClass(0, 1, (0,)), DivisorClass(0, 1, (1,)), DivisorClass(1, 0, (0,)),
                 exceptional(0, 1)]
        cands += [DivisorClass(al, be, (g,)) for al in range(1, 8)
                  for be in range(al * n, al * n + 8) for g in range(al + 1)]
        for a in range(-1, 6):
            for b in range(-1, 12):
                for m in range(-1, 4):
                    D = DivisorClass(a, b, (m,))
                    brute = intersect(D, D, X) > 0 and all(intersect(D, G, X) > 0 for G in cands)
                    assert nakai_moishezon_delta1(X, D) == brute, (n, a, b, m)


def test_jet_certificate():
    assert jet_ample_F(1, 5, 9, 2).holds
    c = jet_ample_F(0, 3, 3, 1)
    assert c.holds and c.order == 1
    assert not jet_ample_F(0, 4, 30, 4).holds
    assert jet_ample_F(2, 6, 20, 2).L == DivisorClass(3, 9)


@given(st.integers(0, 6), st.integers(0, 20), st.integers(0, 120), st.integers(0, 8))
def test_jet_hypothesis_gives_twist_bounds(n, a, b, delta):
    c = jet_ample_F(n, a, b, delta)
    if c.holds:
        assert c.twist_section_ok and c.twist_fiber_ok


def test_abm_examples():
    d = abm_decomposition(6, 9, 1)
    assert d.A == DivisorClass(2, 3) == d.B
    assert d.M == DivisorClass(6, 9, (3,))
    d = abm_decomposition(7, 10)
    assert (d.A, d.B) == (DivisorClass(2, 3), DivisorClass(3, 4))
    assert abm_decomposition(0, 0).A == DivisorClass(0, 0)


def test_abm_identity_grid():
    for a in range(101):
        for b in range(101):
            d = abm_decomposition(a, b, 2)
            assert 2 * d.A + d.B == DivisorClass(a, b)


def test_pipeline():
    rep = thm_pipeline_bignef(0, 6, 9, 1)
    assert rep.verdict and len(rep.sub_reports) == 3
    rep = thm_pipeline_bignef(1, 6, 12, 1)
    assert not rep.verdict and "b >= (a+7)n" in rep.failed
    rep = thm_pipeline_bignef(2, 7, 30, 0)
    assert [name for name, _ in rep.sub_reports] == ["A", "B"]
