import random
from fractions import Fraction

import pytest

from crownfree import (
    build_discharge_sequence,
    crown_oracle,
    delta_v_bound_check,
    large_set,
    lemma2_rhs,
    s_of,
    s_star,
    star_deficit_check,
    t_star,
    validate_linear,
    verify_discharge_trace,
)
from crownfree.discharging import DegreePreconditionError
from crownfree.lemmas import random_degree_function

from conftest import spoke_wheel


def star_graph(k):
    """k edges through vertex 0 on fresh endpoints."""
    edges = [(0, 1 + 2 * i, 2 + 2 * i) for i in range(k)]
    return validate_linear(edges, 1 + 2 * k)


class TestStarSums:
    @pytest.mark.parametrize(
        "dv,s,sstar",
        [((9, 3, 3), 15, 15), ((10, 3, 3), 16, 15), ((8, 5, 2), 15, 15)],
    )
    def test_s_star_cases(self, dv, s, sstar):
        # realize the degree vector with a sunflower at the base edge
        edges = [(0, 1, 2)]
        nxt = 3
        for v, d in zip((0, 1, 2), dv):
            for _ in range(d - 1):
                edges.append(tuple(sorted((v, nxt, nxt + 1))))
                nxt += 2
        H = validate_linear(edges, nxt)
        assert s_of(H, 0) == s
        assert s_star(H, 0) == sstar

    def test_large_set(self, crown, fano):
        assert large_set(crown) == set()
        assert large_set(fano) == set()
        assert large_set(star_graph(9)) == {0}

    def test_t_star_crown(self, crown):
        assert t_star(crown) == 18
        assert sum(d * d for d in crown.degrees()) == 18

    def test_t_star_fano(self, fano):
        assert t_star(fano) == 63

    def test_t_star_star9(self):
        H = star_graph(9)
        assert all(s_of(H, e) == 11 for e in range(9))
        assert t_star(H) == 99

    def test_clamp_invariants(self):
        rng = random.Random(2)
        from crownfree.search import random_linear_graph

        for _ in range(50):
            n = rng.randint(5, 14)
            m = min(10, n * (n - 1) // 6)
            H = random_linear_graph(n, m, seed=rng.randrange(2**30))
            for e in range(len(H.edges)):
                assert s_star(H, e) <= s_of(H, e)
            assert t_star(H) <= sum(d * d for d in H.degrees())
            if not large_set(H):
                assert t_star(H) == sum(d * d for d in H.degrees())


class TestBuilder:
    def test_already_uniform(self):
        tr = build_discharge_sequence([5, 5, 5])
        assert tr.k == 0 and tr.f0 == [5, 5, 5]
        assert tr.increase_set == {0, 1, 2}

    def test_single_step_l1(self):
        tr = build_discharge_sequence([4, 5, 7])
        assert tr.f0 == [5, 5, 6]
        assert tr.steps == [(2, 0)]
        assert 2 in tr.increase_set and 0 not in tr.increase_set

    def test_six_vertex_example(self):
        d = [2, 2, 5, 5, 5, 11]
        tr = build_discharge_sequence(d)
        assert tr.k == 6
        assert tr.t[0] == 150 and tr.t[-1] == 204
        assert tr.delta_v[5] == 54
        ok, bad = verify_discharge_trace(tr, d)
        assert ok, bad

    def test_l2_prefers_single_seven(self):
        d = [2, 3, 7]  # sum 12 = 5*3 - 3? no: need 5n+2 = 17
        d = [3, 7, 7]  # sum 17 = 5*3 + 2
        tr = build_discharge_sequence(d)
        assert sorted(tr.f0) == [5, 5, 7]

    def test_l2_two_sixes(self):
        d = [2, 3, 6, 6]  # sum 17 = 5*4 - 3? -> need 22
        d = [4, 6, 6, 6]  # sum 22 = 5*4 + 2, max 6 < 7
        tr = build_discharge_sequence(d)
        assert sorted(tr.f0) == [5, 5, 6, 6]

    def test_min_degree_precondition(self):
        with pytest.raises(DegreePreconditionError, match="minimum degree"):
            build_discharge_sequence([1, 7, 7])

    def test_sum_precondition(self):
        with pytest.raises(DegreePreconditionError, match="5n"):
            build_discharge_sequence([2, 2, 2])

    def test_random_functions_all_verify(self):
        rng = random.Random(17)
        for _ in range(300):
            d = random_degree_function(rng)
            tr = build_discharge_sequence(d)
            ok, bad = verify_discharge_trace(tr, d)
            assert ok, (d, bad)

    def test_conservation_every_step(self):
        rng = random.Random(23)
        for _ in range(50):
            d = random_degree_function(rng)
            tr = build_discharge_sequence(d)
            total = 5 * len(d) + tr.residue
            for fi in tr.replay():
                assert sum(fi) == total
            assert all(x > 0 for x in tr.delta)


class TestVerifierNegativeCases:
    def test_swapped_step_fails(self):
        d = [2, 2, 5, 5, 5, 11]
        tr = build_discharge_sequence(d)
        tr.steps[0] = (tr.steps[0][1], tr.steps[0][0])
        ok, bad = verify_discharge_trace(tr, d)
        assert not ok
        assert any("condition (3)" in b for b in bad)

    def test_f0_out_of_range_fails(self):
        d = [2, 2, 5, 5, 5, 11]
        tr = build_discharge_sequence(d)
        tr.f0[0] = 8
        ok, bad = verify_discharge_trace(tr, d)
        assert not ok
        assert any("condition (1)" in b for b in bad)


class TestDeltaVBound:
    def test_degree_11_example(self):
        d = [2, 2, 5, 5, 5, 11]
        tr = build_discharge_sequence(d)
        dv, bound, ok = delta_v_bound_check(tr, 5, 11)
        assert (dv, bound, ok) == (54, 36, True)

    def test_degree_9(self):
        d = [2, 2, 2, 2, 2, 2, 2, 9, 9, 9, 9, 9]  # n=12, sum 59; adjust
        d = [2] * 9 + [9]  # n=10, sum 27; need 5n+l
        # build a valid function containing a degree-9 vertex: n=7, sum 35
        d = [2, 4, 4, 5, 5, 6, 9]
        assert sum(d) == 5 * 7
        tr = build_discharge_sequence(d)
        got, bound, ok = delta_v_bound_check(tr, 6, 9)
        assert bound == 14 and ok
        for i in tr.touched_steps[6]:
            assert tr.h[i] <= 9

    def test_small_degree_rejected(self):
        tr = build_discharge_sequence([4, 5, 7])
        with pytest.raises(ValueError, match=">= 9"):
            delta_v_bound_check(tr, 2, 7)


class TestStarDeficit:
    def test_nine_spoke_wheel(self):
        H = spoke_wheel(9)
        assert crown_oracle(H) is None
        assert min(H.degrees()) >= 2
        res = star_deficit_check(H, 0)
        assert res.premise_ok
        assert res.deficit == 0 and res.bound == 0 and res.within_bound

    def test_ten_spoke_wheel(self):
        H = spoke_wheel(10)
        assert crown_oracle(H) is None
        res = star_deficit_check(H, 0)
        assert res.deficit <= 10 and res.within_bound and res.premise_ok

    def test_degree_four_co_vertex_flagged(self):
        base = spoke_wheel(9)
        n = base.n
        x1 = 2  # a spoke endpoint; raise its degree to 4
        extra = [
            (x1, n, n + 1),
            (x1, n + 2, n + 3),
            (n, n + 2, n + 4),
            (n + 1, n + 3, n + 4),
        ]
        H = validate_linear(list(base.edges) + extra, n + 5)
        res = star_deficit_check(H, 0)
        assert not res.premise_ok and x1 in res.offending
        assert crown_oracle(H) is not None  # (9,4,2) >= (6,4,2) forces a crown

    def test_small_degree_rejected(self, fano):
        with pytest.raises(ValueError, match=">= 9"):
            star_deficit_check(fano, 0)


class TestLemma2Rhs:
    def test_n11(self):
        assert lemma2_rhs(11, 0) == Fraction(275, 19)
        assert lemma2_rhs(11, 0) > 14

    def test_large_vertex_case(self):
        for n in (1, 5, 11, 100, 9999):
            assert lemma2_rhs(n, 1) > 15

    def test_small_n_below_14(self):
        assert lemma2_rhs(5, 0) == Fraction(375, 27)
        assert lemma2_rhs(5, 0) < 14

    def test_integer_identity(self):
        # 3(25n + 14L) > 15(5n + 2) <=> 42L > 30, true for all L >= 1
        assert 42 * 1 > 30
        # 3 * 25n > 14(5n + 2) <=> 5n > 28, true for n >= 6; with the
        # counter-example threshold n >= 11 the margin is strict
        for n in range(11, 200):
            assert 75 * n > 14 * (5 * n + 2)
