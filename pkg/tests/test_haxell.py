from fractions import Fraction

import pytest

from tripack import (
    BudgetExceeded,
    Multigraph,
    Triangle,
    enumerate_triangles,
    tau_exact,
    verify_transversal,
)
from tripack.generators import gen_complete, gen_cycle, gen_random, gen_wheel
from tripack.haxell import (
    build_state,
    candidate_transversals,
    max_independent_family,
    transversal_292,
)


class TestMaxIndependentFamily:
    def test_k4_all_candidates(self):
        g = gen_complete(4)
        fam = max_independent_family(g, enumerate_triangles(g))
        assert len(fam) == 1

    def test_w5(self):
        g = gen_wheel(5)
        fam = max_independent_family(g, enumerate_triangles(g))
        assert len(fam) == 2

    def test_k4_share_one_candidates(self):
        g = gen_complete(4)
        base = Triangle.of(0, 1, 2)
        base_edges = set(base.edges)
        candidates = [
            t
            for t in enumerate_triangles(g)
            if sum(e in base_edges for e in t.edges) == 1
        ]
        assert len(candidates) == 3
        assert len(max_independent_family(g, candidates)) == 1

    def test_capacity_awareness(self):
        g = Multigraph.from_edges(3, [(0, 1, 2), (0, 2, 2), (1, 2, 2)])
        fam = max_independent_family(g, enumerate_triangles(g))
        # one candidate triple, usable once per family membership
        assert len(fam) == 1

    def test_family_predicate(self):
        g = gen_wheel(5)
        tris = enumerate_triangles(g)
        rim_only = lambda fam: all(t.a == 0 for t in fam)  # noqa: E731
        fam = max_independent_family(g, tris, rim_only)
        assert len(fam) == 2

    def test_rejects_non_triangle(self):
        with pytest.raises(ValueError):
            max_independent_family(gen_cycle(5), [Triangle.of(0, 1, 2)])


class TestBuildState:
    def test_triangle_free(self):
        st = build_state(gen_cycle(5))
        assert st.nu == 0 and len(st.b) == 0
        assert st.gamma == 0

    def test_k4(self):
        st = build_state(gen_complete(4))
        assert st.nu == 1
        assert len(st.b) == 1
        assert st.gamma == 1  # one share-one triangle fits
        assert len(st.b1) == 1

    def test_w5(self):
        st = build_state(gen_wheel(5))
        assert st.nu == 2
        assert st.gamma == Fraction(1, 2)
        assert st.alpha + st.eta <= 1 - st.gamma

    def test_scalars_bounded(self):
        for g in [gen_complete(5), gen_complete(6), gen_wheel(6)]:
            st = build_state(g)
            for x in (st.gamma, st.beta, st.alpha, st.delta, st.eta, st.delta0):
                assert 0 <= x <= 3
            assert st.eta_prime <= 2 * st.eta
            assert st.alpha + st.eta <= 1 - st.gamma

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded):
            build_state(gen_complete(6), budget=10)


class TestCandidates:
    def test_k4_candidate_a(self):
        g = gen_complete(4)
        st = build_state(g)
        cands = candidate_transversals(g, st)
        by_label = {c.label: c for c in cands}
        a = by_label["a"]
        assert a.slot_size <= Fraction(7, 3)  # hence at most 2 edges
        assert verify_transversal(g, a.certificate)

    def test_triangle_free_all_empty(self):
        g = gen_cycle(6)
        cands = candidate_transversals(g, build_state(g))
        assert len(cands) == 5
        assert all(c.certificate.weight == 0 for c in cands)

    def test_w5_bounds(self):
        g = gen_wheel(5)
        st = build_state(g)
        for c in candidate_transversals(g, st):
            assert Fraction(c.slot_size) <= c.size_bound
            assert verify_transversal(g, c.certificate)
        best = min(c.slot_size for c in candidate_transversals(g, st))
        assert best <= 5

    def test_all_verify_on_sample(self):
        for g in [gen_complete(5), gen_complete(6), gen_wheel(6), gen_wheel(7)]:
            st = build_state(g)
            tau, _ = tau_exact(g)
            for c in candidate_transversals(g, st):
                assert Fraction(c.slot_size) <= c.size_bound
                assert verify_transversal(g, c.certificate)
                assert c.certificate.weight >= tau


class TestTransversal292:
    def test_k4(self):
        cert = transversal_292(gen_complete(4))
        assert cert.weight == 2

    def test_k5(self):
        g = gen_complete(5)
        cert = transversal_292(g)
        assert verify_transversal(g, cert)
        assert tau_exact(g)[0] <= cert.weight <= 5

    def test_triangle_free(self):
        assert transversal_292(gen_cycle(5)).weight == 0

    def test_parallel_edges(self):
        g = Multigraph.from_edges(
            4, [(0, 1, 2), (0, 2, 2), (1, 2, 2), (0, 3, 1), (1, 3, 1), (2, 3, 1)]
        )
        cert = transversal_292(g)
        assert verify_transversal(g, cert)

    def test_random_multigraphs(self):
        for seed in range(20):
            n = 4 + seed % 3
            m = min(6 + seed % 5, n * (n - 1) // 2)
            g = gen_random(n, m, 3, seed)
            cert = transversal_292(g)
            assert verify_transversal(g, cert)
            assert cert.weight >= tau_exact(g)[0]

    def test_deterministic(self):
        g = gen_random(6, 9, 2, 13)
        assert transversal_292(g) == transversal_292(g)
