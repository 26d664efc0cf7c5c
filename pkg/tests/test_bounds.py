import random
from fractions import Fraction

import pytest

from hgcolor import (
    BipartiteGraph,
    Hypergraph,
    ResourceCapError,
    bound_table,
    eval_f,
    eval_w,
    eval_z,
    gen_biregular_k2t1_free,
    poly_bound,
    poly_bound_collapsed,
    sparsity_empirical,
    zeta_sum_audit,
)

from oracles import random_hypergraph


def hg(*edges):
    return Hypergraph([list(e) for e in edges])


def c6():
    return BipartiteGraph(
        ["u0", "u1", "u2"],
        ["w0", "w1", "w2"],
        [("u0", "w0"), ("w0", "u1"), ("u1", "w1"), ("w1", "u2"), ("u2", "w2"), ("w2", "u0")],
    )


def matching2():
    return BipartiteGraph(["u0", "u1"], ["w0", "w1"], [("u0", "w0"), ("u1", "w1")])


class TestPolyBound:
    def test_value_2_2_1(self):
        assert poly_bound(2, 2, 1) == 8

    def test_value_1_1_1(self):
        assert poly_bound(1, 1, 1) == 0

    def test_non_positive_rejected(self):
        with pytest.raises(ValueError):
            poly_bound(0, 2, 1)

    def test_symmetric_in_a_b(self):
        for a in range(1, 8):
            for b in range(1, 8):
                for t in range(1, 4):
                    assert poly_bound(a, b, t) == poly_bound(b, a, t)

    def test_collapsed_identity(self):
        for a in range(1, 21):
            for b in range(1, 21):
                for t in range(1, 21):
                    assert poly_bound(a, b, t) == poly_bound_collapsed(a, b, t)

    def test_leading_coefficient(self):
        # poly(a,b,t) / b^2 approaches (4a-3)t as b grows
        for a, t in ((2, 1), (3, 1), (4, 2)):
            b = 10**6
            ratio = poly_bound(a, b, t) / (b * b)
            assert abs(ratio - (4 * a - 3) * t) < 1e-2


class TestZetaSumAudit:
    def test_c6_slack_zero_everywhere(self):
        audit = zeta_sum_audit(c6(), 1)
        assert audit.profile == (2, 2)
        assert all(r.zeta_sum == 8 and r.poly_bound == 8 and r.slack == 0
                   for r in audit.per_edge)
        assert audit.max_ratio == 1

    def test_matching_is_all_zero(self):
        audit = zeta_sum_audit(matching2(), 1)
        assert all(r.zeta_sum == 0 and r.poly_bound == 0 for r in audit.per_edge)
        assert audit.max_ratio == 0

    def test_non_biregular_rejected(self):
        g = BipartiteGraph(["u0", "u1"], ["w0"], [("u0", "w0"), ("u1", "w0")])
        g2 = BipartiteGraph(["u0", "u1"], ["w0", "w1"],
                            [("u0", "w0"), ("u0", "w1"), ("u1", "w0")])
        assert zeta_sum_audit(g, 1).profile == (1, 2)
        with pytest.raises(ValueError, match="biregular"):
            zeta_sum_audit(g2, 1)

    def test_k2t1_violation_rejected(self):
        g = BipartiteGraph(["u0", "u1"], ["w0", "w1"],
                           [("u0", "w0"), ("u0", "w1"), ("u1", "w0"), ("u1", "w1")])
        with pytest.raises(ValueError, match="K_"):
            zeta_sum_audit(g, 1)

    def test_generated_instances_have_nonnegative_slack(self):
        rng = random.Random(2)
        done = 0
        while done < 25:
            a = rng.randint(2, 4)
            b = rng.randint(2, 4)
            t = rng.randint(1, min(a, b) - 1) if min(a, b) > 1 else 1
            n_u = rng.randint(3, 6) * b
            try:
                g, _ = gen_biregular_k2t1_free(a, b, n_u, t, seed=rng.randint(0, 10**6),
                                               max_tries=3000)
            except (ValueError, ResourceCapError):
                continue
            audit = zeta_sum_audit(g, t)
            assert all(r.slack >= 0 for r in audit.per_edge)
            done += 1


class TestSparsity:
    def test_c6(self):
        rep = sparsity_empirical(c6(), t=1)
        assert rep.square_max_degree == 4
        assert rep.max_neighborhood_edges == 4
        assert rep.sigma_emp == Fraction(1, 3)
        assert abs(rep.asymptotic_target - 4 / 9) < 1e-12

    def test_matching_is_fully_sparse(self):
        rep = sparsity_empirical(matching2())
        assert rep.sigma_emp == 1
        assert rep.asymptotic_target is None

    def test_neighborhood_count_is_half_zeta_sum(self):
        audit = zeta_sum_audit(c6(), 1)
        rep = sparsity_empirical(c6())
        by_edge = dict(rep.per_edge)
        for row in audit.per_edge:
            assert row.zeta_sum == 2 * by_edge[row.edge]


class TestCoefficients:
    def test_w31_matches_closed_form(self):
        assert abs(eval_w(3, 1) - (1.36 + 0.64**1.5 / 3)) < 1e-12
        assert 1.5306 <= eval_w(3, 1) <= 1.5310

    def test_w_tends_to_four_thirds(self):
        assert abs(eval_w(10**6, 1) - 4 / 3) < 2e-3

    def test_w_decreasing_in_k(self):
        values = [eval_w(k, 1) for k in range(3, 101)]
        assert all(x > y for x, y in zip(values, values[1:]))

    def test_z_is_half_w(self):
        for a in range(2, 9):
            for t in range(1, a):
                assert abs(eval_w(a, t) - 2 * eval_z(a, t)) < 1e-12

    def test_f_definition(self):
        assert abs(eval_f(3) - eval_w(3, 1) * 3) < 1e-12

    def test_t_at_least_a_rejected(self):
        with pytest.raises(ValueError, match="t < a"):
            eval_z(2, 2)


class TestBoundTable:
    def test_acyclic_linear_instance(self):
        h = hg("abc", "cde")
        table = bound_table(h, with_exact=True)
        assert table.row("acyclic_linear").value == 4
        assert table.row("clique_lower").value == 4
        assert table.row("exact").value == 4
        assert table.row("greedy_2rd").value == 2 * 3 * 2

    def test_triangle_has_no_acyclic_row(self):
        table = bound_table(hg("ab", "bc", "ac"))
        assert not table.row("acyclic_linear").applicable
        assert table.row("mahdian").applicable is False  # rho = 2 < 3

    def test_w_bound_needs_t_below_rank(self):
        assert bound_table(hg("abc", "abd")).row("w_bound").applicable  # t=2 < rank=3
        assert not bound_table(hg("a")).row("w_bound").applicable  # t=1 = rank=1

    def test_non_asymptotic_uppers_dominate_exact(self):
        rng = random.Random(7)
        done = 0
        while done < 40:
            h = random_hypergraph(rng, max_vertices=5, max_edges=4)
            if h.n_edges == 0 or len(h.incidences()) > 14:
                continue
            table = bound_table(h, with_exact=True)
            exact = table.row("exact").value
            if exact is None:
                continue
            for name in ("greedy_2rd", "acyclic_linear"):
                row = table.row(name)
                if row.applicable:
                    assert row.value >= exact
            assert table.row("clique_lower").value <= exact
            done += 1

    def test_asymptotic_rows_flagged(self):
        table = bound_table(hg("abc", "cde"))
        for name in ("global_1772", "w_bound", "linear_1531", "mahdian"):
            assert table.row(name).asymptotic
        for name in ("greedy_2rd", "acyclic_linear", "clique_lower"):
            assert not table.row(name).asymptotic
