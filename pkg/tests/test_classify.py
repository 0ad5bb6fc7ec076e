import pytest

from domgame.classify import (ClassificationError, ClassLabel, VerificationResult, classify,
                              corona_cases, regression_claims, problem3_summary, scan_problem1,
                              scan_problem3, scan_theorems, tree_class, tree_game_value,
                              verify_cor5a, verify_prop2, verify_prop4, verify_prop6, verify_prop8,
                              verify_theorem3, verify_tree)
from domgame.enumeration import enumerate_connected_labeled, enumerate_trees
from domgame.families import (cartesian_product, complete, corona, cycle, direct_product, empty,
                              family_F, family_G, generalized_corona, path, paw, star)
from domgame.game import Player, Variant, solve
from domgame.graph import GraphError, build_graph


def spider(legs, length):
    edges, nxt = [], 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return build_graph(nxt, edges)


class TestClassify:
    def test_f8(self):
        assert classify(family_F(2)) == ClassLabel(0, 4, 4)

    def test_c3_corona_times_k2(self):
        assert classify(direct_product(corona(cycle(3)), complete(2))) == ClassLabel(1, 6, 7)

    def test_g3(self):
        assert classify(family_G(3)) == ClassLabel(2, 5, 7)

    def test_paw_times_k2(self):
        assert classify(direct_product(paw(), complete(2))) == ClassLabel(0, 5, 5)

    def test_errors(self):
        with pytest.raises(GraphError):
            classify(complete(1))
        with pytest.raises(GraphError):
            classify(build_graph(4, [(0, 1), (2, 3)]))

    def test_to_dict(self):
        assert ClassLabel(2, 5, 7).to_dict() == {"gamma_cg": 5, "gamma_tcg": 7, "class": 2}

    def test_classification_error_carries_values(self):
        err = ClassificationError(path(3), 2, 5)
        assert err.gamma_tcg - err.gamma_cg == 3


class TestTrees:
    def test_values(self):
        assert tree_game_value(path(7)) == 5
        assert tree_game_value(star(6)) == 1
        assert tree_game_value(spider(3, 2)) == 4
        assert tree_game_value(complete(2)) == 1

    def test_classes(self):
        assert tree_class(path(4)) == 1
        assert tree_class(path(5)) == 0
        assert tree_class(star(5)) == 1

    def test_errors(self):
        with pytest.raises(GraphError):
            tree_game_value(cycle(4))
        with pytest.raises(GraphError):
            tree_class(path(2))

    @pytest.mark.parametrize("n", range(3, 8))
    def test_against_solver(self, n):
        for T in enumerate_trees(n):
            label = classify(T)
            assert tree_game_value(T) == label.gamma_cg
            assert tree_class(T) == label.cls
            assert label.cls != 2

    def test_class1_trees_are_coronas(self):
        # corona of a tree by edgeless graphs is Class 1
        for base in (path(2), path(3), star(4)):
            T = generalized_corona(base, [empty(1 + i % 2) for i in range(base.n)])
            assert tree_class(T) == 1
            assert classify(T).cls == 1


class TestVerifiers:
    def test_theorem3(self):
        r = verify_theorem3(family_G(3))
        assert r.holds and r.observed["gamma_tcg"] - r.observed["gamma_cg"] == 2
        r = verify_theorem3(complete(2))
        assert r.holds and (r.observed["gamma_cg"], r.observed["gamma_tcg"]) == (1, 2)

    def test_prop2(self):
        r = verify_prop2(star(5))
        assert r.holds and r.observed["gamma_tcg"] == 2 and r.observed["gamma_c"] == 1
        r = verify_prop2(family_G(4))
        assert r.holds and (r.observed["gamma_c"], r.observed["gamma_tcg"]) == (7, 9)
        assert verify_prop2(cycle(6)).holds

    def test_prop4(self):
        r = verify_prop4(cartesian_product(path(3), path(3)))
        assert r.holds and r.observed["non_inclusive"] and r.observed["class"] == 0
        r = verify_prop4(family_F(2))
        assert r.holds and not r.observed["non_inclusive"]
        assert classify(family_F(2)).cls == 0
        assert verify_prop4(star(4)).holds

    def test_prop6(self):
        K1, K2 = complete(1), complete(2)
        r = verify_prop6(complete(2), [K1, K1])
        assert r.holds and (r.observed["gamma_cg"], r.observed["gamma_tcg"]) == (2, 3)
        r = verify_prop6(cycle(3), [K1] * 3)
        assert (r.observed["gamma_cg"], r.observed["gamma_tcg"]) == (3, 4)
        r = verify_prop6(path(3), [K2, K1, K2])
        assert (r.observed["gamma_cg"], r.observed["gamma_tcg"]) == (3, 4)

    @pytest.mark.parametrize("name,base,hs", corona_cases())
    def test_prop6_cases(self, name, base, hs):
        assert verify_prop6(base, hs).holds

    def test_prop8(self):
        r3 = verify_prop8(3)
        assert r3.holds and r3.observed["gamma_c"] == 5 and r3.observed["min_cds_count"] == 1
        r4 = verify_prop8(4)
        assert r4.holds and (r4.observed["gamma_cg"], r4.observed["gamma_tcg"]) == (7, 9)
        with pytest.raises(GraphError):
            verify_prop8(2)

    def test_cor5a(self):
        assert verify_cor5a(path(2), cycle(5)).holds

    def test_tree_verifier(self):
        assert verify_tree(path(5)).holds

    def test_failure_carries_counterexample(self):
        r = VerificationResult("x", False, (path(2), {"a": 1}))
        assert r.to_dict()["counterexample"]["graph"] == "A_"
        with pytest.raises(ValueError):
            VerificationResult("x", False)
        with pytest.raises(ValueError):
            VerificationResult("x", True, (path(2), {}))


class TestScans:
    def test_theorem_scan_n5(self):
        batches = list(scan_theorems(enumerate_connected_labeled(5)))
        assert len(batches) == 728
        assert all(r.holds for b in batches for r in b)

    def test_problem3_skips_complete(self):
        assert scan_problem3([complete(4)]) == []

    def test_problem3_path4(self):
        (r,) = scan_problem3([path(4)])
        assert r.observed["gamma_cg_s"] == solve(path(4), Variant.CONNECTED, Player.STALLER)
        assert r.observed["gamma_tcg_s"] == solve(path(4), Variant.TOTAL, Player.STALLER)

    def test_problem3_summary(self):
        results = scan_problem3(enumerate_connected_labeled(4))
        summary = problem3_summary(results)
        assert summary["compared"] == 38 - 1
        assert summary["equal"] + len(summary["counterexamples"]) == summary["compared"]

    def test_problem1_g3(self):
        hist = scan_problem1([family_G(3)])
        assert hist == {5: {"counts": {7: 1}, "hit": [7], "missed": [5, 6, 8, 9], "outside": []}}

    def test_problem1_trees_low_end(self):
        # Class 0 trees sit on the lower bound gamma_tcg = gamma_c = n - leaves
        trees = [T for T in enumerate_trees(6) if tree_class(T) == 0]
        hist = scan_problem1(trees)
        assert hist
        for gc, row in hist.items():
            assert row["outside"] == []
            assert list(row["counts"]) == [gc]

    def test_workers_match_serial(self):
        graphs = list(enumerate_connected_labeled(4))
        serial = [[r.to_dict() for r in b] for b in scan_theorems(graphs, workers=1)]
        parallel = [[r.to_dict() for r in b] for b in scan_theorems(graphs, workers=2)]
        assert serial == parallel
        assert [r.to_dict() for r in scan_problem3(graphs, 1)] == [r.to_dict() for r in scan_problem3(graphs, 2)]

    def test_reversed_order_matches(self):
        graphs = list(enumerate_connected_labeled(5))
        a = [[r.to_dict() for r in b] for b in scan_theorems(graphs)]
        b = [[r.to_dict() for r in b] for b in scan_theorems(graphs, reverse=True)]
        assert a == b


def test_regression_claims_fast_subset():
    for name, check in regression_claims(slow=False):
        r = check()
        assert r.holds, (name, r.to_dict())


@pytest.mark.slow
def test_c5_box_c5_class0():
    G = cartesian_product(cycle(5), cycle(5))
    assert classify(G) == ClassLabel(0, 12, 12)
