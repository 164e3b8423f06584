import io
import itertools
import random
import re

import pytest

from conftest import (
    agg_from_pairs,
    assert_partition,
    assert_stc_feasible,
    random_aggregated_graph,
)
from stcstream import (
    AggregatedGraph,
    stc_exact,
    stc_highdeg,
    stc_matching,
    stc_pricing,
    write_ilp,
)
from stcstream.errors import CapExceededError

ALL_SOLVERS = [stc_pricing, stc_exact, stc_matching, stc_highdeg]


class TestFourNodeExample:
    def test_pricing(self, four_node_example):
        labeling = stc_pricing(four_node_example)
        assert labeling.weak == {(1, 2), (1, 3)}
        assert labeling.strong == {(0, 1), (2, 3)}
        assert labeling.weak_weight == 2

    def test_exact_weighted(self, four_node_example):
        labeling = stc_exact(four_node_example)
        assert labeling.weak_weight == 2
        assert labeling.strong == {(0, 1), (2, 3)}

    def test_exact_unweighted(self, four_node_example):
        labeling = stc_exact(four_node_example, unweighted=True)
        assert labeling.weak == {(0, 1)}
        assert labeling.n_strong == 3

    def test_matching(self, four_node_example):
        labeling = stc_matching(four_node_example)
        assert labeling.weak == {(0, 1), (1, 2)}
        # the unmatched wedge edge is still covered by the matched (0,1)
        assert_stc_feasible(four_node_example, labeling.strong)

    def test_highdeg(self, four_node_example):
        labeling = stc_highdeg(four_node_example)
        assert labeling.weak == {(0, 1)}


class TestSmallCases:
    def test_edgeless_graph_is_all_strong(self):
        agg = AggregatedGraph()
        for solve in ALL_SOLVERS:
            labeling = solve(agg)
            assert labeling.weak == frozenset()
            assert labeling.strong == frozenset()

    def test_triangle_is_all_strong(self):
        agg = agg_from_pairs({(0, 1): 3, (1, 2): 1, (0, 2): 2})
        for solve in ALL_SOLVERS:
            labeling = solve(agg)
            assert labeling.weak == frozenset(), solve.__name__
            assert labeling.n_strong == 3

    def test_single_wedge_exact_picks_lighter_edge(self):
        agg = agg_from_pairs({(0, 1): 5, (1, 2): 3})
        labeling = stc_exact(agg)
        assert labeling.weak == {(1, 2)}
        assert labeling.weak_weight == 3

    def test_single_wedge_matching_marks_both(self):
        agg = agg_from_pairs({(0, 1): 5, (1, 2): 3})
        labeling = stc_matching(agg)
        assert labeling.weak == {(0, 1), (1, 2)}

    def test_single_wedge_highdeg_marks_one(self):
        agg = agg_from_pairs({(0, 1): 5, (1, 2): 3})
        labeling = stc_highdeg(agg)
        assert len(labeling.weak) == 1

    def test_star_wedge_graph_highdeg_takes_the_center(self):
        # edge (0,1) sits in a wedge with every (1,i); the (i,j) triangle
        # edges keep the spokes from forming wedges of their own, so the
        # wedge graph is a star centered on (0,1)
        agg = agg_from_pairs(
            {(0, 1): 1, (1, 2): 1, (1, 3): 1, (1, 4): 1, (2, 3): 1, (2, 4): 1, (3, 4): 1}
        )
        labeling = stc_highdeg(agg)
        assert labeling.weak == {(0, 1)}

    def test_star_aggregated_graph_wedge_clique(self):
        # the wedge graph of a star is a clique on its spokes
        agg = agg_from_pairs({(0, i): 1 for i in range(1, 5)})
        labeling = stc_highdeg(agg)
        assert_stc_feasible(agg, labeling.strong)
        assert labeling.n_weak == 3  # clique on 4 vertices needs 3

    def test_oracle_cap_propagates(self, four_node_example):
        with pytest.raises(CapExceededError):
            stc_exact(four_node_example, cap=3)


@pytest.mark.parametrize("seed", range(10))
def test_every_solver_output_is_feasible_and_a_partition(seed):
    rng = random.Random(seed)
    agg = random_aggregated_graph(rng, n_nodes=rng.randint(3, 9), n_edges=rng.randint(1, 14))
    for solve in ALL_SOLVERS:
        labeling = solve(agg)
        assert_partition(agg, labeling)
        assert_stc_feasible(agg, labeling.strong)


@pytest.mark.parametrize("seed", range(25))
def test_pricing_weak_weight_within_twice_exact(seed):
    rng = random.Random(1000 + seed)
    agg = random_aggregated_graph(rng, n_nodes=rng.randint(3, 8), n_edges=rng.randint(1, 12))
    approx = stc_pricing(agg)
    exact = stc_exact(agg)
    assert approx.weak_weight <= 2 * exact.weak_weight


@pytest.mark.parametrize("seed", range(30))
def test_exact_dominance_between_objectives(seed):
    rng = random.Random(500 + seed)
    agg = random_aggregated_graph(rng, n_nodes=rng.randint(3, 8), n_edges=rng.randint(1, 12))
    weighted = stc_exact(agg)
    unweighted = stc_exact(agg, unweighted=True)
    assert weighted.strong_weight >= unweighted.strong_weight
    assert unweighted.n_strong >= weighted.n_strong


# -- ILP export --------------------------------------------------------------

EXPECTED_MIN_MODEL = """Minimize
 obj: 10 y_0_1 + 1 y_1_2 + 1 y_1_3 + 2 y_2_3
Subject To
 w1: y_0_1 + y_1_2 >= 1
 w2: y_0_1 + y_1_3 >= 1
Bounds
 0 <= y_0_1 <= 1
 0 <= y_1_2 <= 1
 0 <= y_1_3 <= 1
 0 <= y_2_3 <= 1
Binary
 y_0_1 y_1_2 y_1_3 y_2_3
End
"""


def parse_lp_model(text: str):
    """Minimal LP reader for round-trip checks: objective terms, constraints,
    binary variables, and the optimization sense."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    sense = lines[0].lower()
    objective = {}
    constraints = []
    variables = []
    section = None
    for line in lines:
        low = line.lower()
        if low in ("maximize", "minimize"):
            section = "obj"
            continue
        if low == "subject to":
            section = "st"
            continue
        if low == "bounds":
            section = "bounds"
            continue
        if low == "binary":
            section = "bin"
            continue
        if low == "end":
            break
        if section == "obj":
            body = line.split(":", 1)[1]
            pattern = r"([0-9]+(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?)\s+(\w+)"
            for coef, name in re.findall(pattern, body):
                objective[name] = float(coef)
        elif section == "st":
            body = line.split(":", 1)[1]
            match = re.match(r"\s*(\w+)\s*\+\s*(\w+)\s*(<=|>=)\s*1", body)
            constraints.append((match.group(1), match.group(2), match.group(3)))
        elif section == "bin":
            variables.extend(line.split())
    return sense, objective, constraints, variables


def solve_01_program(sense, objective, constraints, variables):
    """Brute-force the exported 0/1 program over all assignments."""
    best = None
    for bits in itertools.product((0, 1), repeat=len(variables)):
        assignment = dict(zip(variables, bits))
        feasible = True
        for a, b, op in constraints:
            total = assignment[a] + assignment[b]
            if (op == "<=" and total > 1) or (op == ">=" and total < 1):
                feasible = False
                break
        if not feasible:
            continue
        value = sum(objective.get(v, 0.0) * x for v, x in assignment.items())
        if best is None:
            best = value
        elif sense == "minimize":
            best = min(best, value)
        else:
            best = max(best, value)
    return best


class TestIlpExport:
    def test_min_model_text(self, four_node_example):
        out = io.StringIO()
        write_ilp(four_node_example, "min", out)
        assert out.getvalue() == EXPECTED_MIN_MODEL

    def test_max_model_uses_x_and_le(self, four_node_example):
        out = io.StringIO()
        write_ilp(four_node_example, "max", out)
        text = out.getvalue()
        assert text.startswith("Maximize")
        assert "x_0_1 + x_1_2 <= 1" in text
        assert "y_" not in text

    def test_triangle_has_no_constraints(self):
        agg = agg_from_pairs({(0, 1): 1, (1, 2): 1, (0, 2): 1})
        out = io.StringIO()
        write_ilp(agg, "min", out)
        sense, objective, constraints, variables = parse_lp_model(out.getvalue())
        assert constraints == []
        assert len(variables) == 3
        assert solve_01_program(sense, objective, constraints, variables) == 0

    def test_bad_direction(self, four_node_example):
        with pytest.raises(ValueError):
            write_ilp(four_node_example, "both", io.StringIO())

    def test_min_round_trip_on_example(self, four_node_example):
        out = io.StringIO()
        write_ilp(four_node_example, "min", out)
        value = solve_01_program(*parse_lp_model(out.getvalue()))
        assert value == 2

    @pytest.mark.parametrize("seed", range(12))
    def test_min_round_trip_random(self, seed):
        rng = random.Random(3000 + seed)
        agg = random_aggregated_graph(rng, n_nodes=rng.randint(3, 7), n_edges=rng.randint(1, 9))
        out = io.StringIO()
        write_ilp(agg, "min", out)
        value = solve_01_program(*parse_lp_model(out.getvalue()))
        assert value == stc_exact(agg).weak_weight

    @pytest.mark.parametrize("seed", range(6))
    def test_max_and_min_agree_on_total_weight(self, seed):
        rng = random.Random(4000 + seed)
        agg = random_aggregated_graph(rng, n_nodes=rng.randint(3, 7), n_edges=rng.randint(1, 9))
        out_min, out_max = io.StringIO(), io.StringIO()
        write_ilp(agg, "min", out_min)
        write_ilp(agg, "max", out_max)
        best_min = solve_01_program(*parse_lp_model(out_min.getvalue()))
        best_max = solve_01_program(*parse_lp_model(out_max.getvalue()))
        total = sum(agg.weights.values())
        assert best_min + best_max == total
