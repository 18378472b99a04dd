import json
from fractions import Fraction

import pytest

import pebbling
from pebbling import families


def test_graph_basics():
    g = pebbling.Graph(3, [(0, 1), (1, 2), (0, 1)])
    assert g.order == 3
    assert g.edge_count == 2
    assert g.edges() == [(0, 1), (1, 2)]
    assert pebbling.Graph.from_edge_list(g.to_edge_list()) == g
    assert pebbling.eccentricity(families.path(4), 0) == 3
    with pytest.raises(pebbling.PebblingError):
        pebbling.Graph(1, [(0, 0)])


def test_families():
    p = families.petersen()
    assert (p.order, p.edge_count) == (10, 15)
    b4 = families.bruhat(4)
    assert (b4.order, b4.edge_count) == (24, 36)
    assert families.tree([-1, 0, 0, 1, 1, 2, 2]).edge_count == 6


def test_solver():
    c5 = families.cycle(5)
    solvable, moves = pebbling.is_solvable(c5, [0, 0, 3, 2, 0], 0)
    assert solvable and moves
    assert pebbling.is_solvable(c5, [0, 0, 1, 0, 0], 0) == (False, None)
    value, critical = pebbling.pi_rooted(c5, 0)
    assert value == 5 and sum(critical) == 4
    assert pebbling.pi_graph(families.path(4))[0] == 8
    assert pebbling.max_unsolvable(families.complete(4), 0) == (3, [0, 1, 1, 1])
    with pytest.raises(pebbling.CapExceededError):
        pebbling.pi_rooted(families.petersen(), 0, max_configs=5)


def test_strategies_and_bounds():
    pet = families.petersen()
    doc = pebbling.generate_strategies(pet, 0, "greedy")
    report = pebbling.bound(pet, 0, doc)
    assert report["ratio_bound"] == 10
    assert report["lp_bound"] <= report["ratio_bound"]
    assert isinstance(report["lp_value"], Fraction)
    assert json.loads(doc)["root"] == 0
    assert pebbling.ratio_bound_from(6, 395) == 66
    with pytest.raises(pebbling.CoverageError):
        pebbling.generate_strategies(families.path(3), 0, "paths", max_length=1)
    per_root, overall = pebbling.bound_graph(families.cycle(6), "paths")
    assert len(per_root) == 6 and overall >= 8


def test_lp():
    status, value, point = pebbling.solve_lp([1, 1], [([2, 1], 3)])
    assert status == "optimal"
    assert value == 3
    assert point == [0, 3]
    status, value, point = pebbling.solve_lp([Fraction(1, 2)], [([Fraction(3, 2)], 1)])
    assert value == Fraction(1, 3)
    assert pebbling.solve_lp([1], [])[0] == "unbounded"


def test_trees():
    t = families.tree([-1, 0, 0, 1, 1, 2, 2])
    assert pebbling.pi_tree(t, 0) == 9
    assert pebbling.path_partition(t, 0) == [[3, 1, 0], [4, 1], [5, 2, 0], [6, 2]]
    with pytest.raises(pebbling.PebblingError):
        pebbling.pi_tree(families.cycle(4), 0)
