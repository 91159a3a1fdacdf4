import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majority_illusion import (
    Color,
    ColoredGraph,
    PreconditionError,
    Winner,
    all_red,
    classify_network,
    coloring_from_string,
    complete_graph,
    odd_degree_swap_upgrade,
    cycle_graph,
    illusion_coloring,
    is_weak_majority_coloring,
    majority_winner,
    make_graph,
    monochromatic_count,
    proper_2_coloring,
    strict_illusion_from_proper,
    weak_majority_2_coloring,
    weak_majority_2_coloring_swaps,
)

from conftest import colored_graphs, graphs

R, B = Color.RED, Color.BLUE


def test_majority_winner_basic():
    assert majority_winner([R, R, B]) is Winner.RED
    assert majority_winner([R, B]) is Winner.TIE
    assert majority_winner([]) is Winner.TIE
    assert majority_winner([B, B, B]) is Winner.BLUE


def test_monochromatic_count_examples():
    triangle = make_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert monochromatic_count(ColoredGraph(triangle, (R, R, R))) == (3, 0)
    edge = make_graph(2, [(0, 1)])
    assert monochromatic_count(ColoredGraph(edge, (R, B))) == (0, 1)
    c4 = cycle_graph(4)
    assert monochromatic_count(ColoredGraph(c4, coloring_from_string("RBRB"))) == (0, 4)


def test_swap_loop_on_monochromatic_triangle():
    triangle = make_graph(3, [(0, 1), (1, 2), (2, 0)])
    colors, swaps = weak_majority_2_coloring_swaps(triangle, all_red(3))
    assert swaps == 1
    assert colors == (B, R, R)  # lowest-id violator flips first
    assert is_weak_majority_coloring(triangle, colors)


def test_swap_loop_keeps_already_balanced_coloring():
    c4 = cycle_graph(4)
    initial = coloring_from_string("RBRB")
    colors, swaps = weak_majority_2_coloring_swaps(c4, initial)
    assert swaps == 0
    assert colors == initial


def test_swap_loop_ignores_edgeless_graph():
    g = make_graph(3, [])
    initial = (R, B, R)
    assert weak_majority_2_coloring(g, initial) == initial


def test_swap_loop_rejects_partial_initial():
    with pytest.raises(PreconditionError):
        weak_majority_2_coloring(cycle_graph(4), (R, B))


def test_swap_loop_honors_node_order():
    triangle = make_graph(3, [(0, 1), (1, 2), (2, 0)])
    colors, swaps = weak_majority_2_coloring_swaps(
        triangle, all_red(3), node_order=[2, 1, 0]
    )
    assert swaps == 1
    assert colors == (R, R, B)


def test_swap_loop_rejects_bad_node_order():
    with pytest.raises(PreconditionError, match="permutation"):
        weak_majority_2_coloring(cycle_graph(4), node_order=[0, 0, 1, 2])


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_swap_loop_postcondition_any_start(g, rng):
    initial = tuple(rng.choice((R, B)) for _ in range(g.n))
    mono_start = sum(
        1 for u, v in g.edges if initial[u] is initial[v]
    )
    seen = []
    colors, swaps = weak_majority_2_coloring_swaps(
        g, initial, on_swap=lambda node, mono: seen.append(mono)
    )
    assert is_weak_majority_coloring(g, colors)
    assert swaps <= mono_start <= g.edge_count
    # monotone progress: the monochromatic total strictly decreases
    assert all(b < a for a, b in zip([mono_start] + seen, seen))


def test_illusion_coloring_on_complete_4():
    cg = illusion_coloring(complete_graph(4))
    assert sorted(c.value for c in cg.colors) == ["B", "B", "R", "R"]
    report = classify_network(cg)
    assert report.weak_count == 4
    assert report.unanimity_weak_majority


def test_illusion_coloring_on_cycle_4():
    cg = illusion_coloring(cycle_graph(4))
    assert cg.colors in (coloring_from_string("RBRB"), coloring_from_string("BRBR"))
    assert cg.global_winner is Winner.TIE
    for i in range(4):
        assert cg.local_winner(i) is Winner.of(cg.colors[i].other)


def test_illusion_coloring_single_node():
    g = make_graph(1, [])
    cg = illusion_coloring(g)
    assert cg.local_winner(0) is Winner.TIE
    assert cg.global_winner is not Winner.TIE
    assert classify_network(cg).majority_weak_majority


def test_illusion_coloring_requires_a_node():
    with pytest.raises(PreconditionError):
        illusion_coloring(make_graph(0, []))


@settings(max_examples=60)
@given(graphs(max_n=9))
def test_illusion_coloring_beats_half_everywhere(g):
    cg = illusion_coloring(g)
    assert classify_network(cg).majority_weak_majority
    assert is_weak_majority_coloring(g, cg.colors)


def test_proper_coloring_even_cycle():
    assert proper_2_coloring(cycle_graph(4)) == coloring_from_string("RBRB")
    assert proper_2_coloring(cycle_graph(6)) == coloring_from_string("RBRBRB")


def test_proper_coloring_odd_cycle_fails():
    assert proper_2_coloring(cycle_graph(3)) is None


def test_proper_coloring_roots_each_component_red():
    g = make_graph(4, [(0, 1), (2, 3)])
    assert proper_2_coloring(g) == (R, B, R, B)


def test_strict_from_proper_on_odd_path():
    path5 = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    cg = strict_illusion_from_proper(path5)
    assert cg is not None
    assert classify_network(cg).majority_majority


def test_strict_from_proper_balanced_biclique_swaps():
    k33 = make_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
    cg = strict_illusion_from_proper(k33)
    assert cg is not None
    report = classify_network(cg)
    assert report.strict_count == 3
    assert report.weak_majority_majority


def test_strict_from_proper_rejects_low_degree_neighbors():
    assert strict_illusion_from_proper(cycle_graph(4)) is None


def test_strict_from_proper_rejects_odd_cycles():
    assert strict_illusion_from_proper(cycle_graph(3)) is None


def test_swap_upgrade_on_balanced_biclique():
    k33 = make_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
    cg = ColoredGraph(k33, coloring_from_string("RRRBBB"))
    out = odd_degree_swap_upgrade(cg)
    assert out is not None
    report = classify_network(out)
    assert 2 * report.strict_count >= 6
    assert report.weak_majority_majority


def test_swap_upgrade_needs_margin_two():
    edge = make_graph(2, [(0, 1)])
    assert odd_degree_swap_upgrade(ColoredGraph(edge, (R, B))) is None


def test_swap_upgrade_rejects_even_degrees():
    cg = ColoredGraph(cycle_graph(4), coloring_from_string("RBRB"))
    with pytest.raises(PreconditionError, match="odd"):
        odd_degree_swap_upgrade(cg)


def test_swap_upgrade_rejects_unbalanced_global():
    claw = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    cg = ColoredGraph(claw, (R, B, B, B))  # weak coloring, blue global winner
    with pytest.raises(PreconditionError, match="tied"):
        odd_degree_swap_upgrade(cg)


def test_swap_upgrade_rejects_own_majority_coloring():
    edge = make_graph(2, [(0, 1)])
    with pytest.raises(PreconditionError, match="weak majority"):
        odd_degree_swap_upgrade(ColoredGraph(edge, (R, R)))


def test_swap_upgrade_after_illusion_coloring_on_odd_graphs():
    import random

    from conftest import odd_degree_graph

    rng = random.Random(23)
    upgraded = 0
    for _ in range(40):
        g = odd_degree_graph(rng, rng.choice((6, 8, 10, 12)), rng.choice((1, 3, 5)))
        cg = illusion_coloring(g)
        if cg.global_winner is not Winner.TIE:
            continue
        out = odd_degree_swap_upgrade(cg)
        if out is not None:
            assert classify_network(out).weak_majority_majority
            upgraded += 1
    assert upgraded > 0


def test_strict_from_proper_raises_on_degenerate_isolated_nodes():
    # isolated majority-colored nodes see a tie, so the claimed strict count
    # cannot be met; the defect surfaces instead of returning a wrong label
    from majority_illusion import InternalInvariantError

    g = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(InternalInvariantError):
        strict_illusion_from_proper(g)


@given(colored_graphs(max_n=8))
def test_color_swap_preserves_edge_chromaticity(cg):
    assert monochromatic_count(cg) == monochromatic_count(cg.with_inverted())


@given(graphs(max_n=8))
def test_illusion_coloring_deterministic(g):
    assert illusion_coloring(g).colors == illusion_coloring(g).colors
