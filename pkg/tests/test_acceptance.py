"""Acceptance suite: one test per criterion, each printing a PASS line.

Every expected value is either pinned from an independent small-scale
computation (enumeration, direct counting) or asserted against the
brute-force oracle; tolerances are exact throughout.
"""

import random
import time
from fractions import Fraction

from majority_illusion import (
    Color,
    ColoredGraph,
    IllusionKind,
    Level,
    Objective,
    Winner,
    agent_statuses,
    best_coloring,
    classify_network,
    complete_pq_feasible,
    construct_regular_illusion,
    cycle_graph,
    complete_graph,
    enumerate_regular,
    extension,
    fast_construct,
    illusion_coloring,
    illusion_possible,
    is_weak_majority_coloring,
    make_graph,
    model_from_colored_graph,
    q_illusion,
    regular_exists,
    regular_necessary,
    weak_majority_2_coloring_swaps,
    weak_q_illusion,
)
from majority_illusion.feasibility import Strictness
from majority_illusion.logic import (
    AGENT_MAJORITY_ILLUSION,
    AGENT_MAJORITY_OPPOSITION,
    AGENT_WEAK_MAJORITY_ILLUSION,
    AGENT_WEAK_MAJORITY_OPPOSITION,
    Atom,
    GlobalMajority,
    NeighborMajority,
    Not,
    WeakGlobalMajority,
    WeakNeighborMajority,
    illusion_formula,
    parse_formula,
)

from conftest import all_colorings, atlas_connected, odd_degree_graph, random_graph


def _report(number: int, started: float, budget: float, detail: str) -> None:
    elapsed = time.monotonic() - started
    assert elapsed < budget, f"criterion {number} exceeded {budget}s ({elapsed:.1f}s)"
    print(f"[acceptance] criterion {number}: PASS ({elapsed:.1f}s) {detail}")


def test_criterion_1_every_graph_admits_majority_weak_majority():
    started = time.monotonic()
    corpus = list(atlas_connected(6))
    assert sum(1 for g in corpus if g.n == 6) == 112
    rng = random.Random(1)
    corpus += [
        random_graph(rng, rng.randint(1, 12), rng.choice((0.15, 0.3, 0.5, 0.8)))
        for _ in range(200)
    ]
    for g in corpus:
        cg = illusion_coloring(g)
        assert classify_network(cg).majority_weak_majority
        assert illusion_possible(g, IllusionKind.MAJORITY_WEAK_MAJORITY)
    _report(1, started, 120, f"{len(corpus)} graphs (112 connected on 6 nodes)")


def test_criterion_2_swap_loop_contract_on_large_random_graphs():
    started = time.monotonic()
    rng = random.Random(2)
    for trial in range(500):
        n = rng.randint(2, 200)
        p = rng.choice((2.0 / n, 0.05, 0.2, 0.5))
        g = random_graph(rng, n, p)
        initial = tuple(rng.choice((Color.RED, Color.BLUE)) for _ in range(n))
        colors, swaps = weak_majority_2_coloring_swaps(g, initial)
        assert swaps <= g.edge_count
        assert is_weak_majority_coloring(g, colors)
    _report(2, started, 60, "500 graphs up to 200 nodes")


def test_criterion_3_small_regular_cases_admit_no_strict_majority_illusion():
    started = time.monotonic()
    for n, k in ((6, 4), (6, 3)):
        assert not regular_necessary(n, k, Strictness.STRICT).possible
        assert not regular_exists(n, k).possible
        graphs = 0
        for g in enumerate_regular(n, k):
            graphs += 1
            _, strict = best_coloring(g, Objective.MAX_STRICT_ILLUSION)
            assert 2 * strict <= n  # no coloring reaches a strict majority
        assert graphs == {(6, 4): 15, (6, 3): 70}[(n, k)]
    _report(3, started, 60, "all labeled 4- and 3-regular graphs on 6 nodes")


def test_criterion_4_construction_covers_every_feasible_pair():
    started = time.monotonic()
    built = 0
    for n in range(4, 25):
        for k in range(3, n):
            if (n * k) % 2 == 1:
                continue
            if not regular_exists(n, k).possible:
                continue
            cg = construct_regular_illusion(n, k)
            g = cg.graph
            assert g.n == n and g.is_regular(k)
            assert classify_network(cg).majority_majority
            built += 1
    reference = construct_regular_illusion(12, 6)
    reds = [i for i in range(12) if reference.colors[i] is Color.RED]
    assert len(reds) == 7
    assert all(
        sum(1 for j in reference.graph.adj[r] if reference.colors[j] is Color.BLUE) == 4
        for r in reds
    )
    _report(4, started, 60, f"{built} feasible (n, k) pairs up to n=24")


def _complete_illusion_counts(n: int, q: Fraction) -> tuple[int, int]:
    """Best strict / weak q-illusion agent counts over all 2^n colorings of
    the complete graph, evaluated from the definitions by bit counting."""
    best_strict = best_weak = 0
    for mask in range(1 << n):
        reds = mask.bit_count()
        strict = weak = 0
        for i in range(n):
            own_red = (mask >> i) & 1
            for local, total in (
                (reds - own_red, reds),  # red witness
                (n - 1 - (reds - own_red), n - reds),  # blue witness
            ):
                d = n - 1
                if local * q.denominator > q.numerator * d and (
                    total * q.denominator < q.numerator * n
                ):
                    strict += 1
                    break
        for i in range(n):
            own_red = (mask >> i) & 1
            for local, total in (
                (reds - own_red, reds),
                (n - 1 - (reds - own_red), n - reds),
            ):
                d = n - 1
                lo = local * q.denominator >= q.numerator * d
                hi = total * q.denominator <= q.numerator * n
                exact = (
                    local * q.denominator == q.numerator * d
                    and total * q.denominator == q.numerator * n
                )
                if lo and hi and not exact:
                    weak += 1
                    break
        best_strict = max(best_strict, strict)
        best_weak = max(best_weak, weak)
    return best_strict, best_weak


def test_criterion_5_complete_graph_feasibility_matches_brute_force():
    started = time.monotonic()
    thresholds = sorted(
        {Fraction(a, b) for b in range(1, 7) for a in range(0, b + 1)}
    )
    checked = 0
    for n in range(2, 11):
        for q in thresholds:
            best_strict, best_weak = _complete_illusion_counts(n, q)
            for p in thresholds:
                verdict = complete_pq_feasible(n, p, q)
                assert verdict.pq == (best_strict * p.denominator > p.numerator * n)
                assert verdict.weak_pq == (
                    best_strict * p.denominator >= p.numerator * n
                )
                assert verdict.p_weak_q == (
                    best_weak * p.denominator > p.numerator * n
                )
                assert verdict.weak_p_weak_q == (
                    best_weak * p.denominator >= p.numerator * n
                )
                checked += 4
        half = Fraction(1, 2)
        v = complete_pq_feasible(n, half, half)
        assert not v.pq and not v.weak_pq  # strict illusions never fit
        assert v.p_weak_q  # a one-node margin (or balanced split) always does
    _report(5, started, 120, f"{checked} flag comparisons on complete graphs")


def test_criterion_6_half_threshold_reduces_to_the_plain_definitions():
    started = time.monotonic()
    rng = random.Random(6)
    half = Fraction(1, 2)
    for trial in range(100):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.choice((0.2, 0.5, 0.8)))
        colors = tuple(rng.choice((Color.RED, Color.BLUE)) for _ in range(n))
        cg = ColoredGraph(g, colors)
        for status in agent_statuses(cg):
            strict = q_illusion(cg, status.node, half)
            weak = weak_q_illusion(cg, status.node, half)
            assert (strict is not None) == (status.illusion is Level.STRICT)
            assert (weak is not None) == (status.illusion is not Level.NONE)
            if weak is not None:
                assert weak is status.illusion_color
    _report(6, started, 30, "100 seeded colored graphs")


def test_criterion_7_odd_degree_outputs_split_into_the_two_strong_forms():
    started = time.monotonic()
    rng = random.Random(7)
    for trial in range(100):
        n = rng.choice((6, 8, 10, 12, 14))
        layers = rng.choice((1, 3, 5))
        g = odd_degree_graph(rng, n, layers)
        cg = illusion_coloring(g)
        report = classify_network(cg)
        if cg.global_winner is Winner.TIE:
            assert report.unanimity_weak_majority
            assert report.weak_count == n
        else:
            assert report.majority_majority
    _report(7, started, 30, "100 seeded odd-degree graphs")


def _ten_base_graphs():
    return [
        make_graph(1, []),
        make_graph(2, [(0, 1)]),
        make_graph(3, [(0, 1), (1, 2)]),
        make_graph(3, [(0, 1), (1, 2), (2, 0)]),
        cycle_graph(4),
        complete_graph(4),
        make_graph(4, [(0, 1), (0, 2), (0, 3)]),
        cycle_graph(5),
        complete_graph(5),
        make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]),
    ]


def test_criterion_8_model_checker_agrees_with_the_classifier():
    started = time.monotonic()
    agent_presets = {
        AGENT_MAJORITY_ILLUSION: lambda s: s.illusion is Level.STRICT,
        AGENT_WEAK_MAJORITY_ILLUSION: lambda s: s.illusion is not Level.NONE,
        AGENT_MAJORITY_OPPOSITION: lambda s: s.opposition is Level.STRICT,
        AGENT_WEAK_MAJORITY_OPPOSITION: lambda s: s.opposition is not Level.NONE,
    }
    network_kinds = (
        IllusionKind.MAJORITY_MAJORITY,
        IllusionKind.WEAK_MAJORITY_MAJORITY,
        IllusionKind.MAJORITY_WEAK_MAJORITY,
        IllusionKind.WEAK_MAJORITY_WEAK_MAJORITY,
    )
    pigeonhole = parse_formula("W p | W ~p")
    checked = 0
    for g in _ten_base_graphs():
        for colors in all_colorings(g.n):
            cg = ColoredGraph(g, colors)
            model = model_from_colored_graph(cg)
            statuses = agent_statuses(cg)
            report = classify_network(cg)
            for name, predicate in agent_presets.items():
                sat = extension(model, illusion_formula(name))
                assert sat == frozenset(
                    s.node for s in statuses if predicate(s)
                ), (name, colors)
            for kind in network_kinds:
                sat = extension(model, illusion_formula(kind))
                holds = len(sat) == g.n and g.n > 0
                assert holds == report.flag(kind), (kind, colors)
            # pigeonhole validity: one of the two colors fills half of any
            # neighborhood; duality: M / GM are the negated weak duals
            assert extension(model, pigeonhole) == frozenset(range(g.n))
            p = Atom("p")
            assert extension(model, NeighborMajority(p)) == extension(
                model, Not(WeakNeighborMajority(Not(p)))
            )
            assert extension(model, GlobalMajority(p)) == extension(
                model, Not(WeakGlobalMajority(Not(p)))
            )
            checked += 1
    _report(8, started, 120, f"{checked} colored graphs on 10 base graphs")


def test_criterion_9_fast_and_general_constructions_validate_alike():
    started = time.monotonic()
    cases = []
    for n in range(6, 23):
        if n % 4 != 2:
            continue
        for k in range(4, n):
            if k % 2 == 1 or n > 2 * k - 2:
                continue
            if not regular_exists(n, k).possible:
                continue
            cg = fast_construct(n, k)
            assert cg.graph.is_regular(k)
            assert classify_network(cg).majority_majority
            general = construct_regular_illusion(n, k)
            assert general.graph.is_regular(k)
            assert classify_network(general).majority_majority
            cases.append((n, k))
    assert cases == [
        (10, 6),
        (14, 8),
        (14, 10),
        (18, 10),
        (18, 12),
        (18, 14),
        (22, 12),
        (22, 14),
        (22, 16),
        (22, 18),
    ]
    _report(9, started, 30, f"{len(cases)} complete-bipartite-core pairs")
