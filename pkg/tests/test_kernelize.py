from __future__ import annotations

import random
from fractions import Fraction

import pytest

from bgraph.graph import Graph, is_independent
from bgraph.kernelize import (
    CliqueFoundError,
    FriendlyOracle,
    OracleIntegrityError,
    find_clique,
    kernelize,
    marking_bound,
    oracle_degenerate,
    oracle_krfree,
)
from helpers_brute import (
    brute_param_one_extendable,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    random_degenerate_graph,
    random_graph,
)


def test_degenerate_oracle_bounds():
    rng = random.Random(71)
    g = random_degenerate_graph(rng, 20, 3)
    oracle = oracle_degenerate()
    found = oracle.extract(g)
    assert is_independent(g, found)
    assert len(found) >= 20 * oracle.t_for(g)
    assert len(found) >= 5  # t >= 1/4 when degeneracy <= 3

    assert len(oracle.extract(empty_graph(6))) == 6
    assert len(oracle.extract(complete_graph(4))) == 1


def test_degenerate_oracle_bound_on_random_graphs():
    rng = random.Random(72)
    oracle = oracle_degenerate()
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 14), 0.3)
        t = oracle.t_for(g)
        found = oracle.extract(g)
        assert is_independent(g, found)
        assert len(found) >= t * g.n


def test_krfree_oracle_examples():
    oracle = oracle_krfree(3)
    found = oracle.extract(cycle_graph(5))
    assert is_independent(cycle_graph(5), found)
    assert len(found) == 2  # floor(sqrt(5)) = 2 needed, alpha(C5) = 2

    assert len(oracle.extract(empty_graph(9))) == 9

    pet = petersen_graph()
    oracle.precheck(pet)  # triangle-free
    found = oracle.extract(pet)
    assert is_independent(pet, found)
    assert len(found) >= 3  # floor(sqrt(10)) = 3


def test_krfree_rejects_cliques():
    with pytest.raises(CliqueFoundError) as info:
        oracle_krfree(3).precheck(complete_graph(3))
    assert len(info.value.clique) == 3
    # K4-free check passes on a triangle
    oracle_krfree(4).precheck(complete_graph(3))
    with pytest.raises(ValueError):
        oracle_krfree(2)


def test_find_clique():
    assert find_clique(path_graph(4), 3) is None
    assert find_clique(complete_graph(5), 4) is not None
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    assert find_clique(g, 3) == (0, 1, 2)


def test_krfree_bound_on_random_triangle_free():
    rng = random.Random(73)
    oracle = oracle_krfree(3)
    count = 0
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 12), 0.25)
        if find_clique(g, 3) is not None:
            continue
        count += 1
        found = oracle.extract(g)
        assert is_independent(g, found)
        assert (len(found) + 1) ** 2 > g.n  # floor bound
    assert count >= 10


def test_kernelize_small_instance_returned_unchanged():
    g = path_graph(4)
    oracle = oracle_degenerate()
    # threshold = k/t = 2 * (1+1) = 4 > n is false; use k large enough
    out, trace = kernelize(g, 3, oracle)
    assert trace.rounds == 0
    assert out.n == 4 and out.edges() == g.edges()
    assert trace.layers == () and trace.residue == (0, 1, 2, 3)


def test_kernelize_k1():
    rng = random.Random(74)
    g = random_degenerate_graph(rng, 12, 2)
    out, trace = kernelize(g, 1, oracle_degenerate())
    assert brute_param_one_extendable(out, 1)
    assert brute_param_one_extendable(g, 1)


def test_kernelize_equivalence_random_2_degenerate():
    rng = random.Random(75)
    oracle = oracle_degenerate()
    shrunk = 0
    for _ in range(15):
        g = random_degenerate_graph(rng, rng.randint(10, 22), 2)
        for k in (2, 3):
            out, trace = kernelize(g, k, oracle)
            assert brute_param_one_extendable(g, k) == brute_param_one_extendable(out, k)
            if out.n < g.n:
                shrunk += 1
    assert shrunk >= 3


def test_kernelize_trace_invariants():
    rng = random.Random(76)
    oracle = oracle_degenerate()
    for _ in range(10):
        g = random_degenerate_graph(rng, 30, 2)
        k = 3
        out, trace = kernelize(g, k, oracle)
        bound = marking_bound(k, trace.t, trace.inv_c)
        for count in trace.marked_per_round:
            assert count <= bound
        if trace.rounds:
            # layers plus residue partition that round's vertex set
            seen: set[int] = set(trace.residue)
            total = len(trace.residue)
            for layer in trace.layers:
                seen.update(layer)
                total += len(layer)
                assert is_independent(g, layer)
            assert total == len(seen)
            for layer in trace.layers[1:]:
                assert len(layer) >= k
            assert len(trace.residue) < trace.threshold
            assert set(trace.removed) <= set(trace.layers[0])
            assert not set(trace.removed) & set(trace.marked)
        # terminal bound: if the rule stopped by marking everything,
        # t * n^c cannot exceed the marking bound
        if trace.rounds and not trace.removed:
            assert (bound / trace.t) ** trace.inv_c >= out.n


def test_kernelize_krfree_equivalence():
    rng = random.Random(77)
    oracle = oracle_krfree(3)
    done = 0
    for _ in range(30):
        g = random_graph(rng, rng.randint(8, 14), 0.2)
        if find_clique(g, 3) is not None:
            continue
        done += 1
        out, _ = kernelize(g, 2, oracle)
        assert brute_param_one_extendable(g, 2) == brute_param_one_extendable(out, 2)
    assert done >= 8


def test_oracle_integrity_error_fires_on_broken_oracle():
    broken = FriendlyOracle(
        name="broken",
        inv_c=1,
        t_for=lambda g: Fraction(1),  # claims an IS of size n, absurd
        extract=lambda g: (0,) if g.n else (),
        precheck=lambda g: None,
    )
    with pytest.raises(OracleIntegrityError):
        kernelize(path_graph(6), 2, broken)


def test_kernelize_rejects_bad_k():
    with pytest.raises(ValueError):
        kernelize(path_graph(3), 0, oracle_degenerate())
