import random
from itertools import product

import numpy as np
import pytest

from mvrcg import (IndependenceTriple, JointTable, MixedGraph, canonical_dag,
                   ci_holds, factorize_component_dag, factorize_mvr, global_model,
                   head_partition, sample_latent_dag_distribution,
                   validate_chain_graph, verify_factorization)
from mvrcg.enumeration import random_mvr_cg
from mvrcg.errors import CapExceeded, DisjointnessViolation
from mvrcg.factorization import Factorization, HeadTail

from oracles import oracle_ancestors, oracle_ci, powerset

T = IndependenceTriple.of


def table_of(variables, probs):
    arr = np.asarray(probs, dtype=float)
    return JointTable(tuple(variables), arr.shape, arr)


def test_table_validation():
    with pytest.raises(DisjointnessViolation):
        table_of([0], [0.5, 0.6])
    with pytest.raises(DisjointnessViolation):
        table_of([0, 1], [0.5, 0.5])


def test_product_table_independent():
    t = table_of([0, 1], np.outer([0.3, 0.7], [0.6, 0.4]))
    assert ci_holds(t, T([0], [1]))


def test_correlated_pair_dependent():
    t = table_of([0, 1], [[0.5, 0.0], [0.0, 0.5]])
    assert not ci_holds(t, T([0], [1]))


def test_ci_symmetric_and_order_invariant():
    rng = np.random.default_rng(4)
    probs = rng.dirichlet(np.ones(8)).reshape(2, 2, 2)
    t = table_of([0, 1, 2], probs)
    swapped = t.reorder((2, 0, 1))
    for triple in (T([0], [1], [2]), T([1], [0], [2]), T([0], [2]), T([1], [2], [0])):
        assert ci_holds(t, triple, 1e-9) == ci_holds(swapped, triple, 1e-9)
        sym = T(triple.b, triple.a, triple.c)
        assert ci_holds(t, triple, 1e-9) == ci_holds(t, sym, 1e-9)


def test_ci_against_loop_oracle():
    rng = np.random.default_rng(11)
    for _ in range(10):
        probs = rng.dirichlet(np.ones(16)).reshape(2, 2, 2, 2)
        t = table_of([0, 1, 2, 3], probs)
        by_assign = {assign: float(probs[assign]) for assign in product(range(2), repeat=4)}
        for triple in (T([0], [1], [2]), T([0, 1], [3]), T([2], [0, 3], [1])):
            expected = oracle_ci(by_assign, [0, 1, 2, 3],
                                 sorted(triple.a), sorted(triple.b), sorted(triple.c),
                                 1e-7)
            assert ci_holds(t, triple, 1e-7) == expected


def test_sampler_deterministic():
    g = MixedGraph(3, bidirected=[(0, 1)], directed=[(1, 2)])
    cd = canonical_dag(g)
    t1 = sample_latent_dag_distribution(cd, seed=5)
    t2 = sample_latent_dag_distribution(cd, seed=5)
    assert np.array_equal(t1.probs, t2.probs)
    t3 = sample_latent_dag_distribution(cd, seed=6)
    assert not np.array_equal(t1.probs, t3.probs)


def test_sampler_single_free_parameter():
    cd = canonical_dag(MixedGraph(1))
    t = sample_latent_dag_distribution(cd, seed=0)
    assert t.probs.shape == (2,)
    assert abs(float(t.probs.sum()) - 1.0) < 1e-12


def test_sampler_cap():
    g = MixedGraph(12, bidirected=[(i, i + 1) for i in range(11)])
    with pytest.raises(CapExceeded):
        sample_latent_dag_distribution(canonical_dag(g), seed=0)


def test_latent_pair_generically_dependent():
    g = MixedGraph(2, bidirected=[(0, 1)])
    cd = canonical_dag(g)
    for seed in range(20):
        t = sample_latent_dag_distribution(cd, seed)
        assert not ci_holds(t, T([0], [1]), 1e-9)


def test_verify_single_factor_always_true():
    rng = np.random.default_rng(2)
    t = table_of([0, 1], rng.dirichlet(np.ones(4)).reshape(2, 2))
    whole = Factorization((HeadTail(frozenset({0, 1}), frozenset()),), frozenset({0, 1}))
    assert verify_factorization(t, whole)


def test_verify_independent_bits():
    t = table_of([0, 1], np.outer([0.2, 0.8], [0.9, 0.1]))
    per_var = Factorization(
        (HeadTail(frozenset({0}), frozenset()), HeadTail(frozenset({1}), frozenset())),
        frozenset({0, 1}))
    assert verify_factorization(t, per_var)
    dependent = table_of([0, 1], [[0.5, 0.0], [0.0, 0.5]])
    assert not verify_factorization(dependent, per_var)


def test_latent_markov_tables_satisfy_model_and_factorizations():
    rng = random.Random(17)
    for trial in range(5):
        n = 3 + trial % 3
        g = random_mvr_cg(n, rng)
        dec = validate_chain_graph(g)
        cd = canonical_dag(g)
        table = sample_latent_dag_distribution(cd, seed=trial)
        for triple in global_model(g):
            assert ci_holds(table, triple, 1e-9)
        assert verify_factorization(table, factorize_mvr(g, dec), 1e-9)
        assert verify_factorization(table, factorize_component_dag(g, dec), 1e-9)


def test_marginal_tables_satisfy_partition_over_closed_sets():
    rng = random.Random(29)
    g = random_mvr_cg(4, rng)
    cd = canonical_dag(g)
    table = sample_latent_dag_distribution(cd, seed=1)
    for members in powerset(range(4)):
        a = set(members)
        if not a or oracle_ancestors(4, g.directed, a) != a:
            continue
        part = head_partition(g, a)
        sub = table.marginal(a)
        assert verify_factorization(sub, part, 1e-9)
