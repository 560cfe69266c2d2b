import random
from fractions import Fraction

import pytest

from ricci_spectrum import (
    TransportPlan,
    dual_certificate,
    one_step_measure,
    verify_plan,
    wasserstein,
)
from ricci_spectrum.errors import InfiniteDistance, UnbalancedMeasures

from conftest import (
    complete_graph,
    cycle_graph,
    enumerate_transport_optimum,
    random_corpus,
    random_measure,
)


def test_identical_measures_have_identity_plan():
    c5 = cycle_graph(5)
    mu = one_step_measure(c5, 0)
    cost, plan = wasserstein(c5.distance, mu, mu)
    assert cost == 0
    assert plan.entries == {(v, v): m for v, m in mu.items()}


def test_pentagon_neighbor_cost_is_one():
    c5 = cycle_graph(5)
    cost, plan = wasserstein(
        c5.distance, one_step_measure(c5, 0), one_step_measure(c5, 1)
    )
    assert cost == 1
    assert verify_plan(plan, one_step_measure(c5, 0), one_step_measure(c5, 1), c5.distance)


def test_single_atom_swap():
    k2 = complete_graph(2)
    cost, plan = wasserstein(k2.distance, {1: Fraction(1)}, {0: Fraction(1)})
    assert cost == 1
    assert plan.entries == {(1, 0): Fraction(1)}


def test_verify_plan_rejects_perturbation():
    c5 = cycle_graph(5)
    mu, nu = one_step_measure(c5, 0), one_step_measure(c5, 1)
    cost, plan = wasserstein(c5.distance, mu, nu)
    assert verify_plan(plan, mu, nu, c5.distance)
    entries = dict(plan.entries)
    key = next(iter(entries))
    entries[key] += Fraction(1, 1000)
    assert not verify_plan(TransportPlan(entries=entries, cost=plan.cost), mu, nu, c5.distance)
    assert not verify_plan(TransportPlan(entries={}, cost=Fraction(0)), mu, nu, c5.distance)


def test_unbalanced_rejected():
    c5 = cycle_graph(5)
    with pytest.raises(UnbalancedMeasures):
        wasserstein(c5.distance, {0: Fraction(1)}, {1: Fraction(1, 2)})


def test_split_supports_rejected():
    disconnected_metric = lambda u, v: float("inf") if (u < 2) != (v < 2) else 1
    with pytest.raises(InfiniteDistance):
        wasserstein(disconnected_metric, {0: Fraction(1)}, {2: Fraction(1)})


def test_dual_certificate_pentagon():
    c5 = cycle_graph(5)
    mu, nu = one_step_measure(c5, 0), one_step_measure(c5, 1)
    cost, _ = wasserstein(c5.distance, mu, nu)
    cert = dual_certificate(c5.distance, mu, nu, cost)
    value = sum(cert.potential[v] * m for v, m in mu.items()) - sum(
        cert.potential[v] * m for v, m in nu.items()
    )
    assert value == cost
    # the hand-checkable potential f(v1)=f(v4)=1, f(v0)=f(v2)=0 also reaches it
    hand = {1: 1, 4: 1, 0: 0, 2: 0}
    pairs = [(a, b) for a in hand for b in hand]
    assert all(abs(hand[a] - hand[b]) <= c5.distance(a, b) for a, b in pairs)
    assert sum(hand[v] * m for v, m in mu.items()) - sum(hand[v] * m for v, m in nu.items()) == 1


def test_dual_certificate_equal_measures():
    c5 = cycle_graph(5)
    mu = one_step_measure(c5, 2)
    cert = dual_certificate(c5.distance, mu, mu, Fraction(0))
    gap = sum(cert.potential[v] * m for v, m in mu.items()) - sum(
        cert.potential[v] * m for v, m in mu.items()
    )
    assert gap == 0
    # the zero potential is itself a valid certificate here
    assert all(0 <= c5.distance(a, b) for a in mu.support for b in mu.support)


def test_dual_certificate_k2():
    k2 = complete_graph(2)
    cert = dual_certificate(k2.distance, {1: Fraction(1)}, {0: Fraction(1)}, Fraction(1))
    assert cert.potential[1] - cert.potential[0] == 1


def _random_instance(rng):
    graphs = random_corpus()
    _, g = graphs[rng.randrange(len(graphs))]
    mu = random_measure(rng, g.vertices(), 4)
    nu = random_measure(rng, g.vertices(), 4)
    return g, mu, nu


def test_simplex_matches_polytope_enumeration():
    rng = random.Random(99)
    for _ in range(40):
        g, mu, nu = _random_instance(rng)
        cost, plan = wasserstein(g.distance, mu, nu)
        assert verify_plan(plan, mu, nu, g.distance)
        assert cost == enumerate_transport_optimum(g.distance, mu, nu)
        dual_certificate(g.distance, mu, nu, cost)  # raises on any gap


def test_triangle_inequality_random_triples():
    rng = random.Random(31)
    for _ in range(30):
        graphs = random_corpus()
        _, g = graphs[rng.randrange(len(graphs))]
        mu = random_measure(rng, g.vertices(), 4)
        nu = random_measure(rng, g.vertices(), 4)
        rho = random_measure(rng, g.vertices(), 4)
        d_mu_nu, _ = wasserstein(g.distance, mu, nu)
        d_nu_rho, _ = wasserstein(g.distance, nu, rho)
        d_mu_rho, _ = wasserstein(g.distance, mu, rho)
        assert d_mu_rho <= d_mu_nu + d_nu_rho


def test_cost_scales_linearly_with_the_metric():
    rng = random.Random(13)
    for _ in range(20):
        g, mu, nu = _random_instance(rng)
        cost, _ = wasserstein(g.distance, mu, nu)
        doubled, _ = wasserstein(lambda u, v: 2 * g.distance(u, v), mu, nu)
        assert doubled == 2 * cost
