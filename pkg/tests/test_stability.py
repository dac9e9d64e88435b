import pytest

from vstab import (
    Budget,
    Graph,
    blow_up_cycle5,
    chromatic_number,
    complete_graph,
    f_bounds,
    independent_vertex_stability,
    is_independent,
    k_delta,
    reduce_by_color_class,
    stability_report,
    vertex_stability,
    vset,
    vset_list,
)
from oracles import naive_chromatic, naive_stability


def test_k_delta_values():
    assert k_delta(2) == 0
    assert k_delta(5) == 0
    assert k_delta(6) == 1
    assert k_delta(11) == 1
    assert k_delta(12) == 2
    assert k_delta(1000) == 30
    with pytest.raises(ValueError):
        k_delta(1)


def test_k_delta_defining_inequality():
    for d in range(2, 2000):
        k = k_delta(d)
        assert (k + 1) * (k + 2) <= d < (k + 2) * (k + 3)


def test_f_bounds_exact_range():
    for d in range(3, 11):
        fb = f_bounds(d)
        assert fb.lower == fb.upper == d
        assert not fb.upper_is_asymptotic


def test_f_bounds_window():
    for d in range(11, 500):
        fb = f_bounds(d)
        k = k_delta(d)
        assert fb.k_delta == k
        assert fb.upper_is_asymptotic
        assert fb.upper_asymptotic == d + 2 - k
        if d <= k * k + 4 * k + 1:
            assert fb.lower == d + 2 - k
        else:
            assert fb.lower == d + 1 - k
        assert fb.lower <= fb.upper_asymptotic
    with pytest.raises(ValueError):
        f_bounds(2)


def test_vertex_stability_known():
    # deleting any single vertex of an odd cycle drops chi from 3 to 2
    c5 = blow_up_cycle5(1)
    rep = vertex_stability(c5, "chi")
    assert rep.value == 1 and rep.witness == (0,)
    # a complete graph loses both parameters with one deletion
    k4 = complete_graph(4)
    assert vertex_stability(k4, "chi").value == 1
    assert vertex_stability(k4, "omega").value == 1
    assert independent_vertex_stability(k4, "omega").independent_value == 1
    # two disjoint triangles: chi drops only after hitting both
    g2 = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert vertex_stability(g2, "chi").value == 2
    assert vertex_stability(g2, "chi").witness == (0, 3)
    assert vertex_stability(g2, "omega").value == 2


def test_ivs_omega_nonexistence():
    # C5 clique blow-up: every independent set misses a maximum clique
    rep = independent_vertex_stability(blow_up_cycle5(2), "omega")
    assert rep.independent_value is None
    assert rep.independent_witness is None
    assert rep.exhausted


def test_stability_rejects_empty_and_bad_parameter():
    with pytest.raises(ValueError):
        vertex_stability(Graph(0, []), "chi")
    with pytest.raises(ValueError):
        vertex_stability(complete_graph(2), "size")


def test_stability_matches_oracle(small_corpus):
    for g in small_corpus[:60]:
        for parameter in ("chi", "omega"):
            rep = stability_report(g, parameter)
            assert rep.exhausted
            value, witness = naive_stability(g, parameter, independent=False)
            assert rep.value == value
            assert rep.witness == witness
            ivalue, iwitness = naive_stability(g, parameter, independent=True)
            assert rep.independent_value == ivalue
            assert rep.independent_witness == iwitness


def test_witnesses_are_valid(small_corpus):
    for g in small_corpus[:40]:
        base = chromatic_number(g)
        rep = stability_report(g, "chi")
        removed = vset(rep.witness)
        assert naive_chromatic(g, removed) < base
        iremoved = vset(rep.independent_witness)
        assert is_independent(g, iremoved)
        assert naive_chromatic(g, iremoved) < base


def test_budget_abort_reported():
    g = blow_up_cycle5(3)
    rep = stability_report(g, "chi", Budget(1))
    assert not rep.exhausted
    assert rep.value is None and rep.independent_value is None


def test_reduce_by_color_class(small_corpus):
    assert reduce_by_color_class(complete_graph(4)) == 1 << 0
    for g in small_corpus[:30]:
        chi = chromatic_number(g)
        cls = reduce_by_color_class(g)
        assert cls != 0
        assert is_independent(g, cls)
        assert naive_chromatic(g, cls) == chi - 1
    with pytest.raises(ValueError):
        reduce_by_color_class(Graph(0, []))


def test_shared_budget_merge():
    g = blow_up_cycle5(2)
    rep = stability_report(g, "omega")
    vs = vertex_stability(g, "omega")
    ivs = independent_vertex_stability(g, "omega")
    assert rep.value == vs.value == 3
    assert rep.witness == vs.witness == (0, 2, 6)
    assert rep.independent_value is ivs.independent_value is None
    assert rep.exhausted
