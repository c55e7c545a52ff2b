"""Acceptance criteria 1-9, one test (or parametrized group) per criterion.

Run alone with ``pytest tests/test_acceptance.py``; a per-criterion
PASS/FAIL line is printed at the end of the session.
"""

import math
import random
import subprocess
import sys
import time

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e6mult.corpus import DEFAULT_SAMPLES, table, verify_multiplet
from e6mult.multiplet import (
    FINITE_DIM_SUBREP,
    HOLO_DS,
    LIMIT_HOLO_DS,
    Edge,
    build_multiplet,
    classify_vertex,
    conjugate_multiplet,
    degenerate_ks_edges,
    transitive_reduction,
    type_labels,
    weyl_orbit,
)
from e6mult.parabolic import split_roots
from e6mult.rootsys import cartan_matrix, e6_roots, generate_positive_roots
from e6mult.weights import ShiftedWeight, hc_param, shifted_reflect, to_signature

E6 = e6_roots()
TOP = E6.highest_root
EXPECTED = {
    "R2": 50, "R3": 49, "R4": 51, "R1": 49, "R24": 31, "R23": 35, "R21": 35, "R41": 36,
    "R43": 31, "R13": 29, "R15": 34, "R16": 34, "R35": 34, "R235": 24, "R215": 24,
    "R216": 26, "R416": 25,
}


def test_criterion_1_root_data():
    t = time.perf_counter()
    rs = generate_positive_roots(cartan_matrix("e6"))
    sp = split_roots(rs, [1])
    elapsed = time.perf_counter() - t
    assert len(rs.positive_roots) == 36
    assert sp.counts == (15, 21)
    assert rs.highest_root == (1, 2, 2, 3, 2, 1)
    assert elapsed < 1.0


def test_criterion_2_weyl_orbit():
    t = time.perf_counter()
    orbit = weyl_orbit(ShiftedWeight((1, 2, 3, 4, 5, 6)), E6)
    elapsed = time.perf_counter() - t
    assert len(orbit) == 51840 == math.prod((2, 5, 6, 8, 9, 12))
    assert elapsed < 5.0


@pytest.mark.parametrize("labels", [(1, 1, 1, 1, 1, 1), (1, 2, 3, 4, 5, 6)])
def test_criterion_3_main_multiplet(labels):
    g = build_multiplet(labels)
    rep = verify_multiplet(g, table("MAIN"), DEFAULT_SAMPLES)
    got = (len(g), len(g.ks_pairs), len(g.self_paired()))
    assert got == (70, 35, 0), "\n".join(rep.lines())
    assert all(s.ok for s in rep.samples), "\n".join(rep.lines())


@pytest.mark.parametrize("kind", list(EXPECTED))
def test_criterion_4_reduced_types(kind):
    g = build_multiplet(type_labels(kind, DEFAULT_SAMPLES[0]))
    t = table(kind)
    rep = verify_multiplet(g, t, DEFAULT_SAMPLES)
    detail = "\n".join(rep.lines())
    assert len(g) == EXPECTED[kind] == t.count, detail
    assert len(g.self_paired()) == len(t.zero_c_names()), detail
    assert rep.passed, detail


def test_criterion_5_degenerate_knapp_stein():
    g = build_multiplet((1, 2, 3, 4, 5, 6))
    edges = degenerate_ks_edges(g)
    got = sorted(g.edge_label_index(e) for e in edges)
    assert len(edges) == 5, f"{len(edges)} reduced edges along the highest root, m = m_i for i in {got}"
    assert got == [1, 3, 4, 5, 6]
    assert sorted(e.m for e in edges) == [1, 3, 4, 5, 6]


def test_criterion_6_flags():
    g = build_multiplet((2, 3, 5, 7, 11, 13))
    plus = g.ks_partner_index(g.origin)
    w = g.vertices[plus]
    assert all(hc_param(w, b) < 0 for b in g.split.noncompact_roots)
    m_top = hc_param(g.vertices[g.origin], TOP)
    assert g.signatures[plus].d == (11 + m_top) / 2 and g.signatures[plus].d >= 11
    assert HOLO_DS in classify_vertex(g, plus)
    assert FINITE_DIM_SUBREP in classify_vertex(g, g.origin)
    ones = build_multiplet((1, 1, 1, 1, 1, 1))
    assert ones.signatures[ones.origin].d == 0
    r2 = build_multiplet(type_labels("R2", (2, 3, 5, 7, 11, 13)))
    top = r2.ks_partner_index(r2.origin)
    assert all(hc_param(r2.vertices[top], b) <= 0 for b in r2.split.noncompact_roots)
    assert LIMIT_HOLO_DS in classify_vertex(r2, top)
    assert r2.signatures[top].d >= 10


def test_criterion_7_conjugation():
    g = build_multiplet((1, 1, 1, 1, 1, 1))
    assert conjugate_multiplet(g).canonical() == g.canonical()


# criterion 8: five randomized suites

label_vectors = st.tuples(*[st.integers(-20, 20)] * 6).map(ShiftedWeight)
ROOT_SUMS = [
    (b, g)
    for b in E6.positive_roots
    for g in E6.positive_roots
    if E6.is_positive_root(tuple(x + y for x, y in zip(b, g)))
]
multiplet_inputs = st.tuples(*[st.integers(0, 9)] * 6).filter(any)


@settings(max_examples=1000, deadline=None)
@given(label_vectors, st.sampled_from(E6.all_roots()))
def test_criterion_8_reflection_involution(w, beta):
    r = shifted_reflect(w, beta, E6)
    assert shifted_reflect(r, beta, E6) == w
    assert hc_param(r, beta) == -hc_param(w, beta)


@settings(max_examples=1000, deadline=None)
@given(label_vectors, st.sampled_from(ROOT_SUMS))
def test_criterion_8_param_linearity(w, pair):
    b, g = pair
    s = tuple(x + y for x, y in zip(b, g))
    assert hc_param(w, s) == hc_param(w, b) + hc_param(w, g)


@settings(max_examples=1000, deadline=None)
@given(multiplet_inputs)
def test_criterion_8_edge_validity(labels):
    g = build_multiplet(labels, via_orbit=False)
    noncompact = set(g.split.noncompact_roots)
    for e in g.edges:
        u, v = g.vertices[e.source], g.vertices[e.target]
        assert e.root in noncompact
        assert e.m == hc_param(u, e.root) > 0
        assert shifted_reflect(u, e.root, E6) == v
        assert to_signature(v, g.split) == g.signatures[e.target]


@settings(max_examples=1000, deadline=None)
@given(multiplet_inputs)
def test_criterion_8_acyclic(labels):
    g = build_multiplet(labels, via_orbit=False)
    d = nx.DiGraph()
    d.add_nodes_from(range(len(g)))
    d.add_edges_from((e.source, e.target) for e in g.edges)
    assert nx.is_directed_acyclic_graph(d)


def _random_dag(seed):
    rnd = random.Random(seed)
    n = rnd.randint(1, 14)
    order = list(range(n))
    rnd.shuffle(order)
    p = rnd.random()
    edges = [Edge(order[i], order[j], (), 1) for i in range(n) for j in range(i + 1, n) if rnd.random() < p]
    rnd.shuffle(edges)
    return n, edges


@settings(max_examples=1000, deadline=None)
@given(st.integers(0, 2**32))
def test_criterion_8_transitive_reduction_unique(seed):
    n, edges = _random_dag(seed)
    got = {(e.source, e.target) for e in transitive_reduction(n, edges)}
    again = {(e.source, e.target) for e in transitive_reduction(n, list(reversed(edges)))}
    d = nx.DiGraph()
    d.add_nodes_from(range(n))
    d.add_edges_from((e.source, e.target) for e in edges)
    assert got == again == set(nx.transitive_reduction(d).edges())


def test_criterion_9_json_determinism():
    cmd = [sys.executable, "-m", "e6mult", "multiplet", "--labels", "1,2,3,4,5,6", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and len(first) > 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
