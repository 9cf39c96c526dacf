import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from crossnum.drawing import (
    CertificateFormatError, ConfigError, CrossingConfig, DrawingCertificate, clean_edges, crossing_counts,
    is_planar, nu, planarize, realize, regions, reinsert_edge, subdrawing, trace_faces, validate_certificate,
)
from crossnum.graph import Graph, build_gp, complete_graph, p103_partition

from conftest import from_nx, to_nx

POOL = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])


def k5_one_crossing():
    return realize(complete_graph(5), {(0, 2): [(1, 3)], (1, 3): [(0, 2)]})


def euler_ok(cert):
    pg = cert.planarization
    return pg.vertex_count - pg.edge_count + len(cert.faces) == 2


def test_planarize_counts():
    g = complete_graph(5)
    c = CrossingConfig.canonical({(0, 2): [(1, 3)], (1, 3): [(0, 2)]})
    plan = planarize(g, c)
    assert plan.graph.vertex_count == 6 and plan.graph.edge_count == 12
    assert plan.paths[(0, 2)] == (0, 5, 2)
    assert plan.owner[(1, 5)] == (1, 3)


@pytest.mark.parametrize("seqs,msg", [
    ({(0, 1): [(1, 2)], (1, 2): [(0, 1)]}, "adjacent edges cross"),
    ({(0, 1): [(0, 1)]}, "self crossing"),
])
def test_planarize_rejects_bad_configs(seqs, msg):
    with pytest.raises(ConfigError, match=msg):
        planarize(complete_graph(5), CrossingConfig.canonical(seqs))


def test_violations_named():
    g = complete_graph(5)
    pair = ((0, 2), (1, 3))
    assert any("double crossing" in v for v in CrossingConfig((pair, pair), {}).violations(g))
    c = CrossingConfig((((0, 2), (1, 3)), ((0, 2), (1, 4))), {})
    assert any("missing crossing order" in v for v in c.violations(g))
    c = CrossingConfig((((0, 2), (1, 3)),), {(0, 2): (0,)})
    assert any("fewer than two" in v for v in c.violations(g))


def test_k5_one_crossing_certificate():
    cert = k5_one_crossing()
    assert validate_certificate(cert) == []
    assert cert.crossing_count == 1
    assert euler_ok(cert)
    assert clean_edges(cert) == set(complete_graph(5).edges) - {(0, 2), (1, 3)}


def test_realize_rejects_unrealizable():
    with pytest.raises(ConfigError):
        realize(complete_graph(5), {})


def test_is_planar_witness_and_embedding():
    res = is_planar(complete_graph(5))
    assert not res.planar and len(res.witness) == 10
    cube = from_nx(nx.hypercube_graph(3))
    res = is_planar(cube)
    assert res.planar
    # cube: V - E + F = 8 - 12 + 6
    assert len(trace_faces(res.rotation)) == 6


def test_face_tracing_convention():
    # triangle with rotations 0:(1,2) 1:(2,0) 2:(0,1): successor of (u,v) leaves v after u
    faces = trace_faces([(1, 2), (2, 0), (0, 1)])
    assert sorted(len(f) for f in faces) == [3, 3]
    face = next(f for f in faces if (0, 1) in f)
    assert (1, 2) in face


def test_g1_planar_with_four_faces(p103):
    p = p103_partition(p103)
    g1 = p103.induced(p.v1)
    res = is_planar(g1)
    assert res.planar
    assert g1.edge_count == 12
    assert len(trace_faces(res.rotation)) == 4


def test_validate_names_corruption():
    cert = k5_one_crossing()
    x = 5
    r = list(cert.rotation)
    a, b, c, d = r[x]
    r[x] = (a, c, b, d)
    bad = DrawingCertificate(cert.base, cert.config, tuple(r))
    problems = validate_certificate(bad)
    assert any("non-alternating crossing x0" in p for p in problems)
    r = list(cert.rotation)
    r[0] = r[0][1:]
    problems = validate_certificate(DrawingCertificate(cert.base, cert.config, tuple(r)))
    assert any("rotation mismatch at 0" in p for p in problems)


def test_certificate_text_exact():
    cert = k5_one_crossing()
    text = cert.to_text()
    assert "x 0 0 2 1 3\n" in text
    assert "rot x0 :" in text
    assert DrawingCertificate.from_text(text).to_text() == text


@pytest.mark.parametrize("mutate", [
    lambda t: t.replace("x 0 0 2 1 3", "x 1 0 2 1 3"),
    lambda t: t.replace("rot x0", "rot x9"),
    lambda t: "\n".join(l for l in t.splitlines() if not l.startswith("rot 4")) + "\n",
    lambda t: t + "bogus 1\n",
    lambda t: t.replace("x 0 0 2 1 3", "x 0 2 0 1 3"),
])
def test_certificate_parse_errors(mutate):
    with pytest.raises(CertificateFormatError):
        DrawingCertificate.from_text(mutate(k5_one_crossing().to_text()))


def test_pool_valid_and_round_trip(small_pool, p103_pool):
    for cert in small_pool + p103_pool:
        assert validate_certificate(cert) == []
        text = cert.to_text()
        back = DrawingCertificate.from_text(text)
        assert back == cert and back.to_text() == text


def test_face_count_law(small_pool, p103_pool):
    for cert in small_pool + p103_pool:
        assert euler_ok(cert)
        assert is_planar(cert.planarization).planar


@POOL
@given(data=st.data())
def test_additivity(data, small_pool, p103_pool):
    cert = data.draw(st.sampled_from(small_pool + p103_pool))
    edges = list(cert.base.edges)
    a = set(data.draw(st.lists(st.sampled_from(edges), unique=True)))
    b = set(edges) - a
    na, nb, nab = crossing_counts(cert, a, b)
    # independent count: classify each crossing pair directly
    assert na + nb + nab == cert.crossing_count
    assert nu(cert, a) == na and nu(cert, a, b) == nab
    assert nu(cert, a | b) == cert.crossing_count


@POOL
@given(data=st.data())
def test_subdrawing_valid_and_monotone(data, small_pool, p103_pool):
    cert = data.draw(st.sampled_from(small_pool + p103_pool))
    keep = data.draw(st.lists(st.sampled_from(list(cert.base.edges)), unique=True))
    sub = subdrawing(cert, keep)
    assert validate_certificate(sub) == []
    assert sub.crossing_count <= cert.crossing_count
    assert sub.crossing_count == crossing_counts(cert, keep, ())[0]


@POOL
@given(data=st.data(), i=st.sampled_from([1, 2]))
def test_region_coverage(data, i, p103_pool):
    cert = data.draw(st.sampled_from(p103_pool))
    p = p103_partition(cert.base)
    locate = p.deg2(3 - i)
    reps = regions(cert, p.edges(i), locate)
    assert sum(len(r.v_in) for r in reps) == len(locate)
    for v in locate:
        assert sum(v in r.v_in for r in reps) == 1
    for r in reps:
        assert r.v_in | r.v_out == locate and not r.v_in & r.v_out


def test_regions_of_clean_half_match_embedding(p103_cert6):
    # an uncrossed half is a plane drawing: its regions are its faces
    p = p103_partition(p103_cert6.base)
    for i in (1, 2):
        if crossing_counts(p103_cert6, p.edges(i), ())[0] == 0:
            assert len(regions(p103_cert6, p.edges(i), ())) == 4


@POOL
@given(data=st.data())
def test_reinsert_edge_keeps_validity(data, small_pool):
    cert = data.draw(st.sampled_from(small_pool))
    e = data.draw(st.sampled_from(list(cert.base.edges)))
    seed = data.draw(st.integers(0, 1000))
    out = reinsert_edge(cert, e, random.Random(seed), noise=data.draw(st.sampled_from([0.0, 1.0, 10.0])))
    if out is not None:
        assert out.base == cert.base
        assert validate_certificate(out) == []
        others = [f for f in cert.base.edges if f != e]
        assert subdrawing(out, others).crossing_count == subdrawing(cert, others).crossing_count


def test_planar_graph_zero_crossing_certificate():
    g = build_gp((6, 1))
    cert = realize(g, {})
    assert validate_certificate(cert) == [] and cert.crossing_count == 0
