import pytest

from hendry import (
    GraphError,
    HkSpec,
    blowup_parts,
    build_dn,
    build_gk,
    build_gkm,
    build_h_plus,
    build_hendry_exception,
    build_hk,
    build_hkm,
    build_jk,
    build_r,
    build_s,
    contract_parts,
    is_isomorphic,
    lift_cycle,
    paste_clique,
    pasted_vertices,
    same_adjacency,
    witness_heavy_ham_cycle,
    witness_long_heavy_cycle,
)


def test_gk_counts():
    g = build_gk(3)
    assert (g.n, g.edge_count, len(g.heavy_edges)) == (10, 30, 5)
    g1 = build_gk(1)
    assert g1.n == 4
    assert [g1.roles[u] for u, v in g1.heavy_edges] == ["x1"]
    assert g1.heavy_edges == ((g1.vertex("x1"), g1.vertex("u1")),)
    with pytest.raises(GraphError):
        build_gk(0)


def test_gk_structure():
    # the clique is complete to the path; path edges are consecutive
    for k in (1, 2, 3, 5):
        g = build_gk(k)
        assert g.edge_count == k * (k - 1) // 2 + 2 * k + k * (2 * k + 1)
        xs = [g.vertex(f"x{i}") for i in range(1, k + 1)]
        path = ([g.vertex(f"u{i}") for i in range(1, k + 1)] + [g.vertex("z")]
                + [g.vertex(f"v{i}") for i in range(k, 0, -1)])
        for x in xs:
            assert all(g.has_edge(x, p) for p in path)
        for a, b in zip(path, path[1:]):
            assert g.has_edge(a, b)
        for i, (a, b) in enumerate(zip(path, path[2:])):
            assert not g.has_edge(a, b)


def test_heavy_edge_order_fixed():
    g = build_gk(3)
    names = [(g.roles[u], g.roles[v]) for u, v in
             [tuple(sorted(e, key=lambda w: g.roles[w])) for e in g.heavy_edges]]
    assert names == [("u1", "x1"), ("u2", "x2"), ("u3", "x3"),
                     ("v1", "x1"), ("v2", "x2")]


def test_hk_counts():
    h = build_hk(HkSpec.uniform(3))
    assert (h.n, h.edge_count) == (15, 40)
    h2 = build_hk(HkSpec(3, (3, 3, 3, 3, 4)))
    assert h2.n == 16
    assert HkSpec(3, (3, 3, 3, 3, 4)).n_result == 16


def test_hk_spec_errors():
    with pytest.raises(GraphError):
        HkSpec(2, (3, 3, 3))
    with pytest.raises(GraphError):
        HkSpec(3, (3, 3, 3, 3))
    with pytest.raises(GraphError):
        HkSpec(3, (3, 3, 3, 3, 2))


def test_h_plus():
    hp = build_h_plus(HkSpec.uniform(3))
    assert (hp.n, hp.edge_count) == (15, 41)
    assert hp.has_edge(hp.vertex("u1"), hp.vertex("u3"))


def test_s_counts():
    s = build_s(3)
    assert s.n == 16
    assert s.min_degree() == 3
    s4 = build_s(4)
    assert s4.n == 2 * 3 * 5 + 5
    assert s4.min_degree() == 4
    with pytest.raises(GraphError):
        build_s(2)


def test_s_attachment_degrees():
    # attachment vertices see exactly their heavy clique of order k
    for k in (3, 4):
        s = build_s(k)
        for t in s.vertices_with_prefix("T"):
            assert s.degree(t) == k


def test_gkm():
    g = build_gkm(3, 3)
    assert g.n == 13
    assert len(g.heavy_edges) == 5
    g1 = build_gkm(3, 1)
    base = build_gk(3)
    assert g1.n == base.n + 1
    assert not g1.has_edge(g1.vertex("v3"), g1.vertex("z"))
    assert g1.has_edge(g1.vertex("v4"), g1.vertex("z"))
    with pytest.raises(GraphError):
        build_gkm(3, 0)


def test_hkm():
    h = build_hkm(3, 3, (3,) * 5)
    assert h.n == 18
    with pytest.raises(GraphError):
        build_hkm(3, 3, (3,) * 4)


def test_jk():
    j = build_jk(3, (3,) * 5, 6)
    assert j.n == 16
    extras = j.vertices_with_prefix("X")
    assert len(extras) == 1
    anchor = [j.vertex(f"x{i}") for i in (1, 2, 3)] + [j.vertex("z"), j.vertex("v3")]
    assert all(j.has_edge(extras[0], a) for a in anchor)
    with pytest.raises(GraphError):
        build_jk(3, (3,) * 5, 5)


def test_dn():
    assert build_dn(15).edge_count == 40
    assert build_dn(20).edge_count == 65
    with pytest.raises(GraphError):
        build_dn(14)


def test_dn_15_is_uniform_hk():
    assert same_adjacency(build_dn(15), build_hk(HkSpec.uniform(3)))


def test_hendry_exceptions():
    e2 = build_hendry_exception(2, 5)
    assert (e2.n, e2.edge_count) == (5, 7)
    e1 = build_hendry_exception(1, 6)
    deg1 = [v for v in range(e1.n) if e1.degree(v) == 1]
    assert len(deg1) == 1  # the K_1 component hangs off the apex alone
    with pytest.raises(GraphError):
        build_hendry_exception(2, 6)
    with pytest.raises(GraphError):
        build_hendry_exception(4, 6)
    with pytest.raises(GraphError):
        build_hendry_exception(1, 4)


def test_witness_cycles_validate():
    for k in range(1, 9):
        g = build_gk(k)
        c = witness_heavy_ham_cycle(k).validate(g)
        assert c.vertex_set == frozenset(range(g.n))
        assert all(e in c.edge_set() for e in g.heavy_edges)
    for k in range(2, 9):
        g = build_gk(k)
        c = witness_long_heavy_cycle(k).validate(g)
        assert c.vertex_set == frozenset(range(g.n)) - {g.vertex("z"), g.vertex(f"v{k}")}
        assert all(e in c.edge_set() for e in g.heavy_edges)
    with pytest.raises(GraphError):
        witness_heavy_ham_cycle(0)
    with pytest.raises(GraphError):
        witness_long_heavy_cycle(1)


def test_lift_cycle():
    h = build_hk(HkSpec.uniform(3))
    lifted = lift_cycle(witness_heavy_ham_cycle(3), h)
    assert len(lifted) == 15
    assert lifted.vertex_set == frozenset(range(h.n))
    long = lift_cycle(witness_long_heavy_cycle(3), h)
    assert len(long) == 13
    assert frozenset(range(h.n)) - long.vertex_set == \
        {h.vertex("z"), h.vertex("v3")}


def test_lift_one_vertex_per_triangle():
    h = build_hk(HkSpec.uniform(3))
    base = witness_heavy_ham_cycle(3)
    lifted = lift_cycle(base, h)
    assert len(lifted) - len(base) == 5


def test_lift_requires_all_heavy_edges():
    h = build_hk(HkSpec.uniform(3))
    from hendry import Cycle
    triangle = Cycle([h.vertex("x1"), h.vertex("u1"), h.vertex("x2")]).validate(h)
    with pytest.raises(GraphError):
        lift_cycle(triangle, h)


def test_pasted_vertices_order():
    h = build_hk(HkSpec(3, (5, 3, 3, 3, 3)))
    ps = pasted_vertices(h, 0)
    assert len(ps) == 3
    assert ps == sorted(ps)


def _expected_hk_all3(kp):
    g = build_gk(kp)
    for i, e in enumerate(g.heavy_edges):
        g = paste_clique(g, e, 3, edge_index=i)
    return g


def _blowup_to_base_parts(g, k, with_attachments):
    parts = [[g.vertex(f"x{i}")] for i in range(1, k)]
    parts += [g.vertices_with_prefix(f"F{i}.") for i in range(1, k)]
    parts += [[g.vertex("z")], [g.vertex(f"v{k}")]]
    parts += [g.vertices_with_prefix(f"F'{i}.") for i in range(k - 2, 0, -1)]
    if with_attachments:
        parts += [g.vertices_with_prefix(f"T{i}.") for i in range(1, k)]
        parts += [g.vertices_with_prefix(f"T'{i}.") for i in range(1, k - 1)]
    return parts


def test_contract_r_recovers_base():
    r = build_r(3)
    q = contract_parts(r, _blowup_to_base_parts(r, 3, False))
    assert is_isomorphic(q, build_gk(2))


def test_contract_s_recovers_pasted_base():
    # k=3: brute-force isomorphism on the 10-vertex quotient
    s = build_s(3)
    q = contract_parts(s, _blowup_to_base_parts(s, 3, True),
                       require_connected=False)
    assert is_isomorphic(q, _expected_hk_all3(2))


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_contract_s_labeled_equality(k):
    # the part order is chosen to match the pasted base's vertex numbering,
    # so the quotient agrees edge-for-edge, no isomorphism search needed
    s = build_s(k)
    q = contract_parts(s, _blowup_to_base_parts(s, k, True),
                       require_connected=False)
    assert same_adjacency(q, _expected_hk_all3(k - 1))


def test_blowup_parts_helper():
    s = build_s(3)
    parts = blowup_parts(s, 3)
    assert set(parts) == {"F1", "F2", "F'1", "T1", "T2", "T'1"}
    assert all(len(vs) == 2 for vs in parts.values())
