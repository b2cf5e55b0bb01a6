import json

import pytest

import repclust as rc


def test_vertex_counts():
    for n in range(1, 5):
        for m in range(1, 3):
            for p in range(1, 4):
                params = rc.ModelParams(n, m, p)
                q = rc.build_gamma(params)
                assert q.vertex_count == p * n * (m * (n + 1) + 2) // 2
                assert q.vertex_count == params.diagonal_count
                assert rc.verify_stable(q)["stable"]


def test_bad_params():
    with pytest.raises(ValueError):
        rc.ModelParams(0, 1, 1)
    with pytest.raises(ValueError):
        rc.t_value(2, 2)


def test_hom_and_ext():
    c = rc.OrbitCategory(rc.ModelParams(3, 1, 3))
    assert c.ext((2, 4, 1), (1, 3, 1)) == 1
    assert c.hom((1, 3, 1), (1, 4, 1)) == 1
    assert c.hom((1, 3, 1), (2, 4, 1)) == 0
    assert rc.ext1_crossing((2, 4, 1), (1, 3, 1), rc.ModelParams(3, 1, 3)) == 1


def test_tilting():
    objects = rc.tilting_objects(rc.ModelParams(3, 1, 3))
    assert len(objects) == 14 == rc.fuss_catalan(3, 1)
    assert all(len(t) == 9 for t in objects)
    r = rc.verify_tilting(rc.ModelParams(3, 1, 2))
    assert r["cluster_tilting_matches"] and r["maximal_rigid_matches"]


def test_embedding_and_power():
    e = rc.embed(2, 4)
    assert e["ok"] and e["t"] == 7 and e["rows"] == [1, 2, 6, 7]
    assert rc.power_decomposition(2)["component_sizes"] == [8, 6, 6]
    assert rc.verify_region(4)
    assert rc.verify_derived_iso(3, 2)


def test_json_round_trip_and_check():
    q = rc.build_gamma(rc.ModelParams(2, 2, 2))
    back = rc.quiver_from_json(q.to_json())
    assert rc.isomorphic(q, back, True)
    assert json.loads(q.to_json())["vertices"]
    report = rc.check("stability", rc.ModelParams(3, 1, 3))
    assert report["passed"]
