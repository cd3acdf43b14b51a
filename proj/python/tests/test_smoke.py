import pytest

import resolvekit as rk


def test_family_sizes():
    g = rk.family("web", 6)
    assert (g.vertex_count, g.edge_count) == (18, 24)
    assert g.label(g.id_of("r3")) == "r3"


def test_dimension_result_keys():
    r = rk.dimension(rk.family("cycle", 6), "mixed")
    assert r["dimension"] == 3
    assert r["basis"] == [0, 1, 3]
    assert set(r) >= {"mode", "dimension", "basis", "basis_labels", "certificate", "stats"}
    assert set(r["certificate"]) >= {"forced", "bound", "witness"}


def test_mixed_dimension_of_prism_allied():
    r = rk.dimension(rk.family("prism_allied", 4))
    assert r["dimension"] == 5
    assert r["basis_labels"] == ["p1", "s1", "s2", "s3", "s4"]


def test_check_set():
    g = rk.family("prism_allied", 6)
    out = rk.check_set(g, ["p1", "s1", "s2", "s3", "s4", "s5", "s6"])
    assert out["generator"] and out["independent"]
    out = rk.check_set(g, ["s1", "s2", "s3", "s4", "s5", "s6"])
    assert not out["generator"]
    assert out["witness"] == ("q1", "p1q1")


def test_theorem_and_tables():
    assert rk.verify_family_theorem("web", 41)["proven"]
    report = rk.validate_tables("web", 7)
    assert report["mismatches"] == []
    assert report["census"]["matches"]


def test_chain():
    assert rk.chain_check("web", 5) == {"vertex": 2, "edge": 3, "mixed": 6, "strict": True}
    assert not rk.chain_check("web", 6)["strict"]


def test_errors():
    with pytest.raises(rk.ResolveKitError) as info:
        rk.build_graph(2, [(0, 0)])
    assert info.value.kind == "SelfLoop"
    with pytest.raises(rk.ResolveKitError) as info:
        rk.build_graph(4, [(0, 1), (2, 3)]).distances()
    assert info.value.exit_code == 2
    with pytest.raises(rk.BudgetExceeded) as info:
        rk.dimension(rk.family("web", 8), "vertex", budget=5)
    assert info.value.subsets == 5
