from fractions import Fraction

import pytest

import matcor


def test_uniform_basics():
    u = matcor.Matroid.uniform(2, 4)
    assert u.size == 4 and u.rank() == 2
    assert u.rank([0, 1, 2]) == 2
    assert u.is_independent([0, 3])
    assert len(matcor.bases(u)) == 6
    assert matcor.independence_profile(u) == [1, 4, 6]


def test_examples_reproduce():
    want = {
        "simplicial": (11664, 11640, 11640, 11664),
        "graphic": (80, 32, 192, 80),
        "transversal": (33, 36, 114, 126),
        "steiner": (7315, 22638, 22638, 72149),
    }
    for name, counts in want.items():
        e = matcor.catalog_entry(name)
        p = matcor.basis_partition(e["matroid"], e["i"], e["j"], workers=2)
        assert (p["s_both"], p["s_i_only"], p["s_j_only"], p["s_neither"]) == counts


def test_spike_ratio_and_s8():
    e = matcor.spike(2, 5)
    assert matcor.correlation_ratio(e["matroid"], 0, 1) == Fraction(8, 7)
    s8 = matcor.catalog_entry("s8")
    assert matcor.correlation_ratio(s8["matroid"], s8["i"], s8["j"]) == Fraction(9, 8)
    assert matcor.spike_ratio(5) == Fraction(8, 7)


def test_weighted_partition_accepts_mixed_weights():
    u = matcor.Matroid.uniform(2, 4)
    p = matcor.weighted_partition(u, 0, 1, [1, "1/1", Fraction(1), 2.0])
    assert (p["s_both"], p["s_i_only"], p["s_j_only"], p["s_neither"]) == (1, 3, 3, 2)


def test_theorems_and_certificates():
    st = matcor.catalog_entry("steiner")
    r = matcor.check_theorem1(st["matroid"], 0, 1)
    assert r["satisfied"] and r["bound"] == Fraction(5, 3)
    ext = matcor.Matroid.uniform(2, 4).free_extend(2)
    r2 = matcor.check_theorem2(ext, 4, 5)
    assert r2["satisfied"] and r2["free_pair"]
    c = matcor.certify(matcor.Matroid.uniform(2, 4), 0, 1)
    assert c["passed"]
    assert c["hij"]["det"] == 6
    assert c["hij"]["signature"] == (1, 2, 0)
    assert matcor.eigen_signature([[1, 0], [0, 1]]) == (2, 0, 0)


def test_analytics():
    b4 = matcor.entropy_report(matcor.Matroid.uniform(4, 4))
    assert abs(b4["entropy"] - 2.0306) < 1e-4
    assert b4["max_prob"] == Fraction(3, 8)
    assert all(r["holds_2"] for r in matcor.mason_check(matcor.catalog_entry("steiner")["matroid"]))
    g = matcor.golay_self_check(1000)
    assert g["octads"] == 759 and g["steiner_blocks"] == 352 and g["five_subsets_bad"] == 0


def test_alpha():
    s8 = matcor.catalog_entry("s8")["matroid"]
    est = matcor.alpha_lower_bound(s8, strategy="grid", levels=2)
    assert est["best_ratio"] >= Fraction(9, 8)
    assert matcor.correlation_ratio(s8, est["i"], est["j"], est["weights"]) == est["best_ratio"]


def test_json_round_trip():
    m = matcor.catalog_entry("transversal")["matroid"]
    back = matcor.Matroid.from_json(m.to_json())
    assert matcor.bases(back) == matcor.bases(m)


def test_errors_map_to_exceptions():
    with pytest.raises(matcor.DomainError):
        matcor.correlation_ratio(matcor.Matroid.uniform(3, 3), 0, 1)
    with pytest.raises(matcor.CapacityError):
        matcor.bases(matcor.Matroid.uniform(2, 30))
    with pytest.raises(matcor.InputError):
        matcor.weighted_partition(matcor.Matroid.uniform(2, 4), 0, 1, [1, 0, 1, 1])
    with pytest.raises(matcor.ConfigError):
        matcor.Matroid.linear_gfp(4, 1, [[1]])
    with pytest.raises(ValueError):
        matcor.Matroid.from_json("{broken")


def test_cli_entry_point():
    code, out, err = matcor.run_cli(["verify-examples"])
    assert code == 0 and "4/4 PASS" in err
    code, _, _ = matcor.run_cli(["ratio", "--catalog", "u-2-30"])
    assert code == 3
