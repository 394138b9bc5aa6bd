import tqschur


def test_basis_count():
    assert tqschur.basis_count(2, 2) == 32
    assert len(tqschur.basis(2, 2)) == 32


def test_act_weight():
    # K_1 scales a basis element by v^{row sum 1}
    out = tqschur.act(["K1"], [[2, 0], [0, 0]], [[0, 0], [0, 0]])
    assert len(out) == 1
    assert out[0]["coeff"] in ("v^2", "1*v^2")
    assert out[0]["index"]["even"] == [[2, 0], [0, 0]]


def test_relations_and_structure():
    rep = tqschur.check_relations(2, 1)
    assert rep["ok"] and rep["checks"] > 0
    rep = tqschur.verify_structure(2, 2)
    assert rep["ok"]


def test_decompose():
    cert = tqschur.decompose([1, 1], 2)
    checks = cert["checks"]
    assert cert["direct_sum"]
    assert checks["counts_ok"] and checks["closed"] and checks["hw_ok"]
    assert checks["sampling_ok"] and not checks["failures"]
    assert len(cert["summands"]) == 2
    assert all(s["dim"] == 8 for s in cert["summands"])


def test_oracle():
    checked, mismatches = tqschur.oracle_check(2, 1)
    assert checked > 0 and mismatches == 0
