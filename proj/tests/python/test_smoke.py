import json

import pytest

import auslab


def test_normal_form_and_multiply():
    # alpha_0^* alpha_0 from e_1 equals alpha_1 alpha_1^*
    assert auslab.normal_form(3, 1, [(0, True), (0, False)]) == (1, 1, 1)
    assert auslab.multiply(3, (0, 1, 0), (1, 1, 0)) == (0, 2, 0)
    assert auslab.multiply(3, (0, 1, 0), (2, 1, 0)) is None
    with pytest.raises(ValueError):
        auslab.normal_form(3, 0, [(0, False), (0, False)])


def test_hilbert_totals():
    rep = auslab.hilbert(4, 6)
    assert rep["total"] == [4 * (d + 1) for d in range(7)]
    assert len(rep["matrix"]) == 7


def test_groups():
    assert auslab.parse_group("rot(1),refl(0)", 4)["order"] == 8
    assert len(auslab.subgroups(4)) == 10
    assert auslab.classify(4, "refl(0),refl(2)") == "NotIso"
    with pytest.raises(ValueError):
        auslab.parse_group("rot(", 3)


def test_invariant_series():
    dims = auslab.invariant_dims(3, "rot(1),refl(0)", 8)
    assert dims == [d // 2 + 1 for d in range(9)]


def test_auslander():
    rep = auslab.auslander(3, "rot(1)", 14)
    assert rep["verdict_empirical"] == "Iso"
    assert rep["agree"] is True
    rep = auslab.auslander(4, "refl(0),refl(2)", 20)
    assert rep["verdict_empirical"] == "NotIso"
    assert rep["pertinency"] == 1


def test_scan_and_cli(tmp_path):
    payload = auslab.scan([3], -1, 2)
    assert payload["row_count"] == 6
    assert payload["disagreements"] == 0
    code, out, _ = auslab.run_cli(["auslander", "--n", "3", "--group", "rot(1)", "--degree", "14"])
    assert code == 0
    assert json.loads(out)["schema_version"] == auslab.REPORT_SCHEMA_VERSION
    code, _, err = auslab.run_cli(["auslander", "--n", "3", "--group", "rot(1"])
    assert code == 1
    assert "byte" in err


def test_verify_suite():
    rep = auslab.verify("relations", 3, 8)
    assert rep["ok"]
    assert rep["flags"]
