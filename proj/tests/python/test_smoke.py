import json
import os
from pathlib import Path

import pytest

import dgmf

DATA = Path(os.environ.get("DGMF_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
BUNDLES = DATA / "bundles"


def test_normalize_poly():
    assert dgmf.normalize_poly("y*x + x*y", ["x", "y"]) == "2*x*y"
    with pytest.raises(dgmf.InputError):
        dgmf.normalize_poly("x + q", ["x", "y"])


def test_e1_pipeline_and_mf2():
    st = dgmf.run_pipeline(dgmf.example("E1"))
    assert st.all_passed
    assert st.r == "1"
    assert st.sigma == ["1", "0", "0", "0"]
    mf = st.matrix_factorization("MF2")
    assert len(mf["g_even"]) == 6
    assert all(passed for _, passed, _ in mf["checks"])


def test_e2_r_not_unit():
    st = dgmf.run_pipeline(dgmf.load_bundle(BUNDLES / "e2.json"))
    assert st.r == "u"
    with pytest.raises(dgmf.RNotUnit):
        st.matrix_factorization("MF2")
    res = st.resolution("N", 10)
    assert res["first_periodic"] == 5
    assert res["ranks"][-1] == 11
    assert all(passed for _, passed, _ in res["checks"])


def test_e3_from_differentials():
    b = dgmf.load_bundle(BUNDLES / "e3_differentials.json")
    assert not b.has_multiplication
    with pytest.raises(dgmf.InputError):
        dgmf.run_pipeline(b)
    solved = b.solve_multiplication(seed=1)
    assert all(passed for _, passed, _ in solved.validate())
    st = dgmf.run_pipeline(solved)
    assert st.all_passed
    assert st.beta0 == "x*y*z*w"
    assert all(passed for _, passed, _ in st.cone_checks())


def test_bundle_round_trip():
    text = (BUNDLES / "e1.json").read_text()
    assert dgmf.parse_bundle(text).to_json() == text


def test_cli_exit_codes(tmp_path):
    assert dgmf.cli_validate(BUNDLES / "e1.json", tmp_path / "v", True) == 0
    assert dgmf.cli_validate(BUNDLES / "e1_fault.json", tmp_path / "f") == 1
    assert dgmf.cli_validate(BUNDLES / "e1_truncated.json", tmp_path / "t") == 2
    assert dgmf.cli_build(BUNDLES / "e2.json", tmp_path / "b", mf2=True) == 3
    assert dgmf.cli_build(BUNDLES / "e1.json", tmp_path / "a", mf2=True, resolution="acute") == 0
    report = json.loads((tmp_path / "a" / "report.json").read_text())
    assert report["results"]["mf2"]["rank_even"] == 6
