"""
End-to-end tests of the lnk command line through main(argv).
"""

import json

import pytest

from main import main

GOERITZ = {
    "kind": "goeritz",
    "matrix": [[-3]],
    "euler_number": 0,
    "components": [{"name": "K1", "v": [1]}, {"name": "K2", "v": [2]}],
    "lk": [{"pair": ["K1", "K2"], "value": 0}],
}

LENS = {
    "kind": "framed_link",
    "matrix": [[3]],
    "components": [{"name": "K1", "v": [1]}, {"name": "K2", "v": [1]}],
    "lk": [{"pair": ["K1", "K2"], "value": 0}],
}


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    """No stray .env file or LNK_* variables."""
    monkeypatch.chdir(tmp_path)
    for name in ("LNK_PRECISION", "LNK_PRECISION_CAP", "LNK_LOG_LEVEL", "LNK_SELFTEST_SCALE"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def trefoil_path(write_document, trefoil_document):
    return str(write_document(trefoil_document, "trefoil.json"))


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


class TestClassical:
    def test_alexander(self, capsys, trefoil_path):
        assert run(capsys, "alexander", "--input", trefoil_path) == (0, "1 - t + t^2")

    def test_conway(self, capsys, trefoil_path):
        assert run(capsys, "conway", "--input", trefoil_path) == (0, "1 + z^2")

    def test_signature(self, capsys, trefoil_path):
        assert run(capsys, "signature", "--input", trefoil_path) == (0, "-2")

    def test_json_output(self, capsys, trefoil_path):
        code, out = run(capsys, "alexander", "--input", trefoil_path, "--format", "json")
        assert code == 0
        assert json.loads(out) == {"command": "alexander", "result": {"text": "1 - t + t^2"}}

    def test_validate(self, capsys, trefoil_path):
        assert run(capsys, "validate", "--input", trefoil_path) == (
            0,
            "valid seifert 2x2, 2 components",
        )

    def test_conway_phase(self, capsys, trefoil_path):
        assert run(capsys, "conway-phase", "--input", trefoil_path) == (0, "-1")


class TestCovers:
    def test_branched_lk(self, capsys, trefoil_path):
        code, out = run(
            capsys, "branched-lk", "--input", trefoil_path, "--p", "3", "--pair", "K1@1,K1@2"
        )
        assert (code, out) == (0, "-1/2")

    def test_not_a_rational_homology_sphere(self, capsys, trefoil_path):
        code, _ = run(
            capsys, "branched-lk", "--input", trefoil_path, "--p", "6", "--pair", "K1@1,K2@2"
        )
        assert code == 2

    def test_lambda_t(self, capsys, trefoil_path):
        code, out = run(capsys, "lambda-t", "--input", trefoil_path, "--pair", "K1,K1")
        assert (code, out) == (0, "(1 - t)/(1 - t + t^2)")

    def test_lambda_omega_json(self, capsys, trefoil_path):
        code, out = run(
            capsys, "lambda-omega", "--input", trefoil_path, "--pair", "K1,K1", "--format", "json"
        )
        assert code == 0
        value = json.loads(out)["result"]["value"]
        assert value["real"].startswith("-0.33333")
        assert value["precision_bits"] >= 128

    def test_double_cover(self, capsys, write_document):
        path = str(write_document(GOERITZ))
        code, out = run(capsys, "double-cover", "--input", path, "--pair", "K1@1,K2@1")
        assert (code, out) == (0, "2/3")

    def test_homology_order_check(self, capsys, trefoil_path):
        code, out = run(capsys, "homology-order", "--input", trefoil_path, "--p", "3", "--check")
        assert (code, out) == (0, "4")

    def test_alexander_root(self, capsys, trefoil_path):
        code, _ = run(capsys, "tl-signature", "--input", trefoil_path, "--omega", "1/6")
        assert code == 2


class TestSurgeryAndCrossing:
    def test_surgery_lk(self, capsys, write_document):
        path = str(write_document(LENS))
        assert run(capsys, "surgery-lk", "--input", path, "--pair", "K1,K2") == (0, "-1/3")

    def test_crossing_alexander(self, capsys, trefoil_path):
        code, out = run(
            capsys, "crossing-alexander", "--input", trefoil_path, "--v", "1,0", "--n", "1"
        )
        assert (code, out) == (0, "2 - 3*t + 2*t^2")

    def test_crossing_signature(self, capsys, trefoil_path):
        code, out = run(
            capsys, "crossing-signature", "--input", trefoil_path, "--v", "1,0", "--n", "1"
        )
        assert (code, out) == (0, "-2")

    def test_crossing_matrix_document_validates(self, capsys, trefoil_path, write_document):
        code, out = run(
            capsys,
            "crossing-matrix",
            "--input",
            trefoil_path,
            "--v",
            "1,0",
            "--n",
            "1",
            "--format",
            "json",
        )
        assert code == 0
        document = json.loads(out)["result"]["document"]
        path = str(write_document(document, "changed.json"))
        assert run(capsys, "alexander", "--input", path) == (0, "2 - 3*t + 2*t^2")


class TestErrors:
    def test_missing_file(self, capsys, tmp_path):
        code, _ = run(capsys, "alexander", "--input", str(tmp_path / "absent.json"))
        assert code == 1

    def test_wrong_document_kind(self, capsys, write_document):
        path = str(write_document(GOERITZ))
        assert run(capsys, "alexander", "--input", path)[0] == 1

    def test_usage_error(self, capsys):
        assert main(["alexander"]) == 1

    def test_unknown_component(self, capsys, trefoil_path):
        assert run(capsys, "lambda-t", "--input", trefoil_path, "--pair", "K1,K9")[0] == 1

    def test_bad_precision(self, capsys, trefoil_path):
        assert run(capsys, "alexander", "--input", trefoil_path, "--precision", "8")[0] == 1

    def test_bad_environment(self, capsys, monkeypatch, trefoil_path):
        monkeypatch.setenv("LNK_PRECISION", "many")
        assert run(capsys, "alexander", "--input", trefoil_path)[0] == 1


class TestSelftest:
    def test_selected_property(self, capsys):
        code, out = run(
            capsys, "selftest", "--only", "alexander-symmetry,surgery-duality", "--scale", "0.1"
        )
        assert code == 0
        assert out.endswith("0 failed")

    def test_report_file(self, capsys, tmp_path):
        report = tmp_path / "report.json"
        code, _ = run(
            capsys, "selftest", "--only", "unimodular-split", "--scale", "0.1",
            "--report", str(report),
        )
        assert code == 0
        saved = json.loads(report.read_text(encoding="utf-8"))
        assert saved["seed"] == 0
        assert saved["summary"]["failed"] == 0

    def test_unknown_property(self, capsys):
        assert run(capsys, "selftest", "--only", "no-such-property")[0] == 1
