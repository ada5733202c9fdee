"""Tests for the command-line front end."""

import io
import json

import pytest

from topocode.cli import EXIT_OK, EXIT_REJECTED, EXIT_USAGE, run

from utils.fixtures import A_UNION_SUM_B, MATRIX_A, MATRIX_B, STAR_MATRICES

P4 = "4 3\n0 1\n1 2\n2 3\n"
C5 = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"
STAR3 = "4 3\n0 1\n0 2\n0 3\n"


def rows_text(rows) -> str:
    return "\n".join(" ".join(map(str, r)) for r in rows) + "\n"


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for name in ("TOPOCODE_SEED", "TOPOCODE_MAX_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    (tmp_path / "p4.g").write_text(P4)
    (tmp_path / "c5.g").write_text(C5)
    (tmp_path / "star3.g").write_text(STAR3)
    (tmp_path / "f.json").write_text(json.dumps({"kind": "graceful", "vertex": [0, 3, 1, 2]}))
    (tmp_path / "bad.json").write_text(json.dumps({"kind": "graceful", "vertex": [0, 1, 2, 3]}))
    (tmp_path / "odd.json").write_text(json.dumps({"kind": "odd-graceful", "vertex": [0, 5, 2, 3]}))
    (tmp_path / "a.m").write_text(rows_text(MATRIX_A))
    (tmp_path / "b.m").write_text(rows_text(MATRIX_B))
    (tmp_path / "s1.m").write_text(rows_text(STAR_MATRICES[0]))
    return tmp_path


def invoke(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


# =============================================================================
# Labelings
# =============================================================================


def test_kinds(workdir):
    code, text = invoke("kinds")
    assert code == EXIT_OK
    assert "graceful" in text


class TestVerify:
    def test_accepted(self, workdir):
        code, text = invoke("verify", "--graph", "p4.g", "--labeling", "f.json")
        assert code == EXIT_OK
        assert text.startswith("graceful: accepted")

    def test_rejected_json(self, workdir):
        code, text = invoke("--json", "verify", "--graph", "p4.g", "--labeling", "bad.json")
        assert code == EXIT_REJECTED
        report = json.loads(text)
        assert report["accepted"] is False
        assert report["violations"]

    def test_kind_override(self, workdir):
        code, _ = invoke("verify", "--kind", "odd-graceful", "--graph", "p4.g", "--labeling", "f.json")
        assert code == EXIT_REJECTED

    def test_missing_parameter(self, workdir):
        code, _ = invoke("verify", "--kind", "kd-graceful", "--graph", "p4.g", "--labeling", "f.json")
        assert code == EXIT_USAGE


def test_search(workdir):
    code, text = invoke("--json", "search", "--kind", "graceful", "--graph", "p4.g")
    assert code == EXIT_OK
    assert json.loads(text)["labeling"]["vertex"] == [0, 3, 1, 2]


def test_search_finds_nothing(workdir):
    code, _ = invoke("search", "--kind", "graceful", "--graph", "c5.g")
    assert code == EXIT_REJECTED


def test_transform_dual(workdir):
    code, text = invoke("--json", "transform", "--op", "dual", "--graph", "p4.g", "--labeling", "f.json")
    assert code == EXIT_OK
    assert json.loads(text)["labeling"]["vertex"] == [3, 0, 2, 1]


def test_rla_e_image_reports_constant(workdir):
    (workdir / "t.json").write_text(json.dumps({"vertex": [0, 3, 1, 2], "edges": [[0, 1, 3], [1, 2, 2], [2, 3, 1]]}))
    (workdir / "plan.json").write_text(json.dumps({"0": 1}))
    code, text = invoke("--json", "rla", "--algo", "e-image", "--graph", "p4.g", "--labeling", "t.json",
                        "--plan", "plan.json")
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["constant"] == 5
    assert data["reflection"] == 4
    colored = {(u, v): c for u, v, c in data["labeling"]["edges"]}
    assert all(c + colored[(u, v)] == 5 for u, v, c in data["image"]["edges"])


# =============================================================================
# Matrices and strings
# =============================================================================


def test_matrix_union_sum(workdir):
    code, text = invoke("--json", "matrix", "op", "--a", "a.m", "--b", "b.m", "--op", "union-sum")
    assert code == EXIT_OK
    data = json.loads(text)
    assert [data["x"], data["e"], data["y"]] == A_UNION_SUM_B


def test_matrix_check(workdir):
    code, text = invoke("matrix", "check", "--a", "s1.m")
    assert code == EXIT_OK
    assert "degree sequence: [3, 1, 1, 1]" in text


def test_gen_string(workdir):
    assert invoke("gen-string", "--algo", "vo1", "--matrix", "s1.m", "--digits") == (EXIT_OK, "111543234\n")


def test_pnbspp(workdir):
    code, text = invoke("--json", "pnbspp", "--q", "2", "--string", "011132")
    assert code == EXIT_OK
    assert json.loads(text) == [{"x": [0, 1], "e": [1, 3], "y": [1, 2]}]


# =============================================================================
# Degree sequences, groups, self-similar trees
# =============================================================================


def test_degseq_check(workdir):
    assert invoke("degseq", "check", "--sequence", "3,3,1,1")[0] == EXIT_REJECTED
    code, text = invoke("--json", "degseq", "check", "--sequence", "2,2,2", "--realize")
    assert code == EXIT_OK
    assert json.loads(text)["realization"]["p"] == 3


def test_degseq_transform(workdir):
    code, text = invoke("--json", "degseq", "transform", "--sequence", "3,2,2,1", "--op", "increase", "--arg", "k=4")
    assert code == EXIT_OK
    assert json.loads(text)["sequence"] == [4, 4, 3, 3, 2]


def test_degseq_lattice(workdir):
    code, text = invoke("--json", "degseq", "lattice", "--op", "linear-sum", "--base", "2,2,2", "--coeffs", "2")
    assert code == EXIT_OK
    assert json.loads(text)["sequence"] == [4, 4, 4]


def test_group_add_is_one_based(workdir):
    code, text = invoke("group", "add", "--graph", "star3.g", "--colors", "1,2,3,4", "--modulus", "4",
                        "--i", "2", "--j", "3", "--zero", "1")
    assert code == EXIT_OK
    assert text == "F_2 + F_3 (zero F_1) = F_4\n"


def test_degseq_group_is_one_based(workdir):
    code, text = invoke("--json", "degseq", "group", "--degrees", "2,1,1", "--colors", "1,2,1",
                        "--i", "1", "--j", "2", "--zero", "1")
    assert code == EXIT_OK
    assert json.loads(text) == {"index": 2, "colors": [2, 1, 2]}


def test_global_flags_need_full_names(workdir):
    assert invoke("--js", "kinds")[0] == EXIT_USAGE


def test_group_build(workdir):
    code, text = invoke("--json", "group", "build", "--graph", "star3.g", "--colors", "1,2,3,4", "--modulus", "4")
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["laws"]["accepted"] is True
    assert [data["F_2"]["x"], data["F_2"]["e"], data["F_2"]["y"]] == STAR_MATRICES[1]


def test_selfsim(workdir):
    (workdir / "p3.g").write_text("3 2\n0 1\n1 2\n")
    code, text = invoke("--json", "selfsim", "--algo", "a", "--base", "p3.g", "--root", "0")
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["counts"]["vertices"] == 4
    assert data["matches_closed_form"] is True


# =============================================================================
# Authentication
# =============================================================================


def test_auth_derive_and_verify(workdir):
    assert invoke("auth", "derive", "--graph", "p4.g", "--labeling", "f.json", "--out", "pub.bin")[0] == EXIT_OK
    assert invoke("auth", "derive", "--graph", "p4.g", "--labeling", "odd.json", "--out", "priv.json")[0] == EXIT_OK
    (workdir / "spec.json").write_text(json.dumps({"x": [2, 0], "e": [2, -1], "y": [2, -1]}))
    code, text = invoke("auth", "verify", "--pub", "pub.bin", "--priv", "priv.json", "--spec", "spec.json")
    assert code == EXIT_OK
    assert text.startswith("authentication: accepted")
    assert invoke("auth", "verify", "--pub", "pub.bin", "--priv", "priv.json")[0] == EXIT_REJECTED


def test_auth_vector(workdir):
    invoke("auth", "derive", "--graph", "p4.g", "--labeling", "f.json", "--out", "pub.json")
    (workdir / "ops.json").write_text(json.dumps([{"relation": "identity"}]))
    code, _ = invoke("auth", "verify-vector", "--pub", "pub.json", "--priv", "pub.json", "--ops", "ops.json")
    assert code == EXIT_OK


# =============================================================================
# Exit codes and output
# =============================================================================


def test_export_dot(workdir):
    code, text = invoke("export-dot", "--graph", "p4.g", "--labeling", "f.json")
    assert code == EXIT_OK
    assert "0 -- 1;" in text
    assert text.startswith("graph G {")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["verify", "--graph", "p4.g"],
        ["group", "build", "--colors", "1,2"],
        ["verify", "--graph", "missing.g", "--labeling", "f.json"],
        ["degseq", "transform", "--sequence", "1,1"],
    ],
)
def test_usage_errors(workdir, argv):
    assert invoke(*argv)[0] == EXIT_USAGE


def test_version(workdir):
    assert invoke("--version")[0] == EXIT_OK
