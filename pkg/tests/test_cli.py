import json

import pytest

from greenstone import cli, core, formats
from greenstone.biact import regular_biact


@pytest.fixture()
def t2_file(tmp_path):
    s = core.generate_from_transformations(2, [(1, 0), (0, 0)])
    path = tmp_path / "t2.json"
    formats.dump(s, path)
    return path


@pytest.fixture()
def triv_files(tmp_path):
    triv = core.validate_table(1, [[0]])
    s_path = tmp_path / "triv.json"
    formats.dump(triv, s_path)
    b_path = tmp_path / "trivbiact.json"
    formats.dump(regular_biact(triv), b_path)
    return s_path, b_path


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestAnalyze:
    def test_t2_summary_line(self, capsys, t2_file):
        code, out, _ = run(capsys, "analyze", str(t2_file))
        assert code == 0
        assert "L:3 R:2 J:2 H:3 D:2; stable: true" in out

    def test_missing_file_is_a_validation_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "analyze", str(tmp_path / "nope.json"))
        assert code == 2

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{")
        code, _, err = run(capsys, "analyze", str(bad))
        assert code == 2
        assert "byte offset" in err


class TestUsage:
    def test_no_arguments(self, capsys):
        assert run(capsys, )[0] == 4

    def test_unknown_flag(self, capsys, t2_file):
        assert run(capsys, "analyze", "--frobnicate", str(t2_file))[0] == 4

    def test_unknown_claim_id(self, capsys):
        assert run(capsys, "verify", "--suite", "nope")[0] == 4

    def test_construct_missing_parts(self, capsys, t2_file, tmp_path):
        code, _, err = run(capsys, "construct", "usta", "--s", str(t2_file),
                           "--out", str(tmp_path / "u.json"))
        assert code == 4 and "--biact" in err

    def test_catalog_show_without_name(self, capsys):
        assert run(capsys, "catalog", "show")[0] == 4

    def test_enum_biacts_need_files(self, capsys, tmp_path):
        code, _, _ = run(capsys, "enum", "--biacts", "--out", str(tmp_path / "d"))
        assert code == 4


class TestCommands:
    def test_eggbox_text(self, capsys, t2_file):
        code, out, _ = run(capsys, "eggbox", str(t2_file))
        assert code == 0 and "D-class 0" in out

    def test_eggbox_dot(self, capsys, t2_file):
        code, out, _ = run(capsys, "eggbox", str(t2_file), "--dot", "--d-class", "0")
        assert code == 0 and out.startswith("digraph")

    def test_index(self, capsys, t2_file):
        code, out, _ = run(capsys, "index", "--semigroup", str(t2_file), "--sub", "0,2")
        assert code == 0 and "green index: 3" in out

    def test_catalog_chain(self, capsys):
        code, out, _ = run(capsys, "catalog", "show", "bicyclic",
                           "--chain", "L", "--depth", "5")
        assert code == 0
        elements = json.loads(out.splitlines()[0])
        assert elements == [[0, 0], [0, 1], [0, 2], [0, 3], [0, 4]]
        assert "strictly descending" in out

    def test_catalog_show_sheet(self, capsys):
        code, out, _ = run(capsys, "catalog", "show", "nat-plus")
        assert code == 0
        payload = json.loads(out)
        assert payload["sheet"]["M_L"]["value"] is False

    def test_catalog_list(self, capsys):
        code, out, _ = run(capsys, "catalog", "list")
        assert code == 0 and "bicyclic" in out

    def test_construct_roundtrip(self, capsys, triv_files, tmp_path):
        s_path, b_path = triv_files
        out_path = tmp_path / "usta.json"
        code, _, _ = run(capsys, "construct", "usta", "--s", str(s_path),
                         "--t", str(s_path), "--biact", str(b_path),
                         "--out", str(out_path))
        assert code == 0
        rebuilt = formats.load(out_path)
        assert rebuilt.order == 4

    def test_enum_writes_files(self, capsys, tmp_path):
        out_dir = tmp_path / "census"
        code, out, _ = run(capsys, "enum", "--order", "2", "--out", str(out_dir))
        assert code == 0
        files = sorted(out_dir.glob("*.json"))
        assert len(files) == 5
        for f in files:
            formats.load(f)  # every written instance re-validates

    def test_verify_subset_and_report(self, capsys, tmp_path):
        report = tmp_path / "rep.json"
        code, out, _ = run(capsys, "verify", "--suite", "P3.6",
                           "--random-biacts", "20", "--report", str(report))
        assert code == 0
        payload = json.loads(report.read_text())
        assert payload["all_passed"] is True

    def test_probe(self, capsys):
        code, out, _ = run(capsys, "probe")
        assert code == 0 and "no counterexample" in out

    def test_claim_failure_exits_three(self, capsys, monkeypatch):
        from greenstone import verify as ver

        def broken(env):
            return ver.ClaimOutcome(ok=False, instances=1, notes="forced")

        claim = ver.Claim("P3.6", "forced failure", "finite-sampled",
                          "must-hold", broken)
        monkeypatch.setitem(ver.REGISTRY, "P3.6", claim)
        code, out, _ = run(capsys, "verify", "--suite", "P3.6",
                           "--random-biacts", "5")
        assert code == 3
        assert "FAIL P3.6" in out
