import io
import json

import pytest

from fpmine.cli import main
from fpmine.ingest import read_transactions


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_compare_text(example_file):
    code, out, _ = run(["compare", "--min-support", "2", "--input", str(example_file), "--format", "text"])
    assert code == 0
    assert "6 - itemsets for C2" in out and "4 - itemsets for C2" in out


def test_mine_listing(example_file):
    code, out, _ = run(["mine", "--algo", "apriori", "--min-support", "2", "--input", str(example_file),
                        "--list-itemsets"])
    assert code == 0
    assert "===== L3 =====\nB,C,E / 2\n" in out


def test_mine_dhp_json(example_file):
    code, out, _ = run(["mine", "--algo", "dhp", "--min-support", "2", "--input", str(example_file),
                        "--format", "json"])
    assert code == 0
    obj = json.loads(out)
    assert [lv["db_rows_after"] for lv in obj["levels"]] == [4, 2, 0]
    assert obj["input"]["buckets"] == 7


def test_oracle(example_file):
    code, out, _ = run(["oracle", "--min-support", "2", "--input", str(example_file)])
    assert code == 0
    assert len(out.splitlines()) == 9
    code, out, _ = run(["oracle", "--min-support", "2", "--input", str(example_file), "--max-k", "1"])
    assert out.splitlines() == ["A / 2", "B / 3", "C / 3", "E / 3"]


def test_buckets_and_base_flags(example_file):
    code, out, _ = run(["compare", "--min-support", "2", "--input", str(example_file), "--buckets", "1",
                        "--format", "json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["input"]["buckets"] == 1
    assert obj["levels"][1]["dhp"]["candidates"] == 6


def test_hash_until_level_flag(example_file):
    code, out, _ = run(["mine", "--algo", "dhp", "--min-support", "2", "--input", str(example_file),
                        "--hash-until-level", "0", "--format", "json"])
    assert code == 0
    assert json.loads(out)["levels"][1]["candidates"] == 6


def test_ratio_equals_ceiling_absolute(example_file):
    a = run(["compare", "--min-support-ratio", "0.3", "--input", str(example_file), "--format", "json"])
    b = run(["compare", "--min-support", "2", "--input", str(example_file), "--format", "json"])
    assert a[0] == 0 and a[1] == b[1]


@pytest.mark.parametrize("argv", [
    ["compare", "--min-support", "2", "--min-support-ratio", "0.5", "--input", "x"],
    ["compare", "--min-support", "2"],
    ["mine", "--min-support", "2", "--input", "x"],
    ["compare", "--min-support", "2", "--input", "/nonexistent/file.txt"],
    ["bogus"],
    [],
])
def test_usage_errors(argv):
    code, _, err = run(argv)
    assert code == 1
    assert "usage error" in err


def test_data_errors(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"A,,B\n")
    assert run(["compare", "--min-support", "1", "--input", str(bad)])[0] == 2
    bad.write_bytes(b"\xff\xfe\n")
    assert run(["oracle", "--min-support", "1", "--input", str(bad)])[0] == 2
    good = tmp_path / "good.txt"
    good.write_text("A,B\n")
    assert run(["compare", "--min-support", "0", "--input", str(good)])[0] == 2
    assert run(["compare", "--min-support", "1", "--input", str(good), "--buckets", "0"])[0] == 2


def test_disagreement_exit_code(example_file, monkeypatch):
    from fpmine import report
    from fpmine.errors import MinerDisagreement

    def boom(*args, **kwargs):
        raise MinerDisagreement(2, ["A,C / 2"], [])

    monkeypatch.setattr(report, "_check_agreement", boom)
    code, _, err = run(["compare", "--min-support", "2", "--input", str(example_file)])
    assert code == 3 and "k=2" in err


def test_gen_roundtrip(tmp_path):
    path = tmp_path / "syn.txt"
    code, _, _ = run(["gen", "--items", "10", "--txns", "30", "--mean-size", "3", "--seed", "42",
                      "--output", str(path)])
    assert code == 0
    db = read_transactions(path)
    assert len(db) == 30
    first = path.read_bytes()
    run(["gen", "--items", "10", "--txns", "30", "--mean-size", "3", "--seed", "42", "--output", str(path)])
    assert path.read_bytes() == first


def test_gen_spec_error(tmp_path):
    code, _, _ = run(["gen", "--items", "3", "--txns", "1", "--mean-size", "5", "--seed", "1",
                      "--output", str(tmp_path / "x")])
    assert code == 2


def test_oracle_scale_error(tmp_path):
    path = tmp_path / "wide.txt"
    path.write_text(",".join(f"i{j:02d}" for j in range(25)) + "\n")
    assert run(["oracle", "--min-support", "1", "--input", str(path)])[0] == 2
