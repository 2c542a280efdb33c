import csv
import io
import json
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from cli import EXIT_INPUT, EXIT_OK, EXIT_VERIFY_FAILED, main, sweep_angles
from monoclass.catalog import tilde_r
from monoclass.errors import ArgumentError, InputError
from monoclass.operators import ClassificationReport, classify
from monoclass.utils import parse_matrix, parse_relation_rows, parse_rows, read_source
from monoclass.verify import run_suites


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_inline(capsys):
    code, out, _ = run(capsys, "classify", "--inline", "[[1,-2],[3,1]]")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["code"] == "11011"
    assert report["monotone"] is True

    code, out, _ = run(capsys, "classify", "--inline", "[[0,-1],[1,0]]")
    assert json.loads(out)["code"] == "00010"


def test_classify_file_and_csv(capsys, tmp_path):
    path = tmp_path / "identity.json"
    path.write_text("[[1, 0], [0, 1]]", encoding="utf-8")
    code, out, _ = run(capsys, "classify", "--file", str(path))
    assert code == EXIT_OK
    assert json.loads(out)["code"] == "11111"

    code, out, _ = run(capsys, "classify", "--inline", "# tilde R\n1,-2\n3,1\n")
    assert json.loads(out)["code"] == "11011"


def test_classify_text_format(capsys):
    code, out, _ = run(capsys, "classify", "--inline", "[[1,-2],[3,1]]", "--format", "text")
    assert code == EXIT_OK
    assert "11011" in out
    assert "alpha_star" in out


def test_classify_csv_format(capsys):
    code, out, _ = run(capsys, "classify", "--inline", "[[1,-2],[3,1]]", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    row = rows[0]
    assert row["kind"] == "operator"
    assert row["code"] == "11011"
    assert row["monotone"] == "true"
    assert float(row["lambda_min_sym"]) == pytest.approx(0.5)
    assert float(row["alpha_star"]) == pytest.approx(classify(tilde_r()).alpha_star, rel=1e-9)
    assert float(row["cycle_sum"]) < 0
    assert list(row)[:3] == ["kind", "dim", "code"]

    code, out, _ = run(capsys, "classify", "--inline", "[[0,0],[0,0]]", "--format", "csv")
    assert next(csv.DictReader(io.StringIO(out)))["alpha_star"] == "unbounded"


def test_classify_relation_csv_format(capsys):
    code, out, _ = run(
        capsys, "classify-relation", "--inline", "[[1,0,0,0,1,0],[0,0,0,0,0,1]]", "--format", "csv"
    )
    assert code == EXIT_OK
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["code"] == "00101"
    assert (row["graph_dim"], row["dom_dim"], row["a0_dim"], row["maximal"]) == ("2", "1", "1", "false")
    assert "alpha_star" not in row
    assert "multivalued" in row["notes"]


def test_classify_json_round_trip(capsys):
    _, out, _ = run(capsys, "classify", "--inline", "[[1,-2],[3,1]]")
    assert ClassificationReport.model_validate(json.loads(out)) == classify(tilde_r()).rounded(12)


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--inline", "[[1, 2], [3"],
        ["classify", "--inline", "[[1, 2, 3], [4, 5, 6]]"],
        ["classify", "--inline", "[[1]]", "--file", "m.json"],
        ["classify"],
        ["classify", "--file", "does-not-exist.json"],
        ["classify-relation", "--inline", "[[1, 0, 1]]"],
        ["classify", "--inline", "[[1]]", "--tol", "0"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_INPUT
    assert out == ""
    assert err.startswith("error: ")


def test_classify_relation(capsys):
    code, out, _ = run(capsys, "classify-relation", "--inline", "[[1,0,0,0,1,0],[0,0,0,0,0,1]]")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["code"] == "00101"
    assert report["kind"] == "relation"
    assert report["relation"]["maximal"] is False

    code, out, _ = run(capsys, "classify-relation", "--inline", "1,0,1,0\n0,0,0,1")
    report = json.loads(out)
    assert report["code"] == "11111"
    assert report["relation"]["maximal"] is True


def test_table_r2(capsys):
    code, out, _ = run(capsys, "table", "r2")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    existing = {row["example"]: row for row in rows if row["status"] == "exists"}
    assert set(existing) == {"rotation_half_pi", "projection_2_1", "rotation_1_3", "identity"}


def test_table_hilbert_json(capsys):
    code, out, _ = run(capsys, "table", "hilbert", "--alpha-decay", "2", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    infinite = [row for row in rows if row["status"] == "infinite-dimensional only"]
    assert {row["pattern"] for row in infinite} == {"10010", "11010"}
    assert all(len(row["alpha_decay"]) == 2 for row in infinite)


def test_table_unknown_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "r3"])
    assert exc.value.code == 2


def test_sweep_flips_at_pi_over_n(capsys):
    code, out, _ = run(capsys, "sweep", "--n-max", "3", "--grid", "5")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2 * len(sweep_angles(3, 5))
    for row in rows:
        theta, n = float(row["theta"]), int(row["n"])
        expected = theta <= math.pi / n + 1e-9
        assert (row["is_n_cyclic"] == "true") is expected, row
    zero_rows = [row for row in rows if float(row["theta"]) == 0.0]
    assert all(row["is_n_cyclic"] == "true" for row in zero_rows)


def test_sweep_angles():
    angles = sweep_angles(3, 5)
    assert angles[0] == 0.0
    assert angles == sorted(angles)
    assert max(a for a in angles if a <= math.pi / 2) == pytest.approx(math.pi / 2)
    # The π/2 edge (n = 2) is straddled, so the grid reaches just past π/2.
    assert angles[-1] == pytest.approx(math.pi / 2 + 1e-4, abs=1e-12)
    assert any(a == pytest.approx(math.pi / 3 + 1e-4, abs=1e-12) for a in angles)
    with pytest.raises(ArgumentError):
        sweep_angles(1, 5)
    with pytest.raises(ArgumentError):
        sweep_angles(3, 1)


def test_sweep_rejects_small_n(capsys):
    code, _, err = run(capsys, "sweep", "--n-max", "1")
    assert code == EXIT_INPUT
    assert "--n-max" in err


def test_verify_rotation_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rotation")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["suites"]["rotation"]["failed"] == 0
    assert payload["suites"]["rotation"]["passed"] == 7 * 52
    assert payload["failures"] == []


def test_verify_detects_injected_fault(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "products", "--inject-fault")
    assert code == EXIT_VERIFY_FAILED
    payload = json.loads(out)
    assert payload["ok"] is False
    assert payload["failures"]
    assert {failure["suite"] for failure in payload["failures"]} == {"products"}


def test_run_suites_arguments():
    with pytest.raises(ArgumentError):
        run_suites(suites=["nope"])
    with pytest.raises(ArgumentError):
        run_suites(budget=-1, suites=["rotation"])


def test_figure(capsys):
    code, out, _ = run(capsys, "figure", "hilbert")
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("setting,code,")
    assert len(out.splitlines()) == 17

    code, out, _ = run(capsys, "figure", "r2", "--format", "dot")
    assert out.startswith("digraph")


def test_parse_rows():
    assert parse_rows("# comment\n1, 2\n\n3, 4\n") == [[1.0, 2.0], [3.0, 4.0]]
    assert parse_rows("[[1, 2.5]]") == [[1.0, 2.5]]
    for bad in ("", "[[1, NaN]]", "1,2\n3", "1,x", "[1, 2]", "[[]]"):
        with pytest.raises(InputError):
            parse_rows(bad)
    with pytest.raises(InputError):
        parse_matrix("1,2\n3,4\n5,6")
    with pytest.raises(InputError):
        parse_relation_rows("1,2,3")


def test_read_source():
    assert read_source("[[1]]", None) == ("[[1]]", "--inline")
    with pytest.raises(InputError):
        read_source(None, None)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
