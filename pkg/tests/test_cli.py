"""
End-to-end tests of the command line through ordpath.main.main.
"""

import csv
import io
import json

from ordpath.core import PathGraph, serialize_path_graph
from ordpath.extremal import complete_host
from ordpath.main import GHN_COLUMNS, main
from ordpath.records import read_records, sha256_text


def _write_host(tmp_path, host, name="host.txt"):
    path = tmp_path / name
    path.write_text(serialize_path_graph(host), encoding="utf-8")
    return str(path)


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


def test_gen_writes_file_and_prints_digest(tmp_path, capsys):
    out = tmp_path / "ex1.txt"
    assert main(["-o", str(out), "gen", "example1", "--n", "6"]) == 0
    text = out.read_text(encoding="utf-8")
    assert text == "pathgraph 6\nchord 0 3\nchord 0 5\nchord 2 5\n"
    assert capsys.readouterr().out.strip() == f"sha256 {sha256_text(text)}"


def test_gen_to_stdout(capsys):
    """The artifact goes to stdout and its digest to stderr."""
    assert main(["gen", "halfgraph", "--m", "2"]) == 0
    captured = capsys.readouterr()
    assert captured.out == "pattern 4\nedge 0 3\n"
    assert f"sha256 {sha256_text(captured.out)}" in captured.err


def test_gen_missing_parameter(capsys):
    assert main(["gen", "random-host", "--n", "5"]) == 2


def test_classify_catalog_pattern(catalog_dir, capsys):
    assert main(["classify", "-i", str(catalog_dir / "M.pat")]) == 0
    info = _json_out(capsys)
    assert info["crossing"] and info["perfect_matching"]
    assert info["lower"] == "polylog"


def test_pattern_hat(catalog_dir, capsys):
    assert main(["pattern", "hat", "-i", str(catalog_dir / "single_edge.pat")]) == 0
    assert capsys.readouterr().out == "pattern 4\nedge 0 3\nedge 1 2\n"


def test_solve_span(tmp_path, capsys):
    host = _write_host(tmp_path, PathGraph.bare(4))
    assert main(["solve", "span", "-i", host]) == 0
    payload = _json_out(capsys)
    assert payload["vertices"] == [0, 1, 2, 3]
    assert payload["increasing"]


def test_solve_matching_witness(tmp_path, catalog_dir, capsys):
    host = _write_host(tmp_path, PathGraph.of(4, [(0, 2), (1, 3)]))
    assert main(["solve", "matching", "-i", host, "--pattern", str(catalog_dir / "M.pat")]) == 0
    payload = _json_out(capsys)
    assert payload["kind"] == "witness"
    assert payload["positions"] == [0, 1, 2, 3]


def test_solve_usage_errors(tmp_path):
    host = _write_host(tmp_path, PathGraph.bare(4))
    assert main(["solve", "grs", "-i", host]) == 2
    assert main(["solve", "matching", "-i", host]) == 2


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("pathgraph 4\nchord 1 2\n", encoding="utf-8")
    assert main(["solve", "span", "-i", str(bad)]) == 2


def test_missing_file_exit_code(tmp_path):
    assert main(["solve", "span", "-i", str(tmp_path / "nope.txt")]) == 2


def test_cap_exit_code(tmp_path):
    host = _write_host(tmp_path, PathGraph.bare(31))
    assert main(["oracle", "longest", "-i", host]) == 3


def test_oracle_queries(capsys):
    assert main(["oracle", "ramsey", "--q", "2", "--N", "4", "--k", "3"]) == 0
    assert _json_out(capsys)["value"] == str(2 ** 32)
    assert main(["oracle", "s", "--n", "1000"]) == 0
    assert _json_out(capsys)["s"] == 0
    assert main(["oracle", "longest"]) == 2


def test_oracle_ktt(tmp_path, capsys):
    host = _write_host(tmp_path, PathGraph.of(4, [(0, 2), (1, 3)]))
    assert main(["oracle", "ktt", "-i", host, "--t", "2"]) == 0
    assert _json_out(capsys) == {"query": "ktt", "contains": True, "side_a": [0, 3], "side_b": [1, 2]}


def test_ghn_csv(catalog_dir, capsys):
    pattern = str(catalog_dir / "single_edge.pat")
    assert main(["--threads", "1", "ghn", "--pattern", pattern, "--n-from", "2", "--n-to", "4"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert list(rows[0].keys()) == GHN_COLUMNS
    assert [row["ghn"] for row in rows] == ["2", "3", "4"]
    assert [row["count_avoiding"] for row in rows] == ["1", "1", "1"]


def test_ghn_json(catalog_dir, capsys):
    pattern = str(catalog_dir / "single_edge.pat")
    assert main(["--format", "json", "ghn", "--pattern", pattern, "--n", "3"]) == 0
    assert _json_out(capsys)["rows"][0]["ghn"] == 3


def test_csv_only_for_tables(catalog_dir):
    assert main(["--format", "csv", "classify", "-i", str(catalog_dir / "M.pat")]) == 2


def test_main_thm_biclique(tmp_path, capsys):
    host = _write_host(tmp_path, complete_host(7))
    assert main(["main-thm", "-i", host, "--t", "1", "--force-s", "3"]) == 0
    outcome = _json_out(capsys)
    assert outcome["stage"] == "ktt"
    assert outcome["ktt"] == {"side_a": [2], "side_b": [4]}
    assert outcome["lemmas"]["passed"]


def test_verify_quick_core(capsys):
    assert main(["verify", "core", "--quick"]) == 0
    assert _json_out(capsys)["passed"]


def test_record_is_reproducible(tmp_path, capsys):
    records = tmp_path / "runs.jsonl"
    args = ["--record", str(records), "gen", "random-host", "--n", "8", "--density", "0.3", "--seed", "5"]
    assert main(args) == 0
    assert main(args) == 0
    first, second = read_records(records)
    assert first.command == "gen"
    assert first.seed == 5
    assert first.reproducible_part() == second.reproducible_part()
    assert first.payload_digest() == second.payload_digest()
