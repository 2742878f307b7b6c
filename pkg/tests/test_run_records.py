"""
Tests for run records: hashing, JSON-lines persistence and reproducibility.
"""

import hashlib

from ordpath import __version__
from ordpath.records import (
    RunRecord,
    append_record,
    canonical_json,
    hash_inputs,
    read_records,
    sha256_file,
    sha256_text,
)


def test_canonical_json_sorts_keys():
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


def test_file_and_text_hashes_agree(tmp_path):
    path = tmp_path / "h.txt"
    path.write_text("pathgraph 3\nchord 0 2\n", encoding="utf-8")
    expected = hashlib.sha256(b"pathgraph 3\nchord 0 2\n").hexdigest()
    assert sha256_file(path) == expected
    assert sha256_text("pathgraph 3\nchord 0 2\n") == expected
    assert hash_inputs([path, None]) == {str(path): expected}


def test_record_defaults():
    record = RunRecord(command="gen")
    assert record.version == __version__
    assert record.schema_version == 1
    assert record.inputs == {} and record.seed is None


def test_elapsed_time_is_not_reproducible_part():
    """Two runs differing only in timing share a digest."""
    a = RunRecord(command="ghn", parameters={"n": 5}, payload={"ghn": 5}, elapsed_ms=1.0)
    b = RunRecord(command="ghn", parameters={"n": 5}, payload={"ghn": 5}, elapsed_ms=250.0)
    assert "elapsed_ms" not in a.reproducible_part()
    assert a.payload_digest() == b.payload_digest()
    c = RunRecord(command="ghn", parameters={"n": 6}, payload={"ghn": 6})
    assert a.payload_digest() != c.payload_digest()


def test_append_and_read_records(tmp_path):
    path = tmp_path / "nested" / "runs.jsonl"
    first = RunRecord(command="gen", seed=3, payload={"vertices": 8})
    second = RunRecord(command="solve", payload={"kind": "path"}, elapsed_ms=2.5)
    append_record(first, path)
    append_record(second, path)
    assert path.read_text(encoding="utf-8").count("\n") == 2
    assert read_records(path) == [first, second]


def test_record_schema():
    schema = RunRecord.model_json_schema()
    assert schema["required"] == ["command"]
    assert {"payload", "version", "schema_version", "elapsed_ms"} <= set(schema["properties"])
