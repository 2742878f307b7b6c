"""
Run records: what a CLI invocation consumed and produced, as one JSON line.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field

from . import __version__

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class RunRecord(BaseModel):
    """
    Reproducibility record of one command.

    Everything except elapsed_ms is a pure function of the inputs, parameters
    and seed, so two runs with the same arguments serialize identical payloads.
    """

    command: str
    inputs: Dict[str, str] = Field(default_factory=dict)
    parameters: Dict[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = None
    payload: Any = None
    version: str = __version__
    schema_version: int = SCHEMA_VERSION
    elapsed_ms: Optional[float] = None

    def reproducible_part(self) -> Dict[str, Any]:
        return self.model_dump(exclude={"elapsed_ms"})

    def payload_digest(self) -> str:
        return sha256_text(canonical_json(self.reproducible_part()))


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def sha256_file(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def hash_inputs(paths) -> Dict[str, str]:
    """Map each input file name to the sha256 of its bytes."""
    return {str(p): sha256_file(p) for p in paths if p is not None}


def append_record(record: RunRecord, path) -> None:
    """Append the record as one JSON line."""
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "a", encoding="utf-8") as f:
        f.write(json.dumps(record.model_dump(), sort_keys=True) + "\n")
    logger.info(f"💾 run record appended to {path}")


def read_records(path):
    """All records of a JSONL file, in order."""
    records = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if line:
                records.append(RunRecord.model_validate_json(line))
    return records
