"""Line-delimited record files for instruction-following and preference data"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/data/records.ipynb.

# %% auto #0
__all__ = ['RECORD_FIELDS', 'iter_jsonl', 'record_from_dict', 'load_records', 'write_records', 'records_hash',
           'ifa_tokens', 'preference_tokens']

# %% ../../nbs/data/records.ipynb #records-imports
import json
import logging
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, Iterator, List, Sequence, Tuple, Union

from ..errors import RecordError
from ..models import PreferenceRecord, PromptResponseRecord
from ..utils import atomic_write_text, sha256_json
from .tokenizer import encode_prompt, encode_response

logger = logging.getLogger(__name__)

Record = Union[PromptResponseRecord, PreferenceRecord]

# %% ../../nbs/data/records.ipynb #records-fields
RECORD_FIELDS: Dict[str, frozenset] = {
    "ifa": frozenset({"prompt", "response"}),
    "preference": frozenset({"prompt", "chosen", "rejected"}),
}

def _kind(kind: str) -> str:
    kind = str(getattr(kind, "value", kind)).lower()
    kind = {"hpa": "preference", "pref": "preference"}.get(kind, kind)
    if kind not in RECORD_FIELDS:
        raise RecordError(f"unknown record kind {kind!r}; expected one of {sorted(RECORD_FIELDS)}")
    return kind

# %% ../../nbs/data/records.ipynb #records-iter-jsonl
def iter_jsonl(
    path: Union[str, Path]  # Line-delimited JSON file (UTF-8, LF or CRLF)
) -> Iterator[Tuple[int, Dict[str, Any]]]:  # (1-based line number, object)
    """Yield the flat objects of a line-delimited file, skipping blank lines."""
    path = Path(path)
    if not path.is_file():
        raise RecordError(f"{path}: file not found")
    with open(path, "rb") as f:
        for lineno, raw in enumerate(f, start=1):
            try:
                line = raw.decode("utf-8").rstrip("\r\n")
            except UnicodeDecodeError as e:
                raise RecordError(f"{path}:{lineno}: invalid UTF-8 at byte {e.start}") from None
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise RecordError(f"{path}:{lineno}: malformed line ({e.msg})") from None
            if not isinstance(obj, dict):
                raise RecordError(f"{path}:{lineno}: expected a flat object, got {type(obj).__name__}")
            yield lineno, obj

# %% ../../nbs/data/records.ipynb #records-from-dict
def record_from_dict(
    obj: Dict[str, Any],  # Parsed object
    kind: str  # "ifa" or "preference"
) -> Record:  # Validated record
    """Build a record from an object whose field set matches `kind` exactly."""
    kind = _kind(kind)
    expected = RECORD_FIELDS[kind]
    if set(obj) != expected:
        raise RecordError(f"wrong field set for {kind} record: got {sorted(obj)}, expected {sorted(expected)}")
    if not all(isinstance(v, str) for v in obj.values()):
        raise RecordError("record fields must be strings")
    if kind == "ifa":
        return PromptResponseRecord(prompt=obj["prompt"], response=obj["response"])
    return PreferenceRecord(prompt=obj["prompt"], chosen=obj["chosen"], rejected=obj["rejected"])

# %% ../../nbs/data/records.ipynb #records-load
def load_records(
    path: Union[str, Path],  # Record file
    kind: str  # "ifa" or "preference"
) -> List[Record]:  # Records in file order
    """Parse and validate every line of a record file."""
    records = []
    for lineno, obj in iter_jsonl(path):
        try:
            records.append(record_from_dict(obj, kind))
        except RecordError as e:
            raise RecordError(f"{path}:{lineno}: {e}") from None
    logger.info("Loaded %d %s records from %s", len(records), _kind(kind), path)
    return records

def write_records(
    records: Sequence[Record],  # Records to persist
    path: Union[str, Path]  # Destination file
) -> Path:  # Written path
    """Write records as line-delimited JSON with stable key order."""
    text = "".join(json.dumps(asdict(r), sort_keys=True, ensure_ascii=False) + "\n" for r in records)
    return atomic_write_text(path, text)

def records_hash(
    records: Sequence[Record]  # Records to fingerprint
) -> str:  # Hex digest
    """Content hash of a record list, used in run manifests."""
    return sha256_json([asdict(r) for r in records])

# %% ../../nbs/data/records.ipynb #records-tokens
def ifa_tokens(
    record: PromptResponseRecord  # Prompt/response record
) -> Tuple[List[int], List[int]]:  # (prompt ids, response ids)
    return encode_prompt(record.prompt), encode_response(record.response)

def preference_tokens(
    record: PreferenceRecord  # Preference record
) -> Tuple[List[int], List[int], List[int]]:  # (prompt ids, chosen ids, rejected ids)
    return encode_prompt(record.prompt), encode_response(record.chosen), encode_response(record.rejected)
