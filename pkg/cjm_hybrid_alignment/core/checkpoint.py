"""Binary container for parameter sets, snapshots and ledgers"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/checkpoint.ipynb.

# %% auto #0
__all__ = ['MAGIC', 'FORMAT_VERSION', 'encode_container', 'write_container', 'read_container', 'label_to_dict',
           'label_from_dict', 'save_checkpoint', 'load_checkpoint']

# %% ../../nbs/core/checkpoint.ipynb #checkpoint-imports
import json
import logging
import struct
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import numpy as np

from ..errors import CheckpointError
from ..models import ModelConfig, Side, SnapshotLabel
from ..utils import atomic_write_bytes
from .model import ParameterSet

logger = logging.getLogger(__name__)

# %% ../../nbs/core/checkpoint.ipynb #checkpoint-format
MAGIC = b"HBATCKPT"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<8sQ")  # magic, manifest length

def encode_container(
    arrays: Mapping[str, np.ndarray],  # Named arrays in payload order
    meta: Optional[Dict[str, Any]] = None  # Extra manifest fields (config, label, kind, ...)
) -> bytes:  # Header + JSON manifest + little-endian row-major payload
    """Serialise named arrays into the container layout."""
    units, chunks, offset = [], [], 0
    for name, arr in arrays.items():
        arr = np.asarray(arr)
        le = np.ascontiguousarray(arr, dtype=arr.dtype.newbyteorder("<"))
        raw = le.tobytes(order="C")
        units.append({"name": name, "shape": list(arr.shape), "dtype": le.dtype.str, "offset": offset, "nbytes": len(raw)})
        chunks.append(raw)
        offset += len(raw)
    manifest = dict(meta or {})
    manifest.update(format_version=FORMAT_VERSION, units=units)
    blob = json.dumps(manifest, sort_keys=True).encode("utf-8")
    return _HEADER.pack(MAGIC, len(blob)) + blob + b"".join(chunks)

def write_container(
    path: Union[str, Path],  # Destination file
    arrays: Mapping[str, np.ndarray],  # Named arrays
    meta: Optional[Dict[str, Any]] = None  # Extra manifest fields
) -> Path:  # Written path
    return atomic_write_bytes(path, encode_container(arrays, meta))

def read_container(
    path: Union[str, Path],  # Container file
    mmap: bool = False  # Memory-map payloads read-only instead of copying them
) -> Tuple[Dict[str, Any], Dict[str, np.ndarray]]:  # (manifest, arrays by name)
    """Parse a container written by `write_container`."""
    path = Path(path)
    try:
        with open(path, "rb") as f:
            head = f.read(_HEADER.size)
            if len(head) < _HEADER.size:
                raise CheckpointError(f"{path}: truncated header")
            magic, n = _HEADER.unpack(head)
            if magic != MAGIC:
                raise CheckpointError(f"{path}: not a checkpoint container (bad magic)")
            manifest = json.loads(f.read(n).decode("utf-8"))
            payload = None if mmap else f.read()
    except OSError as e:
        raise CheckpointError(f"{path}: {e}") from None
    except (UnicodeDecodeError, json.JSONDecodeError):
        raise CheckpointError(f"{path}: corrupt manifest") from None
    if manifest.get("format_version") != FORMAT_VERSION:
        raise CheckpointError(f"{path}: unsupported format version {manifest.get('format_version')}")
    start = _HEADER.size + n
    arrays: Dict[str, np.ndarray] = {}
    for u in manifest["units"]:
        dtype, shape = np.dtype(u["dtype"]), tuple(u["shape"])
        if u["nbytes"] == 0:
            arr = np.zeros(shape, dtype=dtype)
        elif mmap:
            arr = np.memmap(path, dtype=dtype, mode="r", offset=start + u["offset"], shape=shape)
        else:
            raw = payload[u["offset"]:u["offset"] + u["nbytes"]]
            if len(raw) != u["nbytes"]:
                raise CheckpointError(f"{path}: payload of {u['name']!r} is truncated")
            arr = np.frombuffer(raw, dtype=dtype).reshape(shape)
        arrays[u["name"]] = arr.astype(dtype.newbyteorder("="), copy=False)
    return manifest, arrays

# %% ../../nbs/core/checkpoint.ipynb #checkpoint-labels
def label_to_dict(label: Optional[SnapshotLabel]) -> Optional[Dict[str, Any]]:
    if label is None:
        return None
    return {"phase_id": label.phase_id, "side": label.side.value if label.side else None, "subset": label.subset}

def label_from_dict(d: Optional[Dict[str, Any]]) -> Optional[SnapshotLabel]:
    if d is None:
        return None
    return SnapshotLabel(d["phase_id"], Side(d["side"]) if d.get("side") else None, int(d.get("subset", 0)))

# %% ../../nbs/core/checkpoint.ipynb #checkpoint-params
def save_checkpoint(
    params: ParameterSet,  # Parameters to persist
    path: Union[str, Path],  # Destination file
    label: Optional[SnapshotLabel] = None  # Where the parameters were captured
) -> Path:  # Written path
    """Write a parameter set with its config and label; bit-exact round trip."""
    meta = {
        "kind": "params",
        "param_kind": params.kind,
        "config": asdict(params.config) if params.config is not None else None,
        "label": label_to_dict(label),
    }
    out = write_container(path, params.arrays(), meta)
    logger.debug("Wrote checkpoint %s (%d units)", out, len(params))
    return out

def load_checkpoint(
    path: Union[str, Path]  # Checkpoint file
) -> ParameterSet:  # Writable parameter set
    """Load a parameter set written by `save_checkpoint`."""
    manifest, arrays = read_container(path)
    if manifest.get("kind") != "params":
        raise CheckpointError(f"{path}: container holds {manifest.get('kind')!r}, not parameters")
    config = ModelConfig(**manifest["config"]) if manifest.get("config") else None
    return ParameterSet({k: np.array(v, copy=True) for k, v in arrays.items()}, config, manifest.get("param_kind", "lm"))
