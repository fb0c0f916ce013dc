"""Seed streams, hashing and file helpers for reproducible runs"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/utils.ipynb.

# %% auto #0
__all__ = ['SeedStreams', 'derive_seed', 'sha256_file', 'sha256_json', 'atomic_write_bytes', 'atomic_write_text']

# %% ../nbs/utils.ipynb #utils-imports
import hashlib
import json
import os
import zlib
from pathlib import Path
from typing import Any, Sequence, Union

import numpy as np

# %% ../nbs/utils.ipynb #utils-seed-streams
class SeedStreams:
    """Named random streams split from a single root seed."""

    def __init__(
        self,
        root: int  # Root seed of the run
    ):
        self.root = int(root)

    def seed(
        self,
        *names: Union[str, int]  # Stream path, e.g. ("sampling", "HPA2")
    ) -> int:  # 32-bit seed of the stream
        """Derive a deterministic seed for a named stream."""
        return derive_seed(self.root, *names)

    def rng(
        self,
        *names: Union[str, int]  # Stream path
    ) -> np.random.Generator:  # Fresh generator of the stream
        """Fresh numpy generator for a named stream."""
        return np.random.default_rng(self.seed(*names))

    def child(
        self,
        *names: Union[str, int]  # Stream path of the child root
    ) -> "SeedStreams":  # Streams rooted at the named stream
        """Streams rooted under a named child stream."""
        return SeedStreams(self.seed(*names))

# %% ../nbs/utils.ipynb #utils-derive-seed
def derive_seed(
    root: int,  # Parent seed
    *names: Union[str, int, Sequence[int]]  # Stream names, ints or token sequences
) -> int:  # Derived 32-bit seed
    """Mix a root seed with names into a new seed via numpy's SeedSequence."""
    entropy = [int(root) & 0xFFFFFFFF]
    for name in names:
        if isinstance(name, (int, np.integer)):
            entropy.append(int(name) & 0xFFFFFFFF)
        elif isinstance(name, str):
            entropy.append(zlib.crc32(name.encode("utf-8")))
        else:
            entropy.append(zlib.crc32(np.asarray(list(name), dtype="<i8").tobytes()))
    return int(np.random.SeedSequence(entropy).generate_state(1)[0])

# %% ../nbs/utils.ipynb #utils-hashing
def sha256_file(
    path: Union[str, Path]  # File to hash
) -> str:  # Hex digest
    """SHA-256 digest of a file's bytes."""
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()

def sha256_json(
    obj: Any  # JSON-serialisable object
) -> str:  # Hex digest of its canonical encoding
    """SHA-256 digest of an object's canonical JSON encoding."""
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode("utf-8")).hexdigest()

# %% ../nbs/utils.ipynb #utils-atomic-write
def atomic_write_bytes(
    path: Union[str, Path],  # Destination file
    data: bytes  # Content
) -> Path:  # Written path
    """Write bytes via a temporary file and rename so readers never see partial files."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "wb") as f:
        f.write(data)
    os.replace(tmp, path)
    return path

def atomic_write_text(
    path: Union[str, Path],  # Destination file
    text: str  # UTF-8 content
) -> Path:  # Written path
    """Atomic UTF-8 text write."""
    return atomic_write_bytes(path, text.encode("utf-8"))
