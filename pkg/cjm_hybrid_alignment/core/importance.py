"""Parameter-change tracking and per-unit importance weights"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/importance.ipynb.

# %% auto #0
__all__ = ['Snapshot', 'ImportanceLedger', 'unit_change', 'accumulate', 'compute_F', 'fisher_diagonal',
           'accumulate_fisher', 'freeze_mask']

# %% ../../nbs/core/importance.ipynb #importance-imports
import logging
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Callable, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import CheckpointError, DomainError, ShapeError
from ..models import ModelConfig, Side, SnapshotLabel
from .checkpoint import label_from_dict, label_to_dict, read_container, write_container
from .model import ParameterSet, sequence_logprob
from .tensor import Tensor, backward

logger = logging.getLogger(__name__)

# %% ../../nbs/core/importance.ipynb #importance-snapshot
@dataclass(frozen=True)
class Snapshot:
    """Immutable copy of a parameter set, taken at the end of a phase."""

    label: SnapshotLabel  # Phase that produced it
    arrays: Mapping[str, np.ndarray]  # Read-only values by unit name
    config: Optional[ModelConfig] = None  # Model shape of the source set
    path: Optional[str] = None  # Backing file when memory-mapped

    @classmethod
    def capture(
        cls,
        params: ParameterSet,  # Live parameters
        label: SnapshotLabel  # Where the capture happens
    ) -> "Snapshot":  # Detached read-only copy
        arrays = {}
        for k, v in params.arrays().items():
            a = np.array(v, copy=True)
            a.setflags(write=False)
            arrays[k] = a
        return cls(label, MappingProxyType(arrays), params.config)

    @classmethod
    def from_checkpoint(
        cls,
        path: Union[str, Path]  # Container written by `save` or `save_checkpoint`
    ) -> "Snapshot":  # Snapshot whose arrays are lazily memory-mapped
        manifest, arrays = read_container(path, mmap=True)
        if manifest.get("kind") != "params":
            raise CheckpointError(f"{path}: container holds {manifest.get('kind')!r}, not parameters")
        label = label_from_dict(manifest.get("label")) or SnapshotLabel("unknown")
        config = ModelConfig(**manifest["config"]) if manifest.get("config") else None
        return cls(label, MappingProxyType(arrays), config, str(path))

    def save(
        self,
        path: Union[str, Path]  # Destination file
    ) -> "Snapshot":  # Same snapshot backed by the written file
        """Persist the snapshot and reopen it memory-mapped."""
        meta = {"kind": "params", "param_kind": "snapshot", "label": label_to_dict(self.label),
                "config": asdict(self.config) if self.config is not None else None}
        write_container(path, dict(self.arrays), meta)
        return Snapshot.from_checkpoint(path)

    @property
    def names(self) -> List[str]:
        return list(self.arrays)

    def __getitem__(self, name: str) -> np.ndarray:
        return self.arrays[name]

    def __contains__(self, name: str) -> bool:
        return name in self.arrays

def _as_arrays(obj) -> Mapping[str, np.ndarray]:
    if isinstance(obj, Snapshot):
        return obj.arrays
    if isinstance(obj, ParameterSet):
        return obj.arrays()
    return obj

# %% ../../nbs/core/importance.ipynb #importance-unit-change
def unit_change(
    before: Union[Snapshot, ParameterSet, Mapping[str, np.ndarray]],  # Parameters before the phase
    after: Union[Snapshot, ParameterSet, Mapping[str, np.ndarray]]  # Parameters after the phase
) -> Dict[str, float]:  # C per unit: mean squared neuron difference
    """Per-unit mean of squared differences between two parameter states."""
    a, b = _as_arrays(before), _as_arrays(after)
    if list(a) != list(b):
        raise ShapeError("unit-change", [(len(a),), (len(b),)], "snapshots hold different unit names")
    change = {}
    for k in a:
        x, y = np.asarray(a[k], dtype=np.float64), np.asarray(b[k], dtype=np.float64)
        if x.shape != y.shape:
            raise ShapeError("unit-change", [x.shape, y.shape], k)
        change[k] = float(np.mean((x - y) ** 2)) if x.size else 0.0
    return change

# %% ../../nbs/core/importance.ipynb #importance-ledger
class ImportanceLedger:
    """Per-side history of parameter changes with accumulated changes and importance weights."""

    def __init__(
        self,
        units: Sequence[str],  # Unit names tracked, in parameter order
        f_max: float = 50.0  # Sum of importance weights per side
    ):
        if not units:
            raise DomainError("ledger needs at least one unit")
        if not f_max > 0:
            raise DomainError(f"F_max must be > 0, got {f_max}")
        self.units: Tuple[str, ...] = tuple(units)
        self.f_max = float(f_max)
        self.history: Dict[Side, List[Dict[str, float]]] = {Side.IFA: [], Side.HPA: []}
        self.phase_ids: Dict[Side, List[str]] = {Side.IFA: [], Side.HPA: []}
        self.ac: Dict[Side, Dict[str, float]] = {Side.IFA: {}, Side.HPA: {}}
        self.F: Dict[Side, Dict[str, float]] = {Side.IFA: {}, Side.HPA: {}}
        self.fisher: Dict[Side, Dict[str, np.ndarray]] = {Side.IFA: {}, Side.HPA: {}}

    def __repr__(self):
        return (f"ImportanceLedger(units={len(self.units)}, f_max={self.f_max}, "
                f"IFA={self.count(Side.IFA)}, HPA={self.count(Side.HPA)})")

    def count(self, side: Side) -> int:  # Completed rounds recorded for a side
        return len(self.history[Side(side)])

    def replay_ac(
        self,
        side: Side  # Side to recompute
    ) -> Dict[str, float]:  # AC re-derived from the stored C history
        """Recompute AC by summing the stored history."""
        hist = self.history[Side(side)]
        return {u: float(math.fsum(c[u] for c in hist)) for u in self.units}

    def update_F(
        self,
        side: Side  # Side whose weights are refreshed from its current AC
    ) -> Dict[str, float]:  # New F map
        """Recompute F for a side from its accumulated changes."""
        side = Side(side)
        if not self.ac[side]:
            raise DomainError(f"no {side.value} parameter changes recorded yet")
        self.F[side] = compute_F(self.ac[side], self.f_max)
        return dict(self.F[side])

    # Serialisation ------------------------------------------------------------

    def save(
        self,
        path: Union[str, Path]  # Destination file
    ) -> Path:  # Written path
        """Write the ledger as a container of 64-bit little-endian vectors."""
        arrays: Dict[str, np.ndarray] = {}
        for side in Side:
            s = side.value
            for i, c in enumerate(self.history[side]):
                arrays[f"C/{s}/{i}"] = np.array([c[u] for u in self.units], dtype="<f8")
            if self.ac[side]:
                arrays[f"AC/{s}"] = np.array([self.ac[side][u] for u in self.units], dtype="<f8")
            if self.F[side]:
                arrays[f"F/{s}"] = np.array([self.F[side][u] for u in self.units], dtype="<f8")
            for u, v in self.fisher[side].items():
                arrays[f"fisher/{s}/{u}"] = np.asarray(v, dtype="<f8")
        meta = {"kind": "ledger", "ledger_units": list(self.units), "f_max": self.f_max,
                "phase_ids": {side.value: list(self.phase_ids[side]) for side in Side}}
        return write_container(path, arrays, meta)

    @classmethod
    def load(
        cls,
        path: Union[str, Path]  # Ledger file
    ) -> "ImportanceLedger":  # Exact reconstruction
        manifest, arrays = read_container(path)
        if manifest.get("kind") != "ledger":
            raise CheckpointError(f"{path}: container holds {manifest.get('kind')!r}, not a ledger")
        ledger = cls(manifest["ledger_units"], manifest["f_max"])
        for side in Side:
            s = side.value
            ledger.phase_ids[side] = list(manifest["phase_ids"][s])
            for i in range(len(ledger.phase_ids[side])):
                ledger.history[side].append(dict(zip(ledger.units, arrays[f"C/{s}/{i}"].tolist())))
            if f"AC/{s}" in arrays:
                ledger.ac[side] = dict(zip(ledger.units, arrays[f"AC/{s}"].tolist()))
            if f"F/{s}" in arrays:
                ledger.F[side] = dict(zip(ledger.units, arrays[f"F/{s}"].tolist()))
            prefix = f"fisher/{s}/"
            ledger.fisher[side] = {k[len(prefix):]: np.array(v) for k, v in arrays.items() if k.startswith(prefix)}
        return ledger

# %% ../../nbs/core/importance.ipynb #importance-accumulate
def accumulate(
    ledger: ImportanceLedger,  # Ledger to update in place
    side: Side,  # Side of the completed phase
    change: Mapping[str, float],  # C map of the phase
    phase_id: Optional[str] = None  # Phase that produced the change
) -> Dict[str, float]:  # Updated AC map (copy)
    """Append a C map to a side's history and add it to the running AC."""
    side = Side(side)
    missing = [u for u in ledger.units if u not in change]
    extra = [u for u in change if u not in ledger.units]
    if missing or extra:
        raise DomainError(f"change map does not match ledger units (missing {missing[:3]}, unexpected {extra[:3]})")
    c = {u: float(change[u]) for u in ledger.units}
    if any(not math.isfinite(v) or v < 0 for v in c.values()):
        raise DomainError("parameter changes must be finite and nonnegative")
    prev = ledger.ac[side]
    ledger.history[side].append(c)
    ledger.phase_ids[side].append(phase_id or f"{side.value}{ledger.count(side)}")
    ledger.ac[side] = {u: prev.get(u, 0.0) + c[u] for u in ledger.units}
    return dict(ledger.ac[side])

# %% ../../nbs/core/importance.ipynb #importance-compute-f
def compute_F(
    change: Mapping[str, float],  # C or AC map
    f_max: float = 50.0  # Total importance mass
) -> Dict[str, float]:  # F per unit; sums to f_max
    """Softmax over units, scaled by `f_max`."""
    if not change:
        raise DomainError("cannot compute importance weights of an empty change map")
    if not f_max > 0:
        raise DomainError(f"F_max must be > 0, got {f_max}")
    names = list(change)
    c = np.array([change[k] for k in names], dtype=np.float64)
    e = np.exp(c - c.max())
    return dict(zip(names, (f_max * e / e.sum()).tolist()))

# %% ../../nbs/core/importance.ipynb #importance-fisher
LogProbFn = Callable[[ParameterSet, Sequence[int], Sequence[int]], Tensor]

def fisher_diagonal(
    params: ParameterSet,  # Parameters at which to estimate
    dataset: Sequence[Tuple[Sequence[int], Sequence[int]]],  # (x, y) token pairs
    logprob_fn: LogProbFn = sequence_logprob  # Differentiable log p(y | x)
) -> Dict[str, np.ndarray]:  # Per-neuron mean squared gradient, one array per unit
    """Empirical Fisher diagonal: squared gradients of log p(y|x), averaged over the data."""
    if not len(dataset):
        raise DomainError("fisher_diagonal needs a nonempty dataset")
    tensors = params.tensors()
    acc = {t.name: np.zeros(t.shape, dtype=np.float64) for t in tensors}
    for x, y in dataset:
        grads = backward(logprob_fn(params, x, y), wrt=tensors)
        for k, g in grads.items():
            acc[k] += np.asarray(g, dtype=np.float64) ** 2
    n = float(len(dataset))
    return {k: v / n for k, v in acc.items()}

def accumulate_fisher(
    ledger: ImportanceLedger,  # Ledger to update in place
    side: Side,  # Side the estimate belongs to
    fisher: Mapping[str, np.ndarray]  # Per-neuron estimate of one round
) -> Dict[str, np.ndarray]:  # Running per-neuron sum for the side
    """Add a round's Fisher diagonal to the side's running total."""
    side = Side(side)
    prev = ledger.fisher[side]
    ledger.fisher[side] = {k: prev[k] + np.asarray(v, dtype=np.float64) if k in prev else np.array(v, dtype=np.float64)
                           for k, v in fisher.items()}
    return ledger.fisher[side]

# %% ../../nbs/core/importance.ipynb #importance-freeze
def freeze_mask(
    F: Mapping[str, float],  # Importance weight per unit
    fraction: float = 0.2  # Share of units to freeze, in [0, 1)
) -> FrozenSet[str]:  # Names of the most important units
    """Top ceil(fraction * n) units by F; ties go to the unit listed first in `F`."""
    if not 0 <= fraction < 1:
        raise DomainError(f"freeze fraction must lie in [0, 1), got {fraction}")
    k = math.ceil(fraction * len(F) - 1e-9)
    position = {name: i for i, name in enumerate(F)}
    ranked = sorted(F, key=lambda name: (-F[name], position[name]))
    return frozenset(ranked[:k])
