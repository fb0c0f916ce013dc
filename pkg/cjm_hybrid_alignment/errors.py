"""Exception hierarchy shared by every pipeline stage"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/errors.ipynb.

# %% auto #0
__all__ = ['HbatError', 'ShapeError', 'DomainError', 'RecordError', 'CheckpointError', 'ConfigError', 'NumericAbort']

# %% ../nbs/errors.ipynb #errors-imports
from typing import Any, Optional, Sequence

# %% ../nbs/errors.ipynb #errors-base
class HbatError(Exception):
    """Base class for all errors raised by this library."""
    pass

# %% ../nbs/errors.ipynb #errors-shape
class ShapeError(HbatError, ValueError):
    """A primitive or container received tensors whose shapes do not conform."""

    def __init__(
        self,
        op_id: str,  # Primitive or operation that rejected the shapes
        shapes: Sequence[Any],  # Offending shapes, in argument order
        detail: str = "",  # Extra context
    ):
        self.op_id = op_id
        self.shapes = [tuple(s) for s in shapes]
        msg = f"{op_id}: incompatible shapes {self.shapes}"
        super().__init__(f"{msg} ({detail})" if detail else msg)

# %% ../nbs/errors.ipynb #errors-domain
class DomainError(HbatError, ValueError):
    """An input lies outside the domain of an operation (e.g. log of a non-positive value)."""
    pass

# %% ../nbs/errors.ipynb #errors-record
class RecordError(HbatError, ValueError):
    """A training or judgment record is malformed or violates a record invariant."""
    pass

# %% ../nbs/errors.ipynb #errors-checkpoint
class CheckpointError(HbatError, IOError):
    """A checkpoint or ledger container is unreadable or does not match the expected layout."""
    pass

# %% ../nbs/errors.ipynb #errors-config
class ConfigError(HbatError, ValueError):
    """A run configuration is invalid: unknown key, bad value, missing path or busy run directory."""
    pass

# %% ../nbs/errors.ipynb #errors-numeric
class NumericAbort(HbatError, ArithmeticError):
    """A training phase produced a non-finite loss and was aborted."""

    def __init__(
        self,
        phase_id: str,  # Phase that aborted (e.g. "HPA2")
        step: int,  # Optimizer step at which the loss went non-finite
        last_good: Optional[Any] = None,  # Path or ParameterSet of the last good checkpoint
    ):
        self.phase_id = phase_id
        self.step = step
        self.last_good = last_good
        where = f" (last good checkpoint: {last_good})" if isinstance(last_good, str) else ""
        super().__init__(f"non-finite loss in phase {phase_id} at step {step}{where}")
