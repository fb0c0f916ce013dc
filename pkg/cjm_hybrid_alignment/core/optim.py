"""Momentum SGD over a parameter set with optional frozen units"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/optim.ipynb.

# %% auto #0
__all__ = ['MomentumSGD']

# %% ../../nbs/core/optim.ipynb #optim-imports
import math
from typing import Dict, FrozenSet, Iterable, Mapping

import numpy as np

from ..errors import DomainError
from ..models import OptimSettings
from .model import ParameterSet

# %% ../../nbs/core/optim.ipynb #optim-sgd
class MomentumSGD:
    """Stochastic gradient descent with heavy-ball momentum and global-norm clipping."""

    def __init__(
        self,
        params: ParameterSet,  # Parameters updated in place
        settings: OptimSettings,  # Step size, momentum and clip norm
        frozen: Iterable[str] = ()  # Units whose values never change
    ):
        self.params = params
        self.settings = settings
        self.frozen: FrozenSet[str] = frozenset(frozen)
        unknown = self.frozen - set(params.names)
        if unknown:
            raise DomainError(f"cannot freeze unknown units {sorted(unknown)[:3]}")
        self.velocity: Dict[str, np.ndarray] = {}
        self.steps = 0
        self.reset()

    def reset(self):
        """Zero the momentum buffers."""
        self.velocity = {k: np.zeros_like(v) for k, v in self.params.arrays().items() if k not in self.frozen}
        self.steps = 0

    def grad_norm(
        self,
        grads: Mapping[str, np.ndarray]  # Gradient per unit name
    ) -> float:  # L2 norm over the trainable units
        return math.sqrt(sum(float(np.sum(np.square(g, dtype=np.float64))) for k, g in grads.items() if k in self.velocity))

    def step(
        self,
        grads: Mapping[str, np.ndarray]  # Gradient per unit name
    ) -> float:  # Gradient norm before clipping
        """Apply one update; frozen units and units without a gradient are skipped."""
        norm = self.grad_norm(grads)
        if not math.isfinite(norm):
            raise DomainError("gradient is not finite")
        s = self.settings
        scale = min(1.0, s.max_grad_norm / (norm + 1e-12)) if s.max_grad_norm > 0 else 1.0
        for name, v in self.velocity.items():
            if name not in grads:
                continue
            data = self.params[name].data
            g = np.asarray(grads[name], dtype=data.dtype)
            v *= data.dtype.type(s.momentum)
            v += g * data.dtype.type(scale)
            data -= data.dtype.type(s.lr) * v
        self.steps += 1
        return norm
