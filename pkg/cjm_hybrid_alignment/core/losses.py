"""MLE, ranking, policy-gradient and preference losses with their EWC-augmented forms"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/losses.ipynb.

# %% auto #0
__all__ = ['mean_of', 'mle_loss', 'ranking_loss', 'ppo_loss', 'dpo_margin', 'dpo_loss', 'ewc_penalty', 'hpa_loss',
           'ifa_loss']

# %% ../../nbs/core/losses.ipynb #losses-imports
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from ..errors import DomainError, ShapeError
from ..models import DPOSettings, KLSettings
from .importance import Snapshot
from .model import ParameterSet, reward_forward, sequence_logprob
from .tensor import Tensor, no_grad

Weights = Mapping[str, Union[float, np.ndarray]]

# %% ../../nbs/core/losses.ipynb #losses-helpers
def mean_of(
    terms: Sequence[Tensor]  # Scalar tensors
) -> Tensor:  # Their arithmetic mean
    if not terms:
        raise DomainError("cannot average an empty list of losses")
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    return total * (1.0 / len(terms)) if len(terms) > 1 else total

def _distinct(y_w, y_l):
    if list(y_w) == list(y_l):
        raise DomainError("preferred and dispreferred responses are identical (y_w == y_l)")

def _reference_logprob(params_old: ParameterSet, x, y) -> float:
    with no_grad():
        return sequence_logprob(params_old, x, y).item()

# %% ../../nbs/core/losses.ipynb #losses-mle
def mle_loss(
    params: ParameterSet,  # Policy
    x: Sequence[int],  # Prompt ids
    y: Sequence[int]  # Gold response ids
) -> Tensor:  # -log p(y | x), response tokens only
    """Negative log-likelihood of the gold response."""
    return -sequence_logprob(params, x, y)

# %% ../../nbs/core/losses.ipynb #losses-ranking
def ranking_loss(
    params_rm: ParameterSet,  # Reward model
    x: Sequence[int],  # Prompt ids
    y_w: Sequence[int],  # Preferred response ids
    y_l: Sequence[int]  # Dispreferred response ids
) -> Tensor:  # -log sigmoid(r(y_w) - r(y_l))
    """Pairwise logistic ranking loss of a reward model."""
    _distinct(y_w, y_l)
    return -(reward_forward(params_rm, x, y_w) - reward_forward(params_rm, x, y_l)).log_sigmoid()

# %% ../../nbs/core/losses.ipynb #losses-ppo
def ppo_loss(
    params: ParameterSet,  # Current policy
    params_old: ParameterSet,  # Anchor policy (IFA-trained), held constant
    x: Sequence[int],  # Prompt ids
    samples: Sequence[Sequence[int]],  # Responses sampled from the current policy
    rewards: Sequence[float],  # Reward of each sample (constants)
    kl: KLSettings,  # KL coefficient and shaping mode
    baselines: Optional[Sequence[float]] = None  # Value estimates subtracted from the rewards
) -> Tensor:  # Sample mean of -lp * r - alpha * (lp - lp_old)
    """Sequence-level policy-gradient loss with a KL regulariser toward the anchor policy."""
    if not len(samples):
        raise DomainError("ppo_loss needs at least one sample")
    if len(rewards) != len(samples) or (baselines is not None and len(baselines) != len(samples)):
        raise ShapeError("ppo-loss", [(len(samples),), (len(rewards),)], "one reward (and baseline) per sample")
    terms = []
    for i, y in enumerate(samples):
        adv = float(rewards[i]) - (float(baselines[i]) if baselines is not None else 0.0)
        lp = sequence_logprob(params, x, y)
        lp_old = _reference_logprob(params_old, x, y)
        if kl.shaping:
            # KL folded into a constant reward
            terms.append(lp * -(adv - kl.alpha * (lp.item() - lp_old)))
        else:
            terms.append(lp * -adv - (lp - lp_old) * kl.alpha)
    return mean_of(terms)

# %% ../../nbs/core/losses.ipynb #losses-dpo
def dpo_margin(
    params: ParameterSet,  # Policy
    params_old: ParameterSet,  # Reference policy
    x: Sequence[int],  # Prompt ids
    y_w: Sequence[int],  # Preferred response ids
    y_l: Sequence[int],  # Dispreferred response ids
    beta: float = 1.0  # Scale of the implicit reward
) -> Tensor:  # beta * (log-ratio of y_w - log-ratio of y_l)
    """Implicit-reward margin between a preferred and a dispreferred response."""
    _distinct(y_w, y_l)
    ratio_w = sequence_logprob(params, x, y_w) - _reference_logprob(params_old, x, y_w)
    ratio_l = sequence_logprob(params, x, y_l) - _reference_logprob(params_old, x, y_l)
    return (ratio_w - ratio_l) * beta

def dpo_loss(
    params: ParameterSet,  # Policy
    params_old: ParameterSet,  # Reference policy (IFA-trained), held constant
    x: Sequence[int],  # Prompt ids
    y_w: Sequence[int],  # Preferred response ids
    y_l: Sequence[int],  # Dispreferred response ids
    settings: DPOSettings  # beta
) -> Tensor:  # -log sigmoid(implicit-reward margin)
    """Direct preference optimisation loss."""
    return -dpo_margin(params, params_old, x, y_w, y_l, settings.beta).log_sigmoid()

# %% ../../nbs/core/losses.ipynb #losses-ewc
def ewc_penalty(
    params: ParameterSet,  # Live parameters
    anchor: Union[Snapshot, ParameterSet, Mapping[str, np.ndarray]],  # Opposite-side snapshot
    F: Weights,  # Per-unit scalar or per-neuron array weights
    lam: float = 1.0  # Balance factor
) -> Tensor:  # sum_i (lam / 2) * F_i * ||theta_i - theta*_i||^2
    """Quadratic tether of every unit toward its anchor values."""
    if lam < 0:
        raise DomainError(f"EWC lambda must be >= 0, got {lam}")
    ref = anchor.arrays if isinstance(anchor, Snapshot) else anchor.arrays() if isinstance(anchor, ParameterSet) else anchor
    missing = [k for k in params.names if k not in ref or k not in F]
    if missing:
        raise DomainError(f"anchor or importance map lacks units {missing[:3]}")
    dtype = params.tensors()[0].dtype
    if lam == 0:
        return Tensor(np.zeros((), dtype=dtype))
    terms = []
    for name in params.names:
        theta = params[name]
        star = np.asarray(ref[name])
        if star.shape != theta.shape:
            raise ShapeError("ewc-penalty", [theta.shape, star.shape], name)
        diff = theta - Tensor(star, dtype=theta.dtype)
        w = F[name]
        if np.ndim(w) == 0:
            terms.append((diff * diff).sum() * (0.5 * lam * float(w)))
        else:
            terms.append((diff * diff * Tensor(np.asarray(w), dtype=theta.dtype)).sum() * (0.5 * lam))
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    return total

def hpa_loss(
    base: Tensor,  # ppo_loss or dpo_loss output
    params: ParameterSet,  # Live parameters
    anchor: Union[Snapshot, ParameterSet, Mapping[str, np.ndarray]],  # Latest IFA snapshot
    F: Weights,  # F^IFA
    lam: float = 1.0  # Balance factor
) -> Tensor:  # base + penalty
    return base + ewc_penalty(params, anchor, F, lam)

def ifa_loss(
    params: ParameterSet,  # Live parameters
    x: Sequence[int],  # Prompt ids
    y: Sequence[int],  # Gold response ids
    anchor: Optional[Union[Snapshot, ParameterSet, Mapping[str, np.ndarray]]] = None,  # Latest HPA snapshot
    F: Optional[Weights] = None,  # F^HPA
    lam: float = 1.0,  # Balance factor
    first_subset: bool = False  # Plain MLE on the first IFA subset
) -> Tensor:  # mle_loss (+ penalty)
    """MLE loss tethered to the most recent preference-aligned parameters."""
    base = mle_loss(params, x, y)
    if first_subset:
        return base
    if anchor is None or F is None:
        raise DomainError("ifa_loss needs an anchor and importance weights after the first subset")
    return base + ewc_penalty(params, anchor, F, lam)
