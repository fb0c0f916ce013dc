"""Per-phase trainers: MLE, reward-model ranking, DPO and policy-gradient PPO with a value baseline"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/training/stages.ipynb.

# %% auto #0
__all__ = ['Penalty', 'run_steps', 'train_mle', 'train_reward_model', 'train_dpo', 'standardize', 'PPOBatch',
           'sample_ppo_batch', 'value_loss', 'cold_start_value', 'train_ppo']

# %% ../../nbs/training/stages.ipynb #stages-imports
import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import NumericAbort
from ..models import DPOSettings, GenerationSettings, KLSettings, OptimSettings, StepMetric
from ..core.importance import Snapshot
from ..core.losses import dpo_margin, ewc_penalty, mean_of, mle_loss, ppo_loss, ranking_loss
from ..core.model import ParameterSet, generate, reward_forward, value_forward
from ..core.optim import MomentumSGD
from ..core.tensor import Tensor, backward, no_grad

logger = logging.getLogger(__name__)

IfaItem = Tuple[List[int], List[int]]
PrefItem = Tuple[List[int], List[int], List[int]]

# %% ../../nbs/training/stages.ipynb #stages-penalty
@dataclass(frozen=True)
class Penalty:
    """EWC tether applied once per optimizer step."""

    anchor: Union[Snapshot, Mapping[str, np.ndarray]]  # Opposite-side snapshot
    F: Mapping[str, Union[float, np.ndarray]]  # Per-unit or per-neuron weights
    lam: float = 1.0  # Balance factor

    def __call__(self, params: ParameterSet) -> Tensor:
        return ewc_penalty(params, self.anchor, self.F, self.lam)

def _with_penalty(loss: Tensor, params: ParameterSet, penalty: Optional[Penalty]) -> Tensor:
    # Mean of (base_i + P) over a batch equals mean(base_i) + P
    return loss if penalty is None else loss + penalty(params)

# %% ../../nbs/training/stages.ipynb #stages-run-steps
BatchLoss = Callable[[list], Tuple[Tensor, Dict[str, float]]]

def run_steps(
    params: ParameterSet,  # Parameters updated in place
    items: Sequence,  # Phase data
    batch_loss: BatchLoss,  # batch -> (loss, extra metrics such as reward or margin)
    settings: OptimSettings,  # Optimizer settings of the phase
    rng: np.random.Generator,  # Data-shuffle stream of the phase
    phase_id: str,  # Phase id for metrics and aborts
    frozen: Iterable[str] = (),  # Units left untouched
    step_offset: int = 0  # First step number in the metrics rows
) -> List[StepMetric]:  # One row per optimizer step
    """Shuffled mini-batch loop with momentum SGD; aborts on the first non-finite loss."""
    opt = MomentumSGD(params, settings, frozen)
    tensors = params.tensors()
    rows: List[StepMetric] = []
    if not len(items):
        return rows
    step = step_offset
    for epoch in range(settings.epochs):
        order = rng.permutation(len(items))
        for start in range(0, len(items), settings.batch_size):
            batch = [items[i] for i in order[start:start + settings.batch_size]]
            loss, extra = batch_loss(batch)
            value = loss.item()
            if not math.isfinite(value):
                logger.error("Non-finite loss in %s at step %d", phase_id, step)
                raise NumericAbort(phase_id, step)
            opt.step(backward(loss, wrt=tensors))
            rows.append(StepMetric(phase_id, step, value, extra.get("reward", math.nan), extra.get("margin", math.nan)))
            logger.debug("%s step %d loss %.6f", phase_id, step, value)
            step += 1
    return rows

# %% ../../nbs/training/stages.ipynb #stages-mle
def train_mle(
    params: ParameterSet,  # Policy updated in place
    items: Sequence[IfaItem],  # (prompt ids, response ids)
    settings: OptimSettings,  # Optimizer settings
    rng: np.random.Generator,  # Data-shuffle stream
    phase_id: str = "IFA1",  # Phase id
    penalty: Optional[Penalty] = None,  # Tether toward the latest HPA snapshot (None on the first subset)
    frozen: Iterable[str] = ()  # Units left untouched
) -> List[StepMetric]:  # Step metrics
    """Instruction-following phase: batch mean of the MLE loss, plus the penalty when given."""
    def batch_loss(batch):
        return _with_penalty(mean_of([mle_loss(params, x, y) for x, y in batch]), params, penalty), {}
    return run_steps(params, items, batch_loss, settings, rng, phase_id, frozen)

# %% ../../nbs/training/stages.ipynb #stages-reward-model
def train_reward_model(
    params_rm: ParameterSet,  # Reward model updated in place
    items: Sequence[PrefItem],  # (prompt, chosen, rejected) ids
    settings: OptimSettings,  # Optimizer settings
    rng: np.random.Generator,  # Data-shuffle stream
    phase_id: str = "RM"  # Phase id
) -> List[StepMetric]:  # Step metrics (margin = mean reward gap)
    """Fit a reward model with the pairwise ranking loss."""
    def batch_loss(batch):
        losses, gaps = [], []
        for x, yw, yl in batch:
            losses.append(ranking_loss(params_rm, x, yw, yl))
            with no_grad():
                gaps.append(reward_forward(params_rm, x, yw).item() - reward_forward(params_rm, x, yl).item())
        return mean_of(losses), {"margin": float(np.mean(gaps))}
    return run_steps(params_rm, items, batch_loss, settings, rng, phase_id)

# %% ../../nbs/training/stages.ipynb #stages-dpo
def train_dpo(
    params: ParameterSet,  # Policy updated in place
    reference: ParameterSet,  # Fixed reference policy (latest IFA-trained parameters)
    items: Sequence[PrefItem],  # (prompt, chosen, rejected) ids
    settings: OptimSettings,  # Optimizer settings
    dpo_settings: DPOSettings,  # beta
    rng: np.random.Generator,  # Data-shuffle stream
    phase_id: str = "HPA1",  # Phase id
    penalty: Optional[Penalty] = None,  # Tether toward the latest IFA snapshot
    frozen: Iterable[str] = ()  # Units left untouched
) -> List[StepMetric]:  # Step metrics (margin = mean implicit-reward margin)
    """Preference phase with the DPO loss."""
    def batch_loss(batch):
        margins = [dpo_margin(params, reference, x, yw, yl, dpo_settings.beta) for x, yw, yl in batch]
        loss = mean_of([-m.log_sigmoid() for m in margins])
        return _with_penalty(loss, params, penalty), {"margin": float(np.mean([m.item() for m in margins]))}
    return run_steps(params, items, batch_loss, settings, rng, phase_id, frozen)

# %% ../../nbs/training/stages.ipynb #stages-ppo-batch
def standardize(
    values: Sequence[float]  # Rewards or advantages of one batch
) -> List[float]:  # Zero-mean, unit-variance copy (unchanged for a single value)
    v = np.asarray(values, dtype=np.float64)
    if v.size < 2:
        return v.tolist()
    return ((v - v.mean()) / (v.std() + 1e-8)).tolist()

@dataclass
class PPOBatch:
    """Sampled responses of a prompt batch with their rewards and baselines."""

    prompts: List[List[int]]  # Prompt ids
    samples: List[List[List[int]]]  # Responses per prompt
    rewards: List[List[float]]  # Raw rewards per response
    values: List[float]  # Value estimate per prompt

    @property
    def mean_reward(self) -> float:
        return float(np.mean([r for rs in self.rewards for r in rs]))

def sample_ppo_batch(
    policy: ParameterSet,  # Current policy
    params_rm: ParameterSet,  # Reward model
    params_vm: ParameterSet,  # Value model
    prompts: Sequence[List[int]],  # Prompt ids
    generation: GenerationSettings,  # Sampling settings
    rng: np.random.Generator,  # Sampling stream
    samples_per_prompt: int = 1  # Monte Carlo samples per prompt
) -> PPOBatch:  # Frozen samples for one update
    """Draw responses from the policy and score them."""
    samples, rewards, values = [], [], []
    with no_grad():
        for x in prompts:
            ys = [generate(policy, x, generation, rng) for _ in range(samples_per_prompt)]
            samples.append(ys)
            rewards.append([reward_forward(params_rm, x, y).item() for y in ys])
            values.append(value_forward(params_vm, x).item())
    return PPOBatch([list(x) for x in prompts], samples, rewards, values)

def value_loss(
    params_vm: ParameterSet,  # Value model
    batch: PPOBatch  # Sampled batch with observed rewards
) -> Tensor:  # Mean squared error between V(x) and the observed rewards
    terms = []
    for x, rs in zip(batch.prompts, batch.rewards):
        v = value_forward(params_vm, x)
        for r in rs:
            d = v - r
            terms.append(d * d)
    return mean_of(terms)

# %% ../../nbs/training/stages.ipynb #stages-cold-start
def cold_start_value(
    policy: ParameterSet,  # Policy (not updated)
    params_rm: ParameterSet,  # Reward model
    params_vm: ParameterSet,  # Fresh value model updated in place
    prompts: Sequence[List[int]],  # Prompts to sample from
    settings: OptimSettings,  # Value-model optimizer settings
    generation: GenerationSettings,  # Sampling settings
    steps: int,  # Number of value-only updates
    rng: np.random.Generator,  # Sampling stream
    samples_per_prompt: int = 1  # Samples per prompt
) -> List[float]:  # Value MSE on the fixed probe batch before each step, plus the final value
    """Value-only warm-up: fit V to rewards of a fixed probe batch of policy samples."""
    if steps <= 0 or not len(prompts):
        return []
    idx = rng.permutation(len(prompts))[:settings.batch_size]
    probe = sample_ppo_batch(policy, params_rm, params_vm, [prompts[i] for i in idx], generation, rng, samples_per_prompt)
    opt = MomentumSGD(params_vm, settings)
    tensors = params_vm.tensors()
    curve = []
    for step in range(steps):
        loss = value_loss(params_vm, probe)
        if not math.isfinite(loss.item()):
            raise NumericAbort("cold-start", step)
        curve.append(loss.item())
        opt.step(backward(loss, wrt=tensors))
    with no_grad():
        curve.append(value_loss(params_vm, probe).item())
    logger.info("Value cold start: MSE %.4f -> %.4f over %d steps", curve[0], curve[-1], steps)
    return curve

# %% ../../nbs/training/stages.ipynb #stages-ppo
def train_ppo(
    policy: ParameterSet,  # Policy updated in place
    reference: ParameterSet,  # Anchor policy for the KL term (latest IFA-trained parameters)
    params_rm: ParameterSet,  # Reward model (fixed)
    params_vm: ParameterSet,  # Value model updated in place
    prompts: Sequence[List[int]],  # Prompt ids of the phase
    policy_settings: OptimSettings,  # Policy optimizer settings
    value_settings: OptimSettings,  # Value-model optimizer settings
    kl: KLSettings,  # KL coefficient and mode
    generation: GenerationSettings,  # Sampling settings
    rng_data: np.random.Generator,  # Data-shuffle stream
    rng_sampling: np.random.Generator,  # Sampling stream
    phase_id: str = "HPA1",  # Phase id
    penalty: Optional[Penalty] = None,  # Tether toward the latest IFA snapshot
    frozen: Iterable[str] = (),  # Policy units left untouched
    use_baseline: bool = True,  # Subtract V(x) from the rewards
    samples_per_prompt: int = 1  # Monte Carlo samples per prompt
) -> List[StepMetric]:  # Step metrics (reward = mean raw reward of the step's samples)
    """Policy-gradient phase: sample, score, standardise advantages, update policy then value model."""
    policy_opt = MomentumSGD(policy, policy_settings, frozen)
    value_opt = MomentumSGD(params_vm, value_settings)
    p_tensors, v_tensors = policy.tensors(), params_vm.tensors()
    rows: List[StepMetric] = []
    step = 0
    for epoch in range(policy_settings.epochs):
        order = rng_data.permutation(len(prompts))
        for start in range(0, len(prompts), policy_settings.batch_size):
            batch = sample_ppo_batch(policy, params_rm, params_vm,
                                     [prompts[i] for i in order[start:start + policy_settings.batch_size]],
                                     generation, rng_sampling, samples_per_prompt)
            flat = [r - (v if use_baseline else 0.0) for rs, v in zip(batch.rewards, batch.values) for r in rs]
            adv, k = standardize(flat), 0
            terms = []
            for x, ys in zip(batch.prompts, batch.samples):
                terms.append(ppo_loss(policy, reference, x, ys, adv[k:k + len(ys)], kl))
                k += len(ys)
            loss = _with_penalty(mean_of(terms), policy, penalty)
            value = loss.item()
            if not math.isfinite(value):
                logger.error("Non-finite loss in %s at step %d", phase_id, step)
                raise NumericAbort(phase_id, step)
            policy_opt.step(backward(loss, wrt=p_tensors))
            vloss = value_loss(params_vm, batch)
            if not math.isfinite(vloss.item()):
                raise NumericAbort(phase_id, step)
            value_opt.step(backward(vloss, wrt=v_tensors))
            rows.append(StepMetric(phase_id, step, value, reward=batch.mean_reward))
            logger.debug("%s step %d loss %.6f reward %.4f value-mse %.4f", phase_id, step, value, batch.mean_reward, vloss.item())
            step += 1
    return rows
