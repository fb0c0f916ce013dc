"""Configuration, record and schedule types shared across the alignment pipeline"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/models.ipynb.

# %% auto #0
__all__ = ['Side', 'LossKind', 'HpaAlgorithm', 'BaselineMode', 'EwcMode', 'Verdict', 'ModelConfig', 'GenerationSettings',
           'KLSettings', 'DPOSettings', 'EWCSettings', 'OptimSettings', 'HbatConfig', 'DataConfig', 'RunConfig',
           'PromptResponseRecord', 'PreferenceRecord', 'PairwiseJudgment', 'SnapshotLabel', 'Phase',
           'AlignmentSchedule', 'StepMetric', 'PhaseResult']

# %% ../nbs/models.ipynb #models-imports
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from .errors import ConfigError, DomainError, RecordError

# %% ../nbs/models.ipynb #models-enums
class Side(str, Enum):
    """Alignment side a phase trains."""
    IFA = "IFA"  # Instruction-following alignment (MLE)
    HPA = "HPA"  # Human-preference alignment (PPO or DPO)

class LossKind(str, Enum):
    """Objective a phase optimizes."""
    MLE_ONLY = "mle"  # Plain MLE, used for the first IFA subset and two-stage SFT
    EWC_IFA = "ewc-ifa"  # MLE + penalty anchored at the latest HPA snapshot
    EWC_HPA = "ewc-hpa"  # PPO/DPO + penalty anchored at the latest IFA snapshot
    PLAIN_HPA = "hpa"  # PPO/DPO without penalty (two-stage baseline)

class HpaAlgorithm(str, Enum):
    PPO = "ppo"
    DPO = "dpo"

class BaselineMode(str, Enum):
    TWO_STAGE = "two-stage"
    HBAT = "hbat"
    HBAT_FREEZE = "hbat-freeze"

class EwcMode(str, Enum):
    MODIFIED = "modified"  # Per-unit F from parameter changes
    ORIGINAL_FISHER = "original-fisher"  # Per-neuron Fisher diagonal
    OFF = "off"  # Alternating schedule without any penalty

class Verdict(str, Enum):
    A = "A"
    B = "B"
    TIE = "Tie"

# %% ../nbs/models.ipynb #models-model-config
@dataclass(frozen=True)
class ModelConfig:
    """Shape of the decoder-only language model and its scalar heads."""

    vocab_size: int = 259  # 256 bytes + PAD/BOS/EOS
    width: int = 64  # Model width (embedding size)
    n_layers: int = 2  # Transformer block count
    n_heads: int = 2  # Attention heads per block
    context_length: int = 128  # Maximum sequence length
    mlp_ratio: int = 4  # Hidden size multiplier of the MLP
    dtype: str = "float32"  # "float32" for training, "float64" for gradient checks

    def __post_init__(self):
        for name in ("vocab_size", "width", "n_layers", "n_heads", "context_length", "mlp_ratio"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"model.{name} must be positive, got {getattr(self, name)}")
        if self.width % self.n_heads:
            raise ConfigError(f"model.width ({self.width}) must be divisible by model.n_heads ({self.n_heads})")
        if self.dtype not in ("float32", "float64"):
            raise ConfigError(f"model.dtype must be float32 or float64, got {self.dtype!r}")

# %% ../nbs/models.ipynb #models-generation
@dataclass(frozen=True)
class GenerationSettings:
    """Temperature-scaled nucleus sampling settings."""

    temperature: float = 0.75  # Values below 1e-6 decode greedily
    top_p: float = 0.95  # Nucleus mass threshold in (0, 1]
    max_new_tokens: int = 32  # Upper bound on sampled tokens
    seed: int = 0  # Sampling seed

    def __post_init__(self):
        if not self.temperature > 0:
            raise DomainError(f"temperature must be > 0, got {self.temperature}")
        if not 0 < self.top_p <= 1:
            raise DomainError(f"top_p must lie in (0, 1], got {self.top_p}")
        if self.max_new_tokens < 1:
            raise DomainError(f"max_new_tokens must be >= 1, got {self.max_new_tokens}")

# %% ../nbs/models.ipynb #models-loss-settings
@dataclass(frozen=True)
class KLSettings:
    """KL regularisation of the policy-gradient loss."""

    alpha: float = 0.05  # KL reward coefficient
    shaping: bool = False  # Fold -alpha*log-ratio into a constant reward instead of the literal loss term

    def __post_init__(self):
        if self.alpha < 0:
            raise DomainError(f"KL coefficient must be >= 0, got {self.alpha}")

@dataclass(frozen=True)
class DPOSettings:
    beta: float = 0.1  # Scaling factor of the implicit reward

    def __post_init__(self):
        if not self.beta > 0:
            raise DomainError(f"DPO beta must be > 0, got {self.beta}")

@dataclass(frozen=True)
class EWCSettings:
    lam: float = 1.0  # Balance factor of the penalty

    def __post_init__(self):
        if self.lam < 0:
            raise DomainError(f"EWC lambda must be >= 0, got {self.lam}")

# %% ../nbs/models.ipynb #models-optim
@dataclass(frozen=True)
class OptimSettings:
    """Momentum SGD settings for one kind of phase."""

    lr: float = 0.05  # Step size
    momentum: float = 0.9  # Momentum coefficient
    batch_size: int = 8  # Records per optimizer step
    epochs: int = 1  # Passes over the phase data
    max_grad_norm: float = 1.0  # Global gradient-norm clip (0 disables)

    def __post_init__(self):
        if not self.lr > 0:
            raise ConfigError(f"lr must be > 0, got {self.lr}")
        if not 0 <= self.momentum < 1:
            raise ConfigError(f"momentum must lie in [0, 1), got {self.momentum}")
        if self.batch_size < 1 or self.epochs < 1:
            raise ConfigError("batch_size and epochs must be >= 1")
        if self.max_grad_norm < 0:
            raise ConfigError(f"max_grad_norm must be >= 0, got {self.max_grad_norm}")

# %% ../nbs/models.ipynb #models-hbat-config
@dataclass(frozen=True)
class HbatConfig:
    """Everything the scheduler needs to run an alignment schedule."""

    n_splits: int = 2  # N subset pairs
    lam: float = 1.0  # EWC balance factor
    f_max: float = 50.0  # Sum of importance weights per side
    algorithm: HpaAlgorithm = HpaAlgorithm.DPO  # HPA algorithm
    mode: BaselineMode = BaselineMode.HBAT  # two-stage | hbat | hbat-freeze
    ewc_mode: EwcMode = EwcMode.MODIFIED  # modified | original-fisher | off
    freeze_fraction: float = 0.2  # Share of units frozen by hbat-freeze
    cold_start_steps: int = 50  # Value-only PPO steps on a fresh value model
    ppo_baseline: bool = True  # Subtract the value baseline from PPO rewards
    samples_per_prompt: int = 1  # PPO Monte Carlo samples per prompt
    sft: OptimSettings = field(default_factory=lambda: OptimSettings(lr=0.05, epochs=3))
    rm: OptimSettings = field(default_factory=lambda: OptimSettings(lr=0.05, epochs=2))
    dpo: OptimSettings = field(default_factory=lambda: OptimSettings(lr=0.02, epochs=2))
    ppo_policy: OptimSettings = field(default_factory=lambda: OptimSettings(lr=0.01))
    ppo_value: OptimSettings = field(default_factory=lambda: OptimSettings(lr=0.005))
    dpo_settings: DPOSettings = field(default_factory=DPOSettings)
    kl: KLSettings = field(default_factory=KLSettings)
    generation: GenerationSettings = field(default_factory=GenerationSettings)
    validate_every_phase: bool = True  # Evaluate and consider a checkpoint after each phase
    seed: int = 0  # Root seed of the schedule

    def __post_init__(self):
        if self.n_splits < 1:
            raise ConfigError(f"hbat.n_splits must be >= 1, got {self.n_splits}")
        if self.lam < 0:
            raise ConfigError(f"hbat.lam must be >= 0, got {self.lam}")
        if not self.f_max > 0:
            raise ConfigError(f"hbat.f_max must be > 0, got {self.f_max}")
        if not 0 <= self.freeze_fraction < 1:
            raise ConfigError(f"hbat.freeze_fraction must lie in [0, 1), got {self.freeze_fraction}")
        if self.cold_start_steps < 0 or self.samples_per_prompt < 1:
            raise ConfigError("hbat.cold_start_steps must be >= 0 and hbat.samples_per_prompt >= 1")

    @property
    def ewc(self) -> EWCSettings:  # Penalty settings derived from lam
        """EWC settings view of this config."""
        return EWCSettings(lam=self.lam)

# %% ../nbs/models.ipynb #models-data-config
@dataclass(frozen=True)
class DataConfig:
    """Where training and validation records come from."""

    task: str = "reverse"  # Synthetic task when no paths are given: copy | reverse | sort
    size: int = 256  # Synthetic records per dataset
    ifa_path: str = ""  # Line-delimited prompt/response file
    preference_path: str = ""  # Line-delimited prompt/chosen/rejected file
    val_ifa_path: str = ""  # Optional validation prompt/response file
    val_preference_path: str = ""  # Optional validation preference file
    judgments_path: str = ""  # Optional external judgment file for eval
    val_fraction: float = 0.1  # Held-out share when no validation files are given

    def __post_init__(self):
        if self.task not in ("copy", "reverse", "sort"):
            raise ConfigError(f"data.task must be copy, reverse or sort, got {self.task!r}")
        if self.size < 1:
            raise ConfigError(f"data.size must be >= 1, got {self.size}")
        if not 0 < self.val_fraction < 1:
            raise ConfigError(f"data.val_fraction must lie in (0, 1), got {self.val_fraction}")

# %% ../nbs/models.ipynb #models-run-config
@dataclass(frozen=True)
class RunConfig:
    """Complete configuration of one CLI run."""

    model: ModelConfig = field(default_factory=ModelConfig)
    hbat: HbatConfig = field(default_factory=HbatConfig)
    data: DataConfig = field(default_factory=DataConfig)
    seed: int = 0  # Root seed split into named streams
    output_dir: str = "runs/default"  # Run directory (relative to the output root)
    policy_checkpoint: str = ""  # Starting policy (IFA-trained for dpo/ppo/rm-train)
    reward_checkpoint: str = ""  # Reward model checkpoint (required by ppo)
    comparison_checkpoint: str = ""  # Second policy for the exact-match win rate in eval

# %% ../nbs/models.ipynb #models-records
@dataclass(frozen=True)
class PromptResponseRecord:
    """One (x, y) row of the instruction-following dataset."""

    prompt: str  # Prompt text x
    response: str  # Gold response text y

    def __post_init__(self):
        if not self.prompt or not self.response:
            raise RecordError("prompt and response must both be nonempty")

@dataclass(frozen=True)
class PreferenceRecord:
    """One (x, y_w, y_l) row of the preference dataset."""

    prompt: str  # Prompt text x
    chosen: str  # Preferred response y_w
    rejected: str  # Dispreferred response y_l

    def __post_init__(self):
        if not self.prompt or not self.chosen or not self.rejected:
            raise RecordError("prompt, chosen and rejected must all be nonempty")
        if self.chosen == self.rejected:
            raise RecordError("chosen must differ from rejected")

@dataclass(frozen=True)
class PairwiseJudgment:
    item_id: str  # Item identifier
    verdict: Verdict  # A-wins, B-wins or Tie

# %% ../nbs/models.ipynb #models-schedule
@dataclass(frozen=True)
class SnapshotLabel:
    """Identifies where a parameter snapshot was captured."""

    phase_id: str  # e.g. "IFA2", or "init" for the starting parameters
    side: Optional[Side] = None  # Side of the phase that produced it
    subset: int = 0  # Subset index n (0 for init)

@dataclass(frozen=True)
class Phase:
    side: Side  # IFA or HPA
    subset: int  # Subset index n in 1..N
    loss_kind: LossKind  # Objective of the phase

    @property
    def phase_id(self) -> str:  # e.g. "HPA3"
        return f"{self.side.value}{self.subset}"

@dataclass(frozen=True)
class AlignmentSchedule:
    """Ordered phase list IFA1, HPA1, ..., IFAN, HPAN."""

    phases: Tuple[Phase, ...]  # Phases in execution order
    n_splits: int  # N

    def __post_init__(self):
        if len(self.phases) != 2 * self.n_splits:
            raise ConfigError(f"schedule must hold 2N={2 * self.n_splits} phases, got {len(self.phases)}")
        for i, phase in enumerate(self.phases):
            side = Side.IFA if i % 2 == 0 else Side.HPA
            if phase.side != side or phase.subset != i // 2 + 1:
                raise ConfigError(f"phase {i} is {phase.phase_id}, expected {side.value}{i // 2 + 1}")
        if self.phases[0].loss_kind != LossKind.MLE_ONLY:
            raise ConfigError("the first IFA phase must be MLE-only")

    def __iter__(self):
        return iter(self.phases)

    def __len__(self):
        return len(self.phases)

    @property
    def phase_ids(self) -> Tuple[str, ...]:  # Phase ids in order
        return tuple(p.phase_id for p in self.phases)

# %% ../nbs/models.ipynb #models-results
@dataclass(frozen=True)
class StepMetric:
    """One row of the training-process curve."""

    phase: str  # Phase id
    step: int  # Optimizer step within the phase
    loss: float  # Training loss of the step
    reward: float = math.nan  # Mean reward of the step's samples (PPO) or validation reward
    margin: float = math.nan  # Preference margin (DPO/ranking) or validation margin
    perplexity: float = math.nan  # Validation perplexity (phase-end rows)

@dataclass
class PhaseResult:
    """Outcome of one completed phase."""

    phase_id: str  # Phase id
    checkpoint: Optional[str]  # Checkpoint path (None for in-memory runs)
    change: Dict[str, float]  # Per-unit C map produced by the phase
    metrics: Dict[str, float] = field(default_factory=dict)  # Validation metrics
    wall_clock: float = 0.0  # Seconds spent in the phase
    anchor: Optional[str] = None  # Phase id of the anchor snapshot used by the penalty
    frozen: Tuple[str, ...] = ()  # Units frozen during the phase (hbat-freeze)
