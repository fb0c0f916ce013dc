"""Alternating alignment schedule, the two-stage baseline and the freezing baseline"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/training/scheduler.ipynb.

# %% auto #0
__all__ = ['split_dataset', 'build_schedule', 'params_from_snapshot', 'tokenize_ifa', 'tokenize_preferences',
           'validate_policy', 'train_phase', 'RunResult', 'run_hbat', 'run_two_stage', 'run_hbat_freeze', 'run_schedule']

# %% ../../nbs/training/scheduler.ipynb #scheduler-imports
import json
import logging
import math
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import ConfigError, DomainError, NumericAbort, RecordError
from ..models import (AlignmentSchedule, BaselineMode, EwcMode, HbatConfig, HpaAlgorithm, LossKind, ModelConfig, Phase,
                      PhaseResult, PreferenceRecord, PromptResponseRecord, Side, SnapshotLabel, StepMetric)
from ..core.checkpoint import save_checkpoint
from ..core.importance import (ImportanceLedger, Snapshot, accumulate, accumulate_fisher, fisher_diagonal, freeze_mask,
                               unit_change)
from ..core.model import ParameterSet, init_scalar_model
from ..data.records import ifa_tokens, preference_tokens
from ..evaluation.metrics import emit_metrics, mean_mle_loss, mean_reward, perplexity, preference_margin
from ..utils import SeedStreams, atomic_write_text, sha256_file
from .stages import Penalty, cold_start_value, train_dpo, train_mle, train_ppo

logger = logging.getLogger(__name__)

# %% ../../nbs/training/scheduler.ipynb #scheduler-split
def split_dataset(
    records: Sequence,  # Records (or token tuples) to divide
    n_splits: int,  # N
    seed: int  # Shuffle seed
) -> List[list]:  # N disjoint subsets whose sizes differ by at most one
    """Seeded shuffle followed by contiguous chunks."""
    if n_splits < 1:
        raise DomainError(f"n_splits must be >= 1, got {n_splits}")
    if n_splits > len(records):
        raise DomainError(f"cannot split {len(records)} records into {n_splits} subsets")
    order = np.random.default_rng(seed).permutation(len(records))
    return [[records[i] for i in chunk] for chunk in np.array_split(order, n_splits)]

# %% ../../nbs/training/scheduler.ipynb #scheduler-schedule
def build_schedule(
    n_splits: int,  # N
    penalised: bool = True  # EWC-IFA / EWC-HPA kinds after the first IFA phase; plain kinds otherwise
) -> AlignmentSchedule:  # IFA1, HPA1, ..., IFAN, HPAN
    phases = []
    for n in range(1, n_splits + 1):
        phases.append(Phase(Side.IFA, n, LossKind.EWC_IFA if penalised and n > 1 else LossKind.MLE_ONLY))
        phases.append(Phase(Side.HPA, n, LossKind.EWC_HPA if penalised else LossKind.PLAIN_HPA))
    return AlignmentSchedule(tuple(phases), n_splits)

def params_from_snapshot(
    snapshot: Snapshot,  # Captured parameters
    kind: str = "lm"  # Parameter-set kind
) -> ParameterSet:  # Writable copy usable as a reference policy
    return ParameterSet({k: np.array(v, copy=True) for k, v in snapshot.arrays.items()}, snapshot.config, kind)

# %% ../../nbs/training/scheduler.ipynb #scheduler-tokenize
def _check_fits(config: ModelConfig, *seqs) -> None:
    if sum(len(s) for s in seqs) > config.context_length:
        raise RecordError(f"record of {sum(len(s) for s in seqs)} tokens exceeds context length {config.context_length}")

def tokenize_ifa(
    records: Sequence[PromptResponseRecord],  # Prompt/response records
    config: ModelConfig  # Model whose context must hold each record
) -> List[Tuple[List[int], List[int]]]:  # (prompt ids, response ids)
    items = [ifa_tokens(r) for r in records]
    for x, y in items:
        _check_fits(config, x, y)
    return items

def tokenize_preferences(
    records: Sequence[PreferenceRecord],  # Preference records
    config: ModelConfig  # Model whose context must hold each pair
) -> List[Tuple[List[int], List[int], List[int]]]:  # (prompt, chosen, rejected) ids
    items = [preference_tokens(r) for r in records]
    for x, yw, yl in items:
        _check_fits(config, x, yw)
        _check_fits(config, x, yl)
    return items

# %% ../../nbs/training/scheduler.ipynb #scheduler-result
@dataclass
class RunResult:
    """Everything a schedule run produced."""

    params: ParameterSet  # Selected policy (best validation score)
    last_params: ParameterSet  # Policy after the final phase
    schedule: AlignmentSchedule  # Executed schedule
    phases: List[PhaseResult]  # One result per phase
    metrics: List[StepMetric]  # Step rows plus one validation row per phase
    ledger: ImportanceLedger  # Change history, AC and F per side
    snapshots: Dict[str, Snapshot] = field(default_factory=dict)  # Phase-end snapshots by phase id
    anchors: Dict[str, Optional[str]] = field(default_factory=dict)  # Anchor phase id used by each phase
    best_phase: Optional[str] = None  # Phase whose parameters were selected
    value_model: Optional[ParameterSet] = None  # Carried-over value model (PPO)
    cold_start_curve: List[float] = field(default_factory=list)  # Value MSE during cold start (PPO)
    run_dir: Optional[Path] = None  # Run directory, when files were written

# %% ../../nbs/training/scheduler.ipynb #scheduler-validate
def validate_policy(
    policy: ParameterSet,  # Policy to score
    val_ifa: Sequence,  # Validation (prompt, response) ids
    val_hpa: Sequence,  # Validation (prompt, chosen, rejected) ids
    reward_model: Optional[ParameterSet],  # Reward model, if any
    config: HbatConfig  # Generation settings for the reward score
) -> Dict[str, float]:  # val_loss, perplexity, margin and reward where the data allows
    """Validation metrics used for per-phase reporting and checkpoint selection."""
    metrics: Dict[str, float] = {}
    if val_ifa:
        metrics["val_loss"] = mean_mle_loss(policy, val_ifa)
        metrics["perplexity"] = perplexity(policy, val_ifa)
    if val_hpa:
        metrics["margin"] = preference_margin(policy, val_hpa)
        if reward_model is not None:
            metrics["reward"] = mean_reward(policy, reward_model, [x for x, _, _ in val_hpa], config.generation)[0]
    return metrics

def _selection_score(metrics: Dict[str, float], has_reward_model: bool) -> float:
    return metrics.get("reward" if has_reward_model else "margin", math.nan)

# %% ../../nbs/training/scheduler.ipynb #scheduler-train-phase
def train_phase(
    config: HbatConfig,  # Optimizer, sampling and algorithm settings
    phase: Phase,  # Phase to run
    policy: ParameterSet,  # Policy updated in place
    items: Sequence,  # Token data of the phase subset
    streams: SeedStreams,  # Root seed streams of the run
    reference: Optional[ParameterSet] = None,  # Reference policy of a preference phase
    reward_model: Optional[ParameterSet] = None,  # Reward model (PPO)
    value_model: Optional[ParameterSet] = None,  # Carried-over value model; None builds a fresh one and cold-starts it
    penalty: Optional[Penalty] = None,  # EWC tether
    frozen: Sequence[str] = ()  # Units left untouched
) -> Tuple[List[StepMetric], Optional[ParameterSet], List[float]]:  # (step rows, value model, cold-start curve)
    """Train one phase with the objective its side and the configured algorithm call for."""
    pid = phase.phase_id
    rng_data = streams.rng("data-shuffle", pid)
    if phase.side == Side.IFA:
        return train_mle(policy, items, config.sft, rng_data, pid, penalty, frozen), value_model, []
    if not len(items):
        logger.info("Skipping %s: no preference data", pid)
        return [], value_model, []
    if reference is None:
        raise DomainError(f"{pid} needs a reference policy")
    if config.algorithm == HpaAlgorithm.DPO:
        return train_dpo(policy, reference, items, config.dpo, config.dpo_settings, rng_data, pid, penalty, frozen), value_model, []
    if reward_model is None:
        raise ConfigError("PPO needs a reward model; train one with rm-train and pass its checkpoint")
    prompts = [x for x, _, _ in items]
    curve: List[float] = []
    if value_model is None:
        value_model = init_scalar_model(policy, "value")
        curve = cold_start_value(policy, reward_model, value_model, prompts, config.ppo_value, config.generation,
                                 config.cold_start_steps, streams.rng("sampling", pid, "cold-start"), config.samples_per_prompt)
    rows = train_ppo(policy, reference, reward_model, value_model, prompts, config.ppo_policy, config.ppo_value, config.kl,
                     config.generation, rng_data, streams.rng("sampling", pid), pid, penalty, frozen,
                     config.ppo_baseline, config.samples_per_prompt)
    return rows, value_model, curve

# %% ../../nbs/training/scheduler.ipynb #scheduler-execute
def _execute(
    config: HbatConfig,
    init_params: ParameterSet,
    d_ifa: Sequence[PromptResponseRecord],
    d_hpa: Sequence[PreferenceRecord],
    val_ifa: Sequence[PromptResponseRecord],
    val_hpa: Sequence[PreferenceRecord],
    reward_model: Optional[ParameterSet],
    value_model: Optional[ParameterSet],
    run_dir: Optional[Union[str, Path]],
    n_splits: int,
    penalised: bool,
    freeze: bool,
) -> RunResult:
    if config.algorithm == HpaAlgorithm.PPO and reward_model is None and len(d_hpa):
        raise ConfigError("PPO needs a reward model; train one with rm-train and pass its checkpoint")
    if not len(d_ifa):
        raise DomainError("the instruction-following dataset is empty")
    mcfg = init_params.config
    streams = SeedStreams(config.seed)
    ifa_splits = split_dataset(tokenize_ifa(d_ifa, mcfg), n_splits, streams.seed("data-shuffle", "split", "IFA"))
    pref_items = tokenize_preferences(d_hpa, mcfg)
    hpa_splits = (split_dataset(pref_items, n_splits, streams.seed("data-shuffle", "split", "HPA")) if pref_items
                  else [[] for _ in range(n_splits)])
    val_ifa_items = tokenize_ifa(val_ifa, mcfg)
    val_hpa_items = tokenize_preferences(val_hpa, mcfg)
    schedule = build_schedule(n_splits, penalised)
    run_dir = Path(run_dir) if run_dir else None

    policy = init_params.copy()
    ledger = ImportanceLedger(policy.names, config.f_max)
    prev = Snapshot.capture(policy, SnapshotLabel("init"))
    latest: Dict[Side, Optional[Snapshot]] = {Side.IFA: None, Side.HPA: None}
    vm = value_model.copy() if value_model is not None else None
    result = RunResult(policy, policy, schedule, [], [], ledger, run_dir=run_dir)
    best: Optional[Tuple[float, str, ParameterSet]] = None
    last_good: Optional[str] = None
    timings: Dict[str, float] = {}
    logger.info("Running %s with %s, N=%d, schedule %s", "freeze" if freeze else "EWC" if penalised else "plain",
                config.algorithm.value, n_splits, ", ".join(schedule.phase_ids))

    for i, phase in enumerate(schedule):
        pid, side, k = phase.phase_id, phase.side, phase.subset - 1
        t0 = time.perf_counter()
        opposite = Side.HPA if side == Side.IFA else Side.IFA
        anchor = latest[opposite] if phase.loss_kind in (LossKind.EWC_IFA, LossKind.EWC_HPA) else None
        penalty, frozen = None, frozenset()
        if anchor is not None:
            if freeze:
                frozen = freeze_mask(ledger.update_F(opposite), config.freeze_fraction)
            elif config.ewc_mode == EwcMode.ORIGINAL_FISHER:
                penalty = Penalty(anchor, ledger.fisher[opposite], config.ewc.lam)
            else:
                penalty = Penalty(anchor, ledger.update_F(opposite), config.ewc.lam)
        result.anchors[pid] = anchor.label.phase_id if anchor is not None else None
        logger.info("Phase %s (%s): anchor=%s frozen=%d", pid, phase.loss_kind.value, result.anchors[pid], len(frozen))

        reference = params_from_snapshot(latest[Side.IFA]) if side == Side.HPA else None
        try:
            rows, vm, curve = train_phase(config, phase, policy, ifa_splits[k] if side == Side.IFA else hpa_splits[k],
                                          streams, reference, reward_model, vm, penalty, frozen)
            result.cold_start_curve = result.cold_start_curve or curve
        except NumericAbort as e:
            logger.error("Aborting %s at step %d; last good checkpoint: %s", pid, e.step, last_good)
            raise NumericAbort(pid, e.step, last_good) from e

        snap = Snapshot.capture(policy, SnapshotLabel(pid, side, phase.subset))
        ckpt = None
        if run_dir is not None:
            ckpt = run_dir / f"phase_{i + 1:02d}_{pid}.ckpt"
            snap = snap.save(ckpt)
            logger.info("Saved %s", ckpt)
        change = unit_change(prev, snap)
        accumulate(ledger, side, change, pid)
        if penalised and not freeze and config.ewc_mode == EwcMode.ORIGINAL_FISHER:
            data = ifa_splits[k] if side == Side.IFA else [(x, yw) for x, yw, _ in hpa_splits[k]]
            if data:
                accumulate_fisher(ledger, side, fisher_diagonal(policy, data))
        prev = latest[side] = result.snapshots[pid] = snap
        if vm is not None and side == Side.HPA and run_dir is not None:
            save_checkpoint(vm, run_dir / f"value_{pid}.ckpt", SnapshotLabel(pid, side, phase.subset))

        metrics = validate_policy(policy, val_ifa_items, val_hpa_items, reward_model, config) if config.validate_every_phase else {}
        result.metrics.extend(rows)
        result.metrics.append(StepMetric(pid, len(rows), metrics.get("val_loss", math.nan), metrics.get("reward", math.nan),
                                         metrics.get("margin", math.nan), metrics.get("perplexity", math.nan)))
        score = _selection_score(metrics, reward_model is not None)
        if math.isfinite(score) and (best is None or score > best[0]):
            best = (score, pid, policy.copy())
            logger.info("Selected %s (score %.6f)", pid, score)
        last_good = str(ckpt) if ckpt is not None else pid
        timings[pid] = time.perf_counter() - t0
        result.phases.append(PhaseResult(pid, str(ckpt) if ckpt else None, change, metrics, timings[pid],
                                         result.anchors[pid], tuple(sorted(frozen))))

    result.last_params = policy
    result.params, result.best_phase = (best[2], best[1]) if best else (policy.copy(), schedule.phase_ids[-1])
    result.value_model = vm
    if run_dir is not None:
        _write_run(result, timings)
    return result

# %% ../../nbs/training/scheduler.ipynb #scheduler-write
def _write_run(result: RunResult, timings: Dict[str, float]) -> None:
    run_dir = result.run_dir
    result.ledger.save(run_dir / "ledger.bin")
    final = save_checkpoint(result.params, run_dir / "final.ckpt", SnapshotLabel(result.best_phase))
    source = next(p.checkpoint for p in result.phases if p.phase_id == result.best_phase)
    manifest = {"best_phase": result.best_phase, "checkpoint": final.name,
                "source_checkpoint": Path(source).name if source else None, "sha256": sha256_file(final)}
    atomic_write_text(run_dir / "final.json", json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    summary = {
        "best_phase": result.best_phase,
        "schedule": list(result.schedule.phase_ids),
        "anchors": result.anchors,
        "phase_metrics": {p.phase_id: p.metrics for p in result.phases},
        "frozen": {p.phase_id: list(p.frozen) for p in result.phases if p.frozen},
        "cold_start_curve": result.cold_start_curve,
    }
    emit_metrics(result.metrics, run_dir, summary)
    atomic_write_text(run_dir / "timings.json", json.dumps(timings, indent=2, sort_keys=True) + "\n")

# %% ../../nbs/training/scheduler.ipynb #scheduler-entry-points
def run_hbat(
    config: HbatConfig,  # Schedule configuration
    init_params: ParameterSet,  # Starting policy
    d_ifa: Sequence[PromptResponseRecord],  # Instruction-following data
    d_hpa: Sequence[PreferenceRecord],  # Preference data (prompts only for PPO)
    val_ifa: Sequence[PromptResponseRecord] = (),  # Validation prompt/response records
    val_hpa: Sequence[PreferenceRecord] = (),  # Validation preference records
    reward_model: Optional[ParameterSet] = None,  # Required for PPO
    value_model: Optional[ParameterSet] = None,  # Carried-over value model (skips cold start)
    run_dir: Optional[Union[str, Path]] = None  # Directory for checkpoints, ledger and metrics
) -> RunResult:  # Selected policy, phase results and ledger
    """Alternate N instruction-following and N preference phases with EWC tethers between them."""
    return _execute(config, init_params, d_ifa, d_hpa, val_ifa, val_hpa, reward_model, value_model, run_dir,
                    config.n_splits, config.ewc_mode != EwcMode.OFF, freeze=False)

def run_two_stage(
    config: HbatConfig,  # Schedule configuration (n_splits, lam and ewc_mode are ignored)
    init_params: ParameterSet,  # Starting policy
    d_ifa: Sequence[PromptResponseRecord],  # Instruction-following data
    d_hpa: Sequence[PreferenceRecord],  # Preference data (empty skips the preference stage)
    val_ifa: Sequence[PromptResponseRecord] = (),  # Validation prompt/response records
    val_hpa: Sequence[PreferenceRecord] = (),  # Validation preference records
    reward_model: Optional[ParameterSet] = None,  # Required for PPO
    value_model: Optional[ParameterSet] = None,  # Carried-over value model
    run_dir: Optional[Union[str, Path]] = None  # Output directory
) -> RunResult:
    """One full MLE pass, then one full PPO/DPO pass without any penalty."""
    return _execute(config, init_params, d_ifa, d_hpa, val_ifa, val_hpa, reward_model, value_model, run_dir,
                    1, penalised=False, freeze=False)

def run_hbat_freeze(
    config: HbatConfig,  # Schedule configuration (freeze_fraction selects the frozen share)
    init_params: ParameterSet,  # Starting policy
    d_ifa: Sequence[PromptResponseRecord],  # Instruction-following data
    d_hpa: Sequence[PreferenceRecord],  # Preference data
    val_ifa: Sequence[PromptResponseRecord] = (),  # Validation prompt/response records
    val_hpa: Sequence[PreferenceRecord] = (),  # Validation preference records
    reward_model: Optional[ParameterSet] = None,  # Required for PPO
    value_model: Optional[ParameterSet] = None,  # Carried-over value model
    run_dir: Optional[Union[str, Path]] = None  # Output directory
) -> RunResult:
    """Alternating schedule that freezes the most important opposite-side units instead of penalising them."""
    return _execute(config, init_params, d_ifa, d_hpa, val_ifa, val_hpa, reward_model, value_model, run_dir,
                    config.n_splits, penalised=True, freeze=True)

_RUNNERS = {BaselineMode.HBAT: run_hbat, BaselineMode.TWO_STAGE: run_two_stage, BaselineMode.HBAT_FREEZE: run_hbat_freeze}

def run_schedule(
    config: HbatConfig,  # Schedule configuration; config.mode picks the runner
    init_params: ParameterSet,  # Starting policy
    d_ifa: Sequence[PromptResponseRecord],  # Instruction-following data
    d_hpa: Sequence[PreferenceRecord],  # Preference data
    **kwargs  # Validation sets, reward/value models, run_dir
) -> RunResult:
    return _RUNNERS[BaselineMode(config.mode)](config, init_params, d_ifa, d_hpa, **kwargs)
