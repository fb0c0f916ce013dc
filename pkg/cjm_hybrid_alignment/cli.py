"""Command-line entry point with one subcommand per pipeline stage"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/cli.ipynb.

# %% auto #0
__all__ = ['STAGES', 'EXIT_OK', 'EXIT_FAILED', 'EXIT_CONFIG', 'EXIT_ABORT', 'Datasets', 'load_datasets', 'run_stage',
           'hbat']

# %% ../nbs/cli.ipynb #cli-imports
import json
import logging
import math
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

from fastcore.script import Param, call_parse, store_true

from . import __version__
from .config import RunLock, config_to_flat, dump_config, load_config, resolve_run_dir, validate_paths
from .errors import ConfigError, DomainError, HbatError, NumericAbort
from .models import (HpaAlgorithm, LossKind, Phase, PreferenceRecord, PromptResponseRecord, RunConfig, Side,
                     SnapshotLabel, StepMetric)
from .core.checkpoint import load_checkpoint, save_checkpoint
from .core.model import ParameterSet, generate, init_lm_params, init_scalar_model
from .data.records import load_records, records_hash
from .data.synth import synth_task_generate
from .data.tokenizer import decode_response
from .evaluation.metrics import (emit_metrics, exact_match_judge, load_judgments, reward_accuracy, temperature_sweep,
                                 win_rate)
from .training.scheduler import (run_schedule, split_dataset, tokenize_ifa, tokenize_preferences, train_phase,
                                 validate_policy)
from .training.stages import train_reward_model
from .utils import SeedStreams, atomic_write_text, sha256_file, sha256_json

logger = logging.getLogger(__name__)

# %% ../nbs/cli.ipynb #cli-constants
STAGES = ("sft", "rm-train", "dpo", "ppo", "hbat", "eval")
EXIT_OK, EXIT_FAILED, EXIT_CONFIG, EXIT_ABORT = 0, 1, 2, 3
SEED_STREAMS = ("init", "data", "data-shuffle", "sampling")
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# %% ../nbs/cli.ipynb #cli-data
@dataclass
class Datasets:
    """Training and validation records of one run."""

    ifa: List[PromptResponseRecord]  # Instruction-following records
    preferences: List[PreferenceRecord]  # Preference records
    val_ifa: List[PromptResponseRecord]  # Held-out instruction-following records
    val_preferences: List[PreferenceRecord]  # Held-out preference records

    def hashes(self) -> Dict[str, str]:  # Content hash per record set
        return {name: records_hash(getattr(self, name)) for name in ("ifa", "preferences", "val_ifa", "val_preferences")}

def _hold_out(records: list, fraction: float, rng) -> tuple:
    if len(records) < 2:
        return list(records), []
    n_val = min(len(records) - 1, max(1, round(fraction * len(records))))
    order = rng.permutation(len(records))
    return [records[i] for i in sorted(order[n_val:])], [records[i] for i in sorted(order[:n_val])]

def load_datasets(
    cfg: RunConfig,  # Run configuration (record paths or synthetic task)
    streams: SeedStreams  # Root seed streams of the run
) -> Datasets:  # Training and validation records
    """Load record files or generate the synthetic task, then hold out validation records where no file is given."""
    d = cfg.data
    if d.ifa_path or d.preference_path:
        ifa = load_records(d.ifa_path, "ifa") if d.ifa_path else []
        prefs = load_records(d.preference_path, "preference") if d.preference_path else []
    else:
        ifa, prefs = synth_task_generate(streams.seed("data"), d.size, d.task)
        logger.info("Generated %d synthetic %s records per dataset", d.size, d.task)
    if d.val_ifa_path:
        val_ifa = load_records(d.val_ifa_path, "ifa")
    else:
        ifa, val_ifa = _hold_out(ifa, d.val_fraction, streams.rng("data-shuffle", "validation", "IFA"))
    if d.val_preference_path:
        val_prefs = load_records(d.val_preference_path, "preference")
    else:
        prefs, val_prefs = _hold_out(prefs, d.val_fraction, streams.rng("data-shuffle", "validation", "HPA"))
    return Datasets(ifa, prefs, val_ifa, val_prefs)

# %% ../nbs/cli.ipynb #cli-models
def _policy(cfg: RunConfig, streams: SeedStreams, stage: str, required: bool = False) -> ParameterSet:
    if cfg.policy_checkpoint:
        policy = load_checkpoint(cfg.policy_checkpoint)
        if policy.kind != "lm":
            raise ConfigError(f"policy_checkpoint holds a {policy.kind} model, not a language model")
        if policy.config != cfg.model:
            logger.warning("policy_checkpoint was built with %s; using it instead of the configured model", policy.config)
        return policy
    if required:
        raise ConfigError(f"{stage} needs policy_checkpoint (an instruction-following policy, e.g. from sft)")
    return init_lm_params(cfg.model, streams.seed("init"))

def _reward_model(cfg: RunConfig, stage: str, required: bool = False) -> Optional[ParameterSet]:
    if not cfg.reward_checkpoint:
        if required:
            raise ConfigError(f"{stage} with PPO needs reward_checkpoint; train one with rm-train")
        return None
    rm = load_checkpoint(cfg.reward_checkpoint)
    if rm.kind != "reward":
        raise ConfigError(f"reward_checkpoint holds a {rm.kind} model, not a reward model")
    return rm

def _validation_row(phase_id: str, step: int, metrics: Mapping[str, float]) -> StepMetric:
    return StepMetric(phase_id, step, metrics.get("val_loss", math.nan), metrics.get("reward", math.nan),
                      metrics.get("margin", math.nan), metrics.get("perplexity", math.nan))

# %% ../nbs/cli.ipynb #cli-stage-train
def _finish_phase(cfg, data, run_dir, policy, rows, phase: Phase, reward_model=None, **summary) -> Dict[str, Any]:
    phase_id = phase.phase_id
    ckpt = save_checkpoint(policy, run_dir / "policy.ckpt", SnapshotLabel(phase_id, phase.side, phase.subset))
    metrics = validate_policy(policy, tokenize_ifa(data.val_ifa, policy.config),
                              tokenize_preferences(data.val_preferences, policy.config), reward_model, cfg.hbat)
    summary.update(phase_metrics={phase_id: metrics}, checkpoint=ckpt.name, sha256=sha256_file(ckpt))
    emit_metrics(list(rows) + [_validation_row(phase_id, len(rows), metrics)], run_dir, summary)
    return summary

def _stage_sft(cfg: RunConfig, data: Datasets, streams: SeedStreams, run_dir: Path) -> Dict[str, Any]:
    policy = _policy(cfg, streams, "sft")
    items = split_dataset(tokenize_ifa(data.ifa, policy.config), 1, streams.seed("data-shuffle", "split", "IFA"))[0]
    phase = Phase(Side.IFA, 1, LossKind.MLE_ONLY)
    rows, _, _ = train_phase(cfg.hbat, phase, policy, items, streams)
    return _finish_phase(cfg, data, run_dir, policy, rows, phase)

def _preference_stage(algorithm: HpaAlgorithm, stage: str):
    def _run(cfg: RunConfig, data: Datasets, streams: SeedStreams, run_dir: Path) -> Dict[str, Any]:
        reward_model = _reward_model(cfg, stage, required=algorithm == HpaAlgorithm.PPO)
        policy = _policy(cfg, streams, stage, required=True)
        pairs = tokenize_preferences(data.preferences, policy.config)
        if not pairs:
            raise ConfigError(f"{stage} needs preference records")
        items = split_dataset(pairs, 1, streams.seed("data-shuffle", "split", "HPA"))[0]
        phase = Phase(Side.HPA, 1, LossKind.PLAIN_HPA)
        rows, value_model, curve = train_phase(replace(cfg.hbat, algorithm=algorithm), phase, policy, items, streams,
                                               policy.copy(), reward_model)
        if value_model is not None:
            save_checkpoint(value_model, run_dir / "value.ckpt", SnapshotLabel("HPA1", Side.HPA, 1))
        return _finish_phase(cfg, data, run_dir, policy, rows, phase, reward_model, cold_start_curve=curve)
    return _run

def _stage_rm_train(cfg: RunConfig, data: Datasets, streams: SeedStreams, run_dir: Path) -> Dict[str, Any]:
    if not cfg.policy_checkpoint:
        logger.warning("Reward model backbone is an untrained policy; set policy_checkpoint to start from an sft run")
    rm = init_scalar_model(_policy(cfg, streams, "rm-train"), "reward")
    pairs = tokenize_preferences(data.preferences, rm.config)
    if not pairs:
        raise ConfigError("rm-train needs preference records")
    rows = train_reward_model(rm, pairs, cfg.hbat.rm, streams.rng("data-shuffle", "RM"))
    ckpt = save_checkpoint(rm, run_dir / "reward.ckpt", SnapshotLabel("RM"))
    val = tokenize_preferences(data.val_preferences, rm.config)
    accuracy = reward_accuracy(rm, val) if val else None
    if accuracy is not None:
        logger.info("Held-out reward accuracy %.4f on %d pairs", accuracy, len(val))
    summary = {"checkpoint": ckpt.name, "sha256": sha256_file(ckpt), "reward_accuracy": accuracy}
    emit_metrics(rows, run_dir, summary)
    return summary

def _stage_hbat(cfg: RunConfig, data: Datasets, streams: SeedStreams, run_dir: Path) -> Dict[str, Any]:
    reward_model = _reward_model(cfg, "hbat", required=cfg.hbat.algorithm == HpaAlgorithm.PPO)
    result = run_schedule(cfg.hbat, _policy(cfg, streams, "hbat"), data.ifa, data.preferences, val_ifa=data.val_ifa,
                          val_hpa=data.val_preferences, reward_model=reward_model, run_dir=run_dir)
    return {"best_phase": result.best_phase, "schedule": list(result.schedule.phase_ids)}

# %% ../nbs/cli.ipynb #cli-stage-eval
def _exact_match_win_rate(cfg: RunConfig, policy: ParameterSet, other: ParameterSet,
                          records: Sequence[PromptResponseRecord]) -> Optional[List[float]]:
    greedy = replace(cfg.hbat.generation, temperature=1e-7)
    prompts = [x for x, _ in tokenize_ifa(records, policy.config)]
    answers = [[decode_response(generate(p, x, greedy)) for x in prompts] for p in (policy, other)]
    judgments = exact_match_judge([r.response for r in records], *answers)
    try:
        return list(win_rate(judgments))
    except DomainError:
        logger.warning("Every exact-match judgment is a tie; win rate undefined")
        return None

def _stage_eval(cfg: RunConfig, data: Datasets, streams: SeedStreams, run_dir: Path) -> Dict[str, Any]:
    policy = _policy(cfg, streams, "eval", required=True)
    reward_model = _reward_model(cfg, "eval")
    val_ifa = tokenize_ifa(data.val_ifa, policy.config)
    val_prefs = tokenize_preferences(data.val_preferences, policy.config)
    metrics: Dict[str, Any] = dict(validate_policy(policy, val_ifa, val_prefs, reward_model, cfg.hbat))
    if reward_model is not None and val_prefs:
        metrics["reward_accuracy"] = reward_accuracy(reward_model, val_prefs)
        metrics["temperature_sweep"] = temperature_sweep(policy, reward_model, [x for x, _, _ in val_prefs],
                                                         cfg.hbat.generation)
    if cfg.data.judgments_path:
        metrics["win_rate"] = list(win_rate(load_judgments(cfg.data.judgments_path)))
    elif cfg.comparison_checkpoint and data.val_ifa:
        metrics["win_rate"] = _exact_match_win_rate(cfg, policy, load_checkpoint(cfg.comparison_checkpoint), data.val_ifa)
    summary = {"checkpoint_sha256": sha256_file(cfg.policy_checkpoint), "eval": metrics}
    atomic_write_text(run_dir / "eval.json", json.dumps(summary, indent=2, sort_keys=True) + "\n")
    emit_metrics([_validation_row("eval", 0, metrics)], run_dir, summary)
    return summary

_STAGES: Dict[str, Callable[..., Dict[str, Any]]] = {
    "sft": _stage_sft,
    "rm-train": _stage_rm_train,
    "dpo": _preference_stage(HpaAlgorithm.DPO, "dpo"),
    "ppo": _preference_stage(HpaAlgorithm.PPO, "ppo"),
    "hbat": _stage_hbat,
    "eval": _stage_eval,
}

# %% ../nbs/cli.ipynb #cli-run
def _write_manifest(cfg: RunConfig, stage: str, data: Datasets, streams: SeedStreams, run_dir: Path) -> Path:
    flat = config_to_flat(cfg)
    inputs = {k: sha256_file(v) for k, v in sorted(flat.items())
              if (k.endswith("_path") or k.endswith("_checkpoint")) and v}
    manifest = {
        "stage": stage,
        "version": __version__,
        "config": flat,
        "config_sha256": sha256_json(flat),
        "seeds": {name: streams.seed(name) for name in SEED_STREAMS},
        "data_sha256": data.hashes(),
        "inputs_sha256": inputs,
    }
    dump_config(cfg, run_dir / "config.ini")
    return atomic_write_text(run_dir / "run.json", json.dumps(manifest, indent=2, sort_keys=True) + "\n")

def run_stage(
    stage: str,  # One of STAGES
    config_path: Optional[str] = None,  # Flat key = value configuration file
    overrides: Sequence[str] = (),  # "key=value" overrides
    verbose: bool = False,  # Log per-step losses
    environ: Optional[Mapping[str, str]] = None  # Environment for the output root (default: os.environ)
) -> int:  # Exit code: 0 ok, 1 failed, 2 config error, 3 numeric abort
    """Run one pipeline stage inside a locked run directory and map failures to exit codes."""
    pkg_logger = logging.getLogger(__package__)
    pkg_logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    handler = None
    try:
        if stage not in _STAGES:
            raise ConfigError(f"unknown stage {stage!r}; expected one of {', '.join(STAGES)}")
        cfg = load_config(config_path, overrides)
        validate_paths(cfg)
        run_dir = resolve_run_dir(cfg, environ)
        with RunLock(run_dir):
            handler = logging.FileHandler(run_dir / "run.log", encoding="utf-8")
            handler.setFormatter(logging.Formatter(LOG_FORMAT))
            pkg_logger.addHandler(handler)
            streams = SeedStreams(cfg.seed)
            data = load_datasets(cfg, streams)
            _write_manifest(cfg, stage, data, streams, run_dir)
            logger.info("Running %s in %s (seed %d)", stage, run_dir, cfg.seed)
            _STAGES[stage](cfg, data, streams, run_dir)
            logger.info("Finished %s", stage)
        return EXIT_OK
    except ConfigError as e:
        logger.error("Configuration error: %s", e)
        return EXIT_CONFIG
    except NumericAbort as e:
        logger.error("Numeric abort: %s", e)
        return EXIT_ABORT
    except HbatError as e:
        logger.error("%s failed: %s", stage, e)
        return EXIT_FAILED
    finally:
        if handler is not None:
            pkg_logger.removeHandler(handler)
            handler.close()

# %% ../nbs/cli.ipynb #cli-hbat
@call_parse
def hbat(
    stage: Param("Pipeline stage", str, choices=STAGES),
    config: Param("Flat key = value configuration file", str) = None,
    set: Param("Override one key as key=value (repeatable)", str, action="append") = None,
    verbose: Param("Log per-step losses", store_true) = False
):
    "Run one stage of the hybrid alignment pipeline."
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO, format=LOG_FORMAT)
    sys.exit(run_stage(stage, config, set or (), verbose))
