from dataclasses import replace

import numpy as np
import pytest
from fastcore.test import test_eq, test_fail

from cjm_hybrid_alignment.core.checkpoint import load_checkpoint
from cjm_hybrid_alignment.core.model import init_scalar_model
from cjm_hybrid_alignment.errors import ConfigError, NumericAbort
from cjm_hybrid_alignment.models import BaselineMode, EwcMode, HpaAlgorithm, LossKind, PromptResponseRecord, Side
from cjm_hybrid_alignment.training import scheduler
from cjm_hybrid_alignment.training.scheduler import (build_schedule, run_hbat, run_hbat_freeze, run_schedule,
                                                     run_two_stage, split_dataset, tokenize_ifa)
from cjm_hybrid_alignment.training.stages import train_mle
from cjm_hybrid_alignment.utils import SeedStreams


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_build_schedule(n):
    schedule = build_schedule(n)
    test_eq(len(schedule), 2 * n)
    test_eq(schedule.phase_ids, tuple(f"{s}{k}" for k in range(1, n + 1) for s in ("IFA", "HPA")))
    kinds = [p.loss_kind for p in schedule]
    test_eq(kinds[0], LossKind.MLE_ONLY)
    test_eq(kinds[1::2], [LossKind.EWC_HPA] * n)
    test_eq(kinds[2::2], [LossKind.EWC_IFA] * (n - 1))
    plain = build_schedule(n, penalised=False)
    test_eq({p.loss_kind for p in plain}, {LossKind.MLE_ONLY, LossKind.PLAIN_HPA})


def test_split_dataset():
    records = list(range(11))
    splits = split_dataset(records, 3, seed=5)
    test_eq(sorted(len(s) for s in splits), [3, 4, 4])
    test_eq(sorted(x for s in splits for x in s), records)
    test_eq(split_dataset(records, 3, seed=5), splits)
    assert split_dataset(records, 3, seed=6) != splits
    test_fail(lambda: split_dataset(records, 0, seed=1), contains="n_splits")
    test_fail(lambda: split_dataset(records[:2], 3, seed=1), contains="cannot split")


def test_tokenize_checks_context(byte_config):
    test_fail(lambda: tokenize_ifa([PromptResponseRecord("a" * 20, "b" * 10)], byte_config), contains="context length")


def test_hbat_dpo_run(byte_lm, synth_data, fast_hbat):
    ifa, prefs, val_ifa, val_prefs = synth_data
    start = byte_lm.copy()
    result = run_hbat(fast_hbat, byte_lm, ifa, prefs, val_ifa, val_prefs)
    test_eq(result.schedule.phase_ids, ("IFA1", "HPA1", "IFA2", "HPA2"))
    test_eq(result.anchors, {"IFA1": None, "HPA1": "IFA1", "IFA2": "HPA1", "HPA2": "IFA2"})
    for side in Side:
        test_eq(result.ledger.count(side), 2)
        test_eq(sorted(result.ledger.ac[side]), sorted(byte_lm.names))
    test_eq([p.phase_id for p in result.phases], ["IFA1", "HPA1", "IFA2", "HPA2"])
    assert result.best_phase in result.schedule.phase_ids
    for p in result.phases:
        assert {"val_loss", "perplexity", "margin"} <= set(p.metrics)
        assert p.checkpoint is None
    # the starting parameters are untouched
    test_eq(byte_lm["tok_emb"].data, start["tok_emb"].data)
    assert not np.array_equal(result.last_params["tok_emb"].data, start["tok_emb"].data)
    test_eq(set(result.snapshots), {"IFA1", "HPA1", "IFA2", "HPA2"})


def test_zero_lambda_single_split_matches_two_stage(byte_lm, synth_data, fast_hbat):
    ifa, prefs, _, _ = synth_data
    config = replace(fast_hbat, n_splits=1, lam=0.0)
    hbat = run_hbat(config, byte_lm, ifa, prefs)
    two = run_two_stage(config, byte_lm, ifa, prefs)
    for k in byte_lm.names:
        test_eq(hbat.last_params[k].data.tobytes(), two.last_params[k].data.tobytes())


def test_run_dir_is_reproducible(byte_lm, synth_data, fast_hbat, tmp_path):
    ifa, prefs, val_ifa, val_prefs = synth_data
    a = run_hbat(fast_hbat, byte_lm, ifa, prefs, val_ifa, val_prefs, run_dir=tmp_path / "a")
    run_hbat(fast_hbat, byte_lm, ifa, prefs, val_ifa, val_prefs, run_dir=tmp_path / "b")
    names = sorted(p.name for p in (tmp_path / "a").iterdir())
    for expected in ("phase_01_IFA1.ckpt", "phase_04_HPA2.ckpt", "ledger.bin", "final.ckpt", "final.json",
                     "metrics.csv", "summary.json", "timings.json"):
        assert expected in names
    test_eq(names, sorted(p.name for p in (tmp_path / "b").iterdir()))
    for name in names:
        if name != "timings.json":
            test_eq((tmp_path / "a" / name).read_bytes(), (tmp_path / "b" / name).read_bytes())
    final = load_checkpoint(tmp_path / "a" / "final.ckpt")
    for k in byte_lm.names:
        test_eq(final[k].data, a.params[k].data)


def test_freeze_baseline_leaves_frozen_units_untouched(byte_lm, synth_data, fast_hbat):
    ifa, prefs, _, _ = synth_data
    result = run_hbat_freeze(replace(fast_hbat, freeze_fraction=0.25), byte_lm, ifa, prefs)
    test_eq(result.phases[0].frozen, ())
    for p in result.phases[1:]:
        assert len(p.frozen) >= 1
        for unit in p.frozen:
            test_eq(p.change[unit], 0.0)


def test_original_fisher_mode(byte_lm, synth_data, fast_hbat):
    ifa, prefs, _, _ = synth_data
    result = run_hbat(replace(fast_hbat, ewc_mode=EwcMode.ORIGINAL_FISHER), byte_lm, ifa, prefs)
    for side in Side:
        test_eq(sorted(result.ledger.fisher[side]), sorted(byte_lm.names))
        assert all(np.all(v >= 0) for v in result.ledger.fisher[side].values())


def test_run_schedule_dispatches_on_mode(byte_lm, synth_data, fast_hbat):
    ifa, prefs, _, _ = synth_data
    result = run_schedule(replace(fast_hbat, mode=BaselineMode.TWO_STAGE), byte_lm, ifa, prefs)
    test_eq(result.schedule.phase_ids, ("IFA1", "HPA1"))
    test_eq(result.anchors, {"IFA1": None, "HPA1": None})


def test_ppo_needs_reward_model(byte_lm, synth_data, fast_hbat):
    ifa, prefs, _, _ = synth_data
    with pytest.raises(ConfigError):
        run_hbat(replace(fast_hbat, algorithm=HpaAlgorithm.PPO), byte_lm, ifa, prefs)


def test_ppo_run_cold_starts_once(byte_lm, synth_data, fast_hbat, tmp_path):
    ifa, prefs, val_ifa, val_prefs = synth_data
    rm = init_scalar_model(byte_lm, "reward", seed=1)
    config = replace(fast_hbat, algorithm=HpaAlgorithm.PPO)
    result = run_hbat(config, byte_lm, ifa, prefs, val_ifa, val_prefs, reward_model=rm, run_dir=tmp_path)
    test_eq(len(result.cold_start_curve), config.cold_start_steps + 1)
    assert result.value_model is not None
    assert (tmp_path / "value_HPA1.ckpt").is_file() and (tmp_path / "value_HPA2.ckpt").is_file()
    for p in result.phases[1::2]:
        assert "reward" in p.metrics
    hpa_rows = [m for m in result.metrics if m.phase.startswith("HPA")]
    assert all(np.isfinite(m.reward) for m in hpa_rows)


def test_numeric_abort_reports_last_good(byte_lm, synth_data, fast_hbat, tmp_path, monkeypatch):
    ifa, prefs, _, _ = synth_data

    def diverge(*args, **kwargs):
        raise NumericAbort("HPA1", 0)

    monkeypatch.setattr(scheduler, "train_dpo", diverge)
    with pytest.raises(NumericAbort) as info:
        run_hbat(fast_hbat, byte_lm, ifa, prefs, run_dir=tmp_path)
    test_eq(info.value.phase_id, "HPA1")
    test_eq(info.value.last_good, str(tmp_path / "phase_01_IFA1.ckpt"))
    assert (tmp_path / "phase_01_IFA1.ckpt").is_file()


@pytest.mark.parametrize("algorithm", [HpaAlgorithm.DPO, HpaAlgorithm.PPO])
def test_empty_preferences_give_plain_sft(byte_lm, synth_data, fast_hbat, algorithm):
    ifa, _, _, _ = synth_data
    result = run_two_stage(replace(fast_hbat, algorithm=algorithm), byte_lm, ifa, [])
    test_eq([p.phase_id for p in result.phases], ["IFA1", "HPA1"])
    streams = SeedStreams(fast_hbat.seed)
    items = split_dataset(tokenize_ifa(ifa, byte_lm.config), 1, streams.seed("data-shuffle", "split", "IFA"))[0]
    sft = byte_lm.copy()
    train_mle(sft, items, fast_hbat.sft, streams.rng("data-shuffle", "IFA1"), "IFA1")
    for k in byte_lm.names:
        test_eq(result.last_params[k].data.tobytes(), sft[k].data.tobytes())
    test_eq(result.phases[1].change, {k: 0.0 for k in byte_lm.names})
    assert result.value_model is None
    test_eq(len([m for m in result.metrics if m.phase == "HPA1"]), 1)


def test_freeze_runs_skip_fisher(byte_lm, synth_data, fast_hbat):
    ifa, prefs, _, _ = synth_data
    config = replace(fast_hbat, ewc_mode=EwcMode.ORIGINAL_FISHER, freeze_fraction=0.25)
    result = run_hbat_freeze(config, byte_lm, ifa, prefs)
    test_eq(result.ledger.fisher, {Side.IFA: {}, Side.HPA: {}})
    assert any(p.frozen for p in result.phases)
