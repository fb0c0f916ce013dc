"""Desk-scale training runs on the synthetic task (run with `pytest -m slow`)."""
import statistics

import numpy as np
import pytest

from cjm_hybrid_alignment.core.model import init_lm_params, init_scalar_model
from cjm_hybrid_alignment.data.synth import synth_task_generate
from cjm_hybrid_alignment.evaluation.metrics import mean_mle_loss, preference_margin, reward_accuracy
from cjm_hybrid_alignment.models import GenerationSettings, HbatConfig, ModelConfig, OptimSettings
from cjm_hybrid_alignment.training.scheduler import (params_from_snapshot, run_hbat, run_two_stage, tokenize_ifa,
                                                     tokenize_preferences)
from cjm_hybrid_alignment.training.stages import cold_start_value, train_mle, train_reward_model

pytestmark = pytest.mark.slow

MODEL = ModelConfig(width=48, n_layers=2, n_heads=2, context_length=16, mlp_ratio=4)


def _config(seed):
    return HbatConfig(n_splits=2, lam=1.0, f_max=50.0, seed=seed,
                      sft=OptimSettings(lr=0.05, batch_size=8, epochs=4),
                      dpo=OptimSettings(lr=0.02, batch_size=8, epochs=2))


def _data(seed):
    ifa, prefs = synth_task_generate(seed, 160, "reverse", min_len=3, max_len=6)
    return ifa[:128], prefs[:128], ifa[128:], prefs[128:]


def test_hbat_keeps_both_alignments():
    sft_loss, hbat_loss, two_margin, sft_margin, hbat_margin = [], [], [], [], []
    for seed in range(3):
        ifa, prefs, val_ifa, val_prefs = _data(seed)
        init = init_lm_params(MODEL, seed)
        config = _config(seed)
        two = run_two_stage(config, init, ifa, prefs)
        sft = params_from_snapshot(two.snapshots["IFA1"])
        hbat = run_hbat(config, init, ifa, prefs)
        sft_loss.append(mean_mle_loss(sft, val_ifa))
        hbat_loss.append(mean_mle_loss(hbat.last_params, val_ifa))
        sft_margin.append(preference_margin(sft, val_prefs))
        two_margin.append(preference_margin(two.last_params, val_prefs))
        hbat_margin.append(preference_margin(hbat.last_params, val_prefs))
    med = statistics.median
    assert med(two_margin) > med(sft_margin)
    assert med(hbat_loss) <= 1.05 * med(sft_loss)
    assert med(hbat_margin) >= med(two_margin) - 0.05 * abs(med(two_margin))


def test_reward_model_separates_held_out_pairs():
    ifa, prefs, _, val_prefs = _data(0)
    sft = init_lm_params(MODEL, 0)
    train_mle(sft, tokenize_ifa(ifa, MODEL), _config(0).sft, np.random.default_rng(0))
    rm = init_scalar_model(sft, "reward")
    train_reward_model(rm, tokenize_preferences(prefs, MODEL), OptimSettings(lr=0.05, batch_size=8, epochs=8),
                       np.random.default_rng(1))
    assert reward_accuracy(rm, tokenize_preferences(val_prefs, MODEL)) >= 0.9


def test_value_cold_start_reduces_error():
    steps = 50
    settings = OptimSettings(lr=0.005, momentum=0.0, batch_size=16, max_grad_norm=0.0)
    curves = []
    for seed in range(3):
        _, prefs, _, _ = _data(seed)
        policy = init_lm_params(MODEL, seed)
        rm = init_scalar_model(policy, "reward", seed=seed + 10)
        vm = init_scalar_model(policy, "value")
        prompts = [x for x, _, _ in tokenize_preferences(prefs, MODEL)]
        curve = cold_start_value(policy, rm, vm, prompts, settings, GenerationSettings(max_new_tokens=6), steps,
                                 np.random.default_rng(seed + 20))
        assert len(curve) == steps + 1
        curves.append(curve)
    median = np.median(np.array(curves), axis=0)
    assert median[-1] < median[0]
    for before, after in zip(median, median[1:]):
        assert after <= before * (1 + 1e-6) + 1e-12
