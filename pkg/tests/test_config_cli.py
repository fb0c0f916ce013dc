import json

import numpy as np
import pytest
from fastcore.test import test_eq, test_fail

from cjm_hybrid_alignment import cli
from cjm_hybrid_alignment.cli import EXIT_ABORT, EXIT_CONFIG, EXIT_FAILED, EXIT_OK, load_datasets, run_stage
from cjm_hybrid_alignment.config import (OUTPUT_ROOT_ENV, RunLock, config_to_flat, dump_config, load_config,
                                         parse_overrides, resolve_run_dir, validate_paths)
from cjm_hybrid_alignment.core.checkpoint import load_checkpoint
from cjm_hybrid_alignment.errors import ConfigError, NumericAbort
from cjm_hybrid_alignment.models import BaselineMode, HpaAlgorithm, RunConfig
from cjm_hybrid_alignment.training import scheduler
from cjm_hybrid_alignment.utils import SeedStreams

TINY = ["model.width=8", "model.n_layers=1", "model.n_heads=2", "model.context_length=24", "model.mlp_ratio=2",
        "model.dtype=float64", "data.size=20", "sft.epochs=1", "sft.batch_size=4", "dpo.epochs=1", "dpo.batch_size=4",
        "rm.epochs=1", "rm.batch_size=4", "generation.max_new_tokens=4", "hbat.cold_start_steps=2", "run.seed=5"]


def test_defaults_round_trip(tmp_path):
    test_eq(load_config(), RunConfig())
    cfg = load_config(overrides=["hbat.algorithm=ppo", "hbat.mode=hbat-freeze", "kl.shaping=yes", "dpo.beta=0.3"])
    test_eq(cfg.hbat.algorithm, HpaAlgorithm.PPO)
    test_eq(cfg.hbat.mode, BaselineMode.HBAT_FREEZE)
    test_eq(cfg.hbat.kl.shaping, True)
    test_eq(cfg.hbat.dpo_settings.beta, 0.3)
    test_eq(load_config(dump_config(cfg, tmp_path / "config.ini")), cfg)
    assert "hbat.seed" not in config_to_flat(cfg)


def test_config_file_and_overrides(tmp_path):
    path = tmp_path / "run.ini"
    path.write_text("# toy run\nhbat.lam = 2.5  # tether strength\nrun.seed = 9\n; note\nsft.lr = 0.1\n", encoding="utf-8")
    cfg = load_config(path)
    test_eq(cfg.hbat.lam, 2.5)
    test_eq((cfg.seed, cfg.hbat.seed), (9, 9))
    test_eq(cfg.hbat.sft.lr, 0.1)
    test_eq(load_config(path, ["hbat.lam=0.5"]).hbat.lam, 0.5)


def test_config_errors(tmp_path):
    test_fail(lambda: load_config(overrides=["hbat.bogus=1"]), contains="unknown key 'hbat.bogus'")
    test_fail(lambda: load_config(overrides=["hbat.lam=abc"]), contains="cannot parse")
    test_fail(lambda: load_config(overrides=["hbat.lam=-1"]), contains="hbat.lam")
    test_fail(lambda: load_config(overrides=["hbat.algorithm=sgd"]), contains="sgd")
    test_fail(lambda: load_config(overrides=["kl.shaping=maybe"]), contains="cannot parse")
    test_fail(lambda: parse_overrides(["novalue"]), contains="key=value")
    sectioned = tmp_path / "sections.ini"
    sectioned.write_text("[hbat]\nlam = 1\n", encoding="utf-8")
    test_fail(lambda: load_config(sectioned), contains="sections are not supported")
    test_fail(lambda: load_config(tmp_path / "nope.ini"), contains="config file not found")


def test_paths_and_run_dir(tmp_path):
    test_fail(lambda: validate_paths(load_config(overrides=[f"data.ifa_path={tmp_path / 'x.jsonl'}"])),
              contains="data.ifa_path: file not found")
    validate_paths(RunConfig())
    cfg = load_config(overrides=["run.output_dir=exp/a"])
    test_eq(resolve_run_dir(cfg, {OUTPUT_ROOT_ENV: str(tmp_path)}), tmp_path / "exp" / "a")
    absolute = load_config(overrides=[f"run.output_dir={tmp_path / 'abs'}"])
    test_eq(resolve_run_dir(absolute, {OUTPUT_ROOT_ENV: "/elsewhere"}), tmp_path / "abs")


def test_run_lock(tmp_path):
    with RunLock(tmp_path / "run"):
        assert (tmp_path / "run" / ".lock").is_file()
        with pytest.raises(ConfigError):
            with RunLock(tmp_path / "run"):
                pass
    assert not (tmp_path / "run" / ".lock").exists()


def test_load_datasets_holds_out_validation():
    cfg = load_config(overrides=["data.size=20", "data.val_fraction=0.25"])
    data = load_datasets(cfg, SeedStreams(cfg.seed))
    test_eq((len(data.ifa), len(data.val_ifa)), (15, 5))
    test_eq((len(data.preferences), len(data.val_preferences)), (15, 5))
    test_eq(load_datasets(cfg, SeedStreams(cfg.seed)).hashes(), data.hashes())
    assert not set(data.ifa) & set(data.val_ifa)


def _run(stage, tmp_path, *extra, name=None):
    out = tmp_path / (name or stage)
    return run_stage(stage, overrides=TINY + [f"run.output_dir={out}", *extra]), out


def test_exit_codes(tmp_path, monkeypatch):
    test_eq(run_stage("train", environ={OUTPUT_ROOT_ENV: str(tmp_path)}), EXIT_CONFIG)
    test_eq(_run("sft", tmp_path, "hbat.bogus=1")[0], EXIT_CONFIG)
    test_eq(_run("ppo", tmp_path)[0], EXIT_CONFIG)
    test_eq(_run("dpo", tmp_path)[0], EXIT_CONFIG)
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"prompt": "abc"}\n', encoding="utf-8")
    test_eq(_run("sft", tmp_path, f"data.ifa_path={bad}", name="bad")[0], EXIT_FAILED)
    latin = tmp_path / "latin.jsonl"
    latin.write_bytes(b'{"prompt": "\xe9t\xe9", "response": "x"}\n')
    test_eq(_run("sft", tmp_path, f"data.ifa_path={latin}", name="latin")[0], EXIT_FAILED)

    def diverge(*args, **kwargs):
        raise NumericAbort("IFA1", 2)

    monkeypatch.setattr(scheduler, "train_mle", diverge)
    code, out = _run("sft", tmp_path, name="abort")
    test_eq(code, EXIT_ABORT)
    assert "Numeric abort" in (out / "run.log").read_text(encoding="utf-8")


def test_run_manifest(tmp_path):
    code, out = _run("sft", tmp_path)
    test_eq(code, EXIT_OK)
    for name in ("config.ini", "run.json", "run.log", "policy.ckpt", "metrics.csv", "summary.json"):
        assert (out / name).is_file(), name
    assert not (out / ".lock").exists()
    manifest = json.loads((out / "run.json").read_text(encoding="utf-8"))
    test_eq(manifest["stage"], "sft")
    test_eq(sorted(manifest["seeds"]), sorted(cli.SEED_STREAMS))
    test_eq(load_config(out / "config.ini"), load_config(overrides=TINY + [f"run.output_dir={out}"]))
    summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
    assert "IFA1" in summary["phase_metrics"]


def test_stage_chain_matches_two_stage_schedule(tmp_path):
    code, sft = _run("sft", tmp_path)
    test_eq(code, EXIT_OK)
    code, dpo = _run("dpo", tmp_path, f"run.policy_checkpoint={sft / 'policy.ckpt'}")
    test_eq(code, EXIT_OK)
    code, two = _run("hbat", tmp_path, "hbat.mode=two-stage", "hbat.n_splits=1", "hbat.lam=0")
    test_eq(code, EXIT_OK)
    chained, scheduled = load_checkpoint(dpo / "policy.ckpt"), load_checkpoint(two / "phase_02_HPA1.ckpt")
    for k in chained.names:
        test_eq(chained[k].data.tobytes(), scheduled[k].data.tobytes())
    assert (two / "final.ckpt").is_file() and (two / "ledger.bin").is_file()


def test_eval_is_reproducible(tmp_path):
    code, sft = _run("sft", tmp_path)
    test_eq(code, EXIT_OK)
    ckpt = f"run.policy_checkpoint={sft / 'policy.ckpt'}"
    init = f"run.comparison_checkpoint={sft / 'policy.ckpt'}"
    outs = [_run("eval", tmp_path, ckpt, init, name=f"eval{i}")[1] for i in range(2)]
    for name in ("eval.json", "metrics.csv", "summary.json"):
        test_eq((outs[0] / name).read_bytes(), (outs[1] / name).read_bytes())
    body = json.loads((outs[0] / "eval.json").read_text(encoding="utf-8"))
    assert {"val_loss", "perplexity", "margin"} <= set(body["eval"])
    # a policy compared with itself only produces ties
    test_eq(body["eval"]["win_rate"], None)


def test_rm_train_then_ppo(tmp_path):
    code, sft = _run("sft", tmp_path)
    test_eq(code, EXIT_OK)
    policy = f"run.policy_checkpoint={sft / 'policy.ckpt'}"
    code, rm = _run("rm-train", tmp_path, policy)
    test_eq(code, EXIT_OK)
    summary = json.loads((rm / "summary.json").read_text(encoding="utf-8"))
    assert 0.0 <= summary["reward_accuracy"] <= 1.0
    test_eq(load_checkpoint(rm / "reward.ckpt").kind, "reward")
    code, ppo = _run("ppo", tmp_path, policy, f"run.reward_checkpoint={rm / 'reward.ckpt'}")
    test_eq(code, EXIT_OK)
    assert (ppo / "value.ckpt").is_file()
    summary = json.loads((ppo / "summary.json").read_text(encoding="utf-8"))
    test_eq(len(summary["cold_start_curve"]), 3)
    assert np.isfinite(summary["phase_metrics"]["HPA1"]["reward"])
