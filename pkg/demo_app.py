"""Demo script for the cjm-hybrid-alignment library.

Runs the whole pipeline on the bundled synthetic reverse task: SFT, reward-model
training, two-stage DPO, the alternating schedule and a final evaluation that
compares the alternating policy against the two-stage one.

Run with: python demo_app.py [output_root]
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, List

from cjm_hybrid_alignment.cli import EXIT_OK, run_stage


# =============================================================================
# Configuration
# =============================================================================

# Small enough to finish in a few minutes on a laptop CPU
DEMO_OVERRIDES = [
    "model.width=32",
    "model.n_layers=2",
    "model.n_heads=2",
    "model.context_length=24",
    "data.task=reverse",
    "data.size=128",
    "sft.epochs=3",
    "rm.epochs=2",
    "dpo.epochs=2",
    "generation.max_new_tokens=10",
    "hbat.n_splits=2",
    "hbat.lam=1.0",
    "run.seed=0",
]


# =============================================================================
# Helpers
# =============================================================================

def run(stage: str, root: Path, name: str, *extra: str) -> Path:
    """Run one stage into `root/name` and stop the demo on failure."""
    out = root / name
    print(f"  {stage:<9} -> {out}")
    code = run_stage(stage, overrides=DEMO_OVERRIDES + [f"run.output_dir={out}", *extra])
    if code != EXIT_OK:
        print(f"  {stage} failed with exit code {code}; see {out / 'run.log'}")
        sys.exit(code)
    return out


def read_summary(run_dir: Path) -> Dict[str, Any]:
    return json.loads((run_dir / "summary.json").read_text(encoding="utf-8"))


def report(rows: List[tuple]):
    print(f"  {'run':<14}{'val loss':>10}{'perplexity':>12}{'margin':>10}")
    for name, metrics in rows:
        cells = [metrics.get(k) for k in ("val_loss", "perplexity", "margin")]
        print(f"  {name:<14}" + "".join(f"{c:>10.4f}" if c is not None else f"{'-':>10}" for c in cells))


# =============================================================================
# Main
# =============================================================================

def main(root: Path):
    print("\n" + "=" * 70)
    print("cjm-hybrid-alignment Demo")
    print("=" * 70)

    sft = run("sft", root, "sft")
    policy = f"run.policy_checkpoint={sft / 'policy.ckpt'}"
    rm = run("rm-train", root, "rm", policy)
    two_stage = run("dpo", root, "dpo", policy)
    hbat = run("hbat", root, "hbat")
    freeze = run("hbat", root, "hbat-freeze", "hbat.mode=hbat-freeze")
    evaluation = run("eval", root, "eval", f"run.policy_checkpoint={hbat / 'final.ckpt'}",
                     f"run.reward_checkpoint={rm / 'reward.ckpt'}",
                     f"run.comparison_checkpoint={two_stage / 'policy.ckpt'}")

    print("\n" + "=" * 70)
    print("Results")
    print("=" * 70)
    print(f"  Reward-model accuracy: {read_summary(rm)['reward_accuracy']}")
    hbat_summary, freeze_summary = read_summary(hbat), read_summary(freeze)
    report([
        ("sft", read_summary(sft)["phase_metrics"]["IFA1"]),
        ("two-stage", read_summary(two_stage)["phase_metrics"]["HPA1"]),
        ("hbat", hbat_summary["phase_metrics"][hbat_summary["best_phase"]]),
        ("hbat-freeze", freeze_summary["phase_metrics"][freeze_summary["best_phase"]]),
    ])
    eval_metrics = json.loads((evaluation / "eval.json").read_text(encoding="utf-8"))["eval"]
    print(f"  Exact-match win rate (hbat vs two-stage): {eval_metrics.get('win_rate')}")
    print(f"  Reward by temperature: {eval_metrics.get('temperature_sweep')}")
    print("=" * 70 + "\n")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path("runs") / "demo")
