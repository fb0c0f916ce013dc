"""Reward scoring, perplexity, preference margins, win rates and metrics files"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/evaluation/metrics.ipynb.

# %% auto #0
__all__ = ['METRIC_COLUMNS', 'mean_reward', 'temperature_sweep', 'perplexity', 'mean_mle_loss', 'preference_margin',
           'reward_accuracy', 'win_rate', 'exact_match_judge', 'load_judgments', 'metrics_frame', 'emit_metrics']

# %% ../../nbs/evaluation/metrics.ipynb #metrics-imports
import json
import logging
import math
from dataclasses import asdict, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ..errors import ConfigError, DomainError, RecordError
from ..models import GenerationSettings, PairwiseJudgment, PreferenceRecord, PromptResponseRecord, StepMetric, Verdict
from ..core.model import ParameterSet, generate, reward_forward, sequence_logprob
from ..core.tensor import no_grad
from ..data.records import ifa_tokens, iter_jsonl, preference_tokens
from ..utils import atomic_write_text, derive_seed

logger = logging.getLogger(__name__)

# %% ../../nbs/evaluation/metrics.ipynb #metrics-reward
def mean_reward(
    policy: ParameterSet,  # Policy that generates responses
    params_rm: ParameterSet,  # Reward model
    prompts: Sequence[Sequence[int]],  # Prompt ids
    settings: GenerationSettings  # Sampling settings; the seed is mixed with each prompt
) -> Tuple[float, List[float]]:  # (mean reward, per-prompt rewards in input order)
    """Generate one response per prompt and average its reward."""
    if not len(prompts):
        raise DomainError("mean_reward needs at least one prompt")
    scores = []
    with no_grad():
        for i, x in enumerate(prompts):
            rng = np.random.default_rng(derive_seed(settings.seed, "eval", list(x)))
            y = generate(policy, x, settings, rng)
            if not y:
                raise DomainError(f"generation produced no tokens for prompt {i} (prompt fills the context)")
            scores.append(reward_forward(params_rm, x, y).item())
    return math.fsum(scores) / len(scores), scores

def temperature_sweep(
    policy: ParameterSet,  # Policy that generates responses
    params_rm: ParameterSet,  # Reward model
    prompts: Sequence[Sequence[int]],  # Prompt ids
    settings: GenerationSettings,  # Base sampling settings
    temperatures: Sequence[float] = (0.25, 0.5, 0.75, 1.0)  # Temperatures to evaluate
) -> Dict[float, float]:  # Mean reward per temperature
    """Mean reward of a policy across sampling temperatures."""
    return {float(t): mean_reward(policy, params_rm, prompts, replace(settings, temperature=float(t)))[0]
            for t in temperatures}

# %% ../../nbs/evaluation/metrics.ipynb #metrics-likelihood
def _ifa_items(records) -> List[Tuple[List[int], List[int]]]:
    return [ifa_tokens(r) if isinstance(r, PromptResponseRecord) else (list(r[0]), list(r[1])) for r in records]

def _pref_items(records) -> List[Tuple[List[int], List[int], List[int]]]:
    return [preference_tokens(r) if isinstance(r, PreferenceRecord) else tuple(list(t) for t in r) for r in records]

def perplexity(
    params: ParameterSet,  # Language model
    records: Sequence  # PromptResponseRecords or (prompt ids, response ids) pairs
) -> float:  # exp(total NLL / total response tokens)
    """Per-token perplexity over the response tokens of a record set."""
    items = _ifa_items(records)
    if not items:
        raise DomainError("perplexity needs at least one record")
    with no_grad():
        nll = [-sequence_logprob(params, x, y).item() for x, y in items]
    return math.exp(math.fsum(nll) / sum(len(y) for _, y in items))

def mean_mle_loss(
    params: ParameterSet,  # Language model
    records: Sequence  # PromptResponseRecords or token pairs
) -> float:  # Mean per-record MLE loss
    items = _ifa_items(records)
    if not items:
        raise DomainError("mean_mle_loss needs at least one record")
    with no_grad():
        return math.fsum(-sequence_logprob(params, x, y).item() for x, y in items) / len(items)

def preference_margin(
    params: ParameterSet,  # Policy
    records: Sequence,  # PreferenceRecords or (prompt, chosen, rejected) ids
    reference: Optional[ParameterSet] = None,  # Reference policy for the implicit margin
    beta: float = 1.0  # Implicit-reward scale (with a reference only)
) -> float:  # Mean log p(y_w|x) - log p(y_l|x), or mean beta * (ratio_w - ratio_l)
    """Mean likelihood margin of preferred over dispreferred responses."""
    items = _pref_items(records)
    if not items:
        raise DomainError("preference_margin needs at least one pair")
    margins = []
    with no_grad():
        for x, yw, yl in items:
            m = sequence_logprob(params, x, yw).item() - sequence_logprob(params, x, yl).item()
            if reference is not None:
                m = beta * (m - (sequence_logprob(reference, x, yw).item() - sequence_logprob(reference, x, yl).item()))
            margins.append(m)
    return math.fsum(margins) / len(margins)

def reward_accuracy(
    params_rm: ParameterSet,  # Reward model
    records: Sequence  # PreferenceRecords or token triples
) -> float:  # Share of pairs with r(y_w) > r(y_l)
    items = _pref_items(records)
    if not items:
        raise DomainError("reward_accuracy needs at least one pair")
    with no_grad():
        wins = sum(reward_forward(params_rm, x, yw).item() > reward_forward(params_rm, x, yl).item() for x, yw, yl in items)
    return wins / len(items)

# %% ../../nbs/evaluation/metrics.ipynb #metrics-win-rate
def win_rate(
    judgments: Sequence[PairwiseJudgment]  # One verdict per item
) -> Tuple[float, float]:  # (score_A, score_B) over non-tie judgments
    """Share of non-tie judgments won by each side."""
    ids = [j.item_id for j in judgments]
    if len(set(ids)) != len(ids):
        raise RecordError("each item must carry exactly one verdict")
    a = sum(Verdict(j.verdict) == Verdict.A for j in judgments)
    b = sum(Verdict(j.verdict) == Verdict.B for j in judgments)
    decided = len(judgments) - sum(Verdict(j.verdict) == Verdict.TIE for j in judgments)
    if decided == 0:
        raise DomainError("win rate is undefined when every judgment is a tie")
    return a / decided, b / decided

def exact_match_judge(
    golds: Sequence[str],  # Gold responses
    responses_a: Sequence[str],  # Responses of system A
    responses_b: Sequence[str],  # Responses of system B
    ids: Optional[Sequence[str]] = None  # Item ids (default: positions)
) -> List[PairwiseJudgment]:  # A wins when only A matches gold, B when only B does, else Tie
    """Synthetic judge that prefers the response equal to the gold answer."""
    if not len(golds) == len(responses_a) == len(responses_b):
        raise DomainError("golds and both response lists must have equal length")
    ids = [str(i) for i in range(len(golds))] if ids is None else [str(i) for i in ids]
    out = []
    for i, g, ra, rb in zip(ids, golds, responses_a, responses_b):
        hit_a, hit_b = ra == g, rb == g
        out.append(PairwiseJudgment(i, Verdict.A if hit_a and not hit_b else Verdict.B if hit_b and not hit_a else Verdict.TIE))
    return out

def load_judgments(
    path: Union[str, Path]  # Line-delimited file with fields id and verdict
) -> List[PairwiseJudgment]:  # Judgments in file order
    out = []
    for lineno, obj in iter_jsonl(path):
        if set(obj) != {"id", "verdict"}:
            raise RecordError(f"{path}:{lineno}: wrong field set {sorted(obj)}, expected ['id', 'verdict']")
        try:
            out.append(PairwiseJudgment(str(obj["id"]), Verdict(obj["verdict"])))
        except ValueError:
            raise RecordError(f"{path}:{lineno}: verdict must be one of A, B, Tie; got {obj['verdict']!r}") from None
    return out


# %% ../../nbs/evaluation/metrics.ipynb #metrics-emit
METRIC_COLUMNS = ["phase", "step", "loss", "reward", "margin", "perplexity"]

def metrics_frame(
    rows: Sequence[StepMetric]  # Step metrics of a run
) -> pd.DataFrame:  # Frame with the fixed column order
    if not rows:
        return pd.DataFrame(columns=METRIC_COLUMNS)
    return pd.DataFrame([asdict(r) for r in rows], columns=METRIC_COLUMNS)

def _clean(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return value

def emit_metrics(
    rows: Sequence[StepMetric],  # Step metrics of a run
    out_dir: Union[str, Path],  # Directory receiving metrics.csv and summary.json
    summary: Optional[Dict[str, Any]] = None  # Extra summary fields (selection, phase metrics, ...)
) -> Tuple[Path, Path]:  # (CSV path, summary path)
    """Write the metrics table and a machine-readable summary; identical input gives identical bytes."""
    df = metrics_frame(rows)
    numeric = df[METRIC_COLUMNS[2:]].apply(pd.to_numeric, errors="coerce")
    body = {
        "rows": int(len(df)),
        "phases": list(dict.fromkeys(df["phase"].tolist())),
        "mean": {c: (float(numeric[c].mean()) if numeric[c].notna().any() else None) for c in numeric.columns},
    }
    body.update(summary or {})
    out_dir = Path(out_dir)
    try:
        csv_path = atomic_write_text(out_dir / "metrics.csv", df.to_csv(index=False, lineterminator="\n"))
        summary_path = atomic_write_text(out_dir / "summary.json", json.dumps(_clean(body), indent=2, sort_keys=True) + "\n")
    except OSError as e:
        raise ConfigError(f"cannot write metrics to {out_dir}: {e}") from None
    logger.info("Wrote %d metric rows to %s", len(df), csv_path)
    return csv_path, summary_path
