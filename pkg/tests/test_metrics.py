import json
import math

import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail

from cjm_hybrid_alignment.errors import RecordError
from cjm_hybrid_alignment.evaluation.metrics import (METRIC_COLUMNS, emit_metrics, exact_match_judge, load_judgments,
                                                     mean_mle_loss, mean_reward, metrics_frame, perplexity,
                                                     preference_margin, reward_accuracy, temperature_sweep, win_rate)
from cjm_hybrid_alignment.models import GenerationSettings, PairwiseJudgment, StepMetric, Verdict


def _judgments(verdicts):
    return [PairwiseJudgment(str(i), Verdict(v)) for i, v in enumerate(verdicts)]


def test_win_rate_counts_non_ties():
    judgments = _judgments(["A"] * 6 + ["B"] * 2 + ["Tie"] * 2)
    test_eq(win_rate(judgments), (0.75, 0.25))
    test_eq(win_rate(_judgments(["A", "Tie"])), (1.0, 0.0))


def test_win_rate_sums_to_one(rng):
    for _ in range(1000):
        n = int(rng.integers(1, 20))
        verdicts = list(rng.choice(["A", "B", "Tie"], size=n))
        if all(v == "Tie" for v in verdicts):
            verdicts[0] = "A"
        a, b = win_rate(_judgments(verdicts))
        test_close(a + b, 1.0, eps=1e-12)


def test_win_rate_errors():
    test_fail(lambda: win_rate(_judgments(["Tie", "Tie"])), contains="every judgment is a tie")
    dup = [PairwiseJudgment("x", Verdict.A), PairwiseJudgment("x", Verdict.B)]
    with pytest.raises(RecordError):
        win_rate(dup)


def test_exact_match_judge():
    out = exact_match_judge(["ab", "cd", "ef", "gh"], ["ab", "xx", "ef", "yy"], ["zz", "cd", "ef", "ww"])
    test_eq([j.verdict for j in out], [Verdict.A, Verdict.B, Verdict.TIE, Verdict.TIE])
    test_eq([j.item_id for j in out], ["0", "1", "2", "3"])
    test_eq(exact_match_judge(["a"], ["a"], ["b"], ids=["q7"])[0].item_id, "q7")
    test_fail(lambda: exact_match_judge(["a"], ["a"], []), contains="equal length")


def test_load_judgments(tmp_path):
    path = tmp_path / "j.jsonl"
    path.write_text('{"id": "1", "verdict": "A"}\n{"id": 2, "verdict": "Tie"}\n', encoding="utf-8")
    test_eq(load_judgments(path), [PairwiseJudgment("1", Verdict.A), PairwiseJudgment("2", Verdict.TIE)])
    path.write_text('{"id": "1", "winner": "A"}\n', encoding="utf-8")
    test_fail(lambda: load_judgments(path), contains="j.jsonl:1: wrong field set")
    path.write_text('{"id": "1", "verdict": "C"}\n', encoding="utf-8")
    test_fail(lambda: load_judgments(path), contains="verdict must be one of")


PAIRS = [([1, 2], [3, 4, 0]), ([1], [2, 2]), ([1, 3, 3], [4])]


def test_perplexity(grad_lm, grad_config):
    ppl = perplexity(grad_lm, PAIRS)
    assert ppl >= 1.0
    test_close(perplexity(grad_lm, PAIRS[::-1]), ppl, eps=1e-12)
    V = grad_config.vocab_size
    uniform = grad_lm.with_arrays({"lm_head.w": np.zeros((grad_config.width, V)), "lm_head.b": np.zeros(V)})
    test_close(perplexity(uniform, PAIRS), float(V), eps=1e-9)
    test_close(mean_mle_loss(uniform, PAIRS), math.log(V) * 6 / 3, eps=1e-9)
    test_fail(lambda: perplexity(grad_lm, []), contains="at least one record")


def test_preference_margin_and_accuracy(grad_lm, grad_rm):
    triples = [([1, 2], [3, 4], [4, 3]), ([1], [2], [3, 3])]
    test_eq(preference_margin(grad_lm, triples, reference=grad_lm), 0.0)
    raw = preference_margin(grad_lm, triples)
    test_close(preference_margin(grad_lm, triples[::-1]), raw, eps=1e-12)
    acc = reward_accuracy(grad_rm, triples)
    assert acc in (0.0, 0.5, 1.0)
    flipped = [(x, yl, yw) for x, yw, yl in triples]
    test_close(acc + reward_accuracy(grad_rm, flipped), 1.0, eps=1e-12)


def test_mean_reward_is_seeded_per_prompt(grad_lm, grad_rm):
    prompts = [[1, 2], [1, 3], [1]]
    settings = GenerationSettings(temperature=1.0, max_new_tokens=2, seed=4)
    mean, scores = mean_reward(grad_lm, grad_rm, prompts, settings)
    test_close(mean, sum(scores) / 3, eps=1e-12)
    _, again = mean_reward(grad_lm, grad_rm, prompts[::-1], settings)
    test_eq(again, scores[::-1])
    sweep = temperature_sweep(grad_lm, grad_rm, prompts, settings, temperatures=(0.5, 1.0))
    test_eq(list(sweep), [0.5, 1.0])
    test_eq(sweep[1.0], mean)
    test_fail(lambda: mean_reward(grad_lm, grad_rm, [], settings), contains="at least one prompt")


def _rows():
    return [StepMetric("IFA1", 1, 2.5), StepMetric("IFA1", 2, 2.0, margin=0.1), StepMetric("HPA1", 1, 0.69, reward=0.3)]


def test_metrics_frame_columns():
    test_eq(list(metrics_frame([]).columns), METRIC_COLUMNS)
    df = metrics_frame(_rows())
    test_eq(df["phase"].tolist(), ["IFA1", "IFA1", "HPA1"])
    assert df["perplexity"].isna().all()


def test_emit_metrics_is_byte_stable(tmp_path):
    summary = {"selected": "HPA1", "bad": float("nan"), "nested": {"x": float("inf")}}
    csv_a, json_a = emit_metrics(_rows(), tmp_path / "a", summary)
    csv_b, json_b = emit_metrics(_rows(), tmp_path / "b", dict(summary))
    test_eq(csv_a.read_bytes(), csv_b.read_bytes())
    test_eq(json_a.read_bytes(), json_b.read_bytes())
    test_eq(csv_a.read_text(encoding="utf-8").splitlines()[0], ",".join(METRIC_COLUMNS))
    body = json.loads(json_a.read_text(encoding="utf-8"))
    test_eq(body["rows"], 3)
    test_eq(body["phases"], ["IFA1", "HPA1"])
    test_eq(body["bad"], None)
    test_eq(body["nested"], {"x": None})
    test_eq(body["mean"]["perplexity"], None)
    test_close(body["mean"]["loss"], (2.5 + 2.0 + 0.69) / 3, eps=1e-12)
