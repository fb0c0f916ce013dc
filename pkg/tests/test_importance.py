import math

import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail

from cjm_hybrid_alignment.core.importance import (ImportanceLedger, Snapshot, accumulate, accumulate_fisher, compute_F,
                                                  fisher_diagonal, freeze_mask, unit_change)
from cjm_hybrid_alignment.core.model import ParameterSet
from cjm_hybrid_alignment.errors import ShapeError
from cjm_hybrid_alignment.models import Side, SnapshotLabel


def test_compute_F_contract(rng):
    for _ in range(1000):
        n = int(rng.integers(1, 12))
        c = {f"u{i}": float(v) for i, v in enumerate(rng.exponential(rng.uniform(0.01, 5.0), n))}
        f_max = float(rng.uniform(0.5, 100.0))
        F = compute_F(c, f_max)
        test_close(math.fsum(F.values()), f_max, eps=1e-9)
        shifted = compute_F({k: v + 3.7 for k, v in c.items()}, f_max)
        for k in c:
            test_close(shifted[k], F[k], eps=1e-9)
        for i in c:
            for j in c:
                if c[i] > c[j]:
                    assert F[i] > F[j]


def test_compute_F_edge_cases():
    test_fail(lambda: compute_F({}), contains="empty")
    test_eq(compute_F({"only": 3.0}, 50.0), {"only": 50.0})
    F = compute_F({"a": 1.0, "b": 1.0}, 10.0)
    test_close(F["a"], 5.0, eps=1e-12)


def test_unit_change():
    a = {"w": np.array([1.0, 2.0]), "b": np.array([0.5])}
    test_eq(unit_change(a, a), {"w": 0.0, "b": 0.0})
    test_eq(unit_change({"w": np.array([1.0, 2.0])}, {"w": np.array([1.0, 4.0])}), {"w": 2.0})
    with pytest.raises(ShapeError):
        unit_change({"w": np.zeros(2)}, {"w": np.zeros(3)})
    with pytest.raises(ShapeError):
        unit_change({"w": np.zeros(2)}, {"v": np.zeros(2)})


def test_accumulation_matches_replay(rng):
    units = ["a", "b", "c"]
    ledger = ImportanceLedger(units)
    prev = {u: 0.0 for u in units}
    for r in range(10):
        for side in Side:
            ac = accumulate(ledger, side, {u: float(rng.exponential()) for u in units}, f"{side.value}{r + 1}")
            if side == Side.IFA:
                assert all(ac[u] >= prev[u] for u in units)
                prev = ac
    for side in Side:
        test_eq(ledger.count(side), 10)
        replay = ledger.replay_ac(side)
        for u in units:
            assert abs(replay[u] - ledger.ac[side][u]) <= 1e-12
    test_eq(ledger.phase_ids[Side.HPA][:2], ["HPA1", "HPA2"])


def test_accumulate_validates():
    ledger = ImportanceLedger(["a", "b"])
    test_fail(lambda: accumulate(ledger, Side.IFA, {"a": 1.0}), contains="missing")
    test_fail(lambda: accumulate(ledger, Side.IFA, {"a": 1.0, "b": -0.1}), contains="nonnegative")
    test_fail(lambda: ledger.update_F(Side.HPA), contains="no HPA")


def test_ledger_round_trip(tmp_path):
    ledger = ImportanceLedger(["a", "b"], f_max=20.0)
    accumulate(ledger, Side.IFA, {"a": 0.25, "b": 1.5}, "IFA1")
    accumulate(ledger, Side.HPA, {"a": 0.1, "b": 0.0}, "HPA1")
    ledger.update_F(Side.IFA)
    accumulate_fisher(ledger, Side.IFA, {"a": np.array([1.0, 2.0]), "b": np.array([[3.0]])})
    loaded = ImportanceLedger.load(ledger.save(tmp_path / "ledger.bin"))
    test_eq(loaded.units, ledger.units)
    test_eq(loaded.f_max, 20.0)
    for side in Side:
        test_eq(loaded.history[side], ledger.history[side])
        test_eq(loaded.ac[side], ledger.ac[side])
        test_eq(loaded.F[side], ledger.F[side])
        test_eq(loaded.phase_ids[side], ledger.phase_ids[side])
    test_eq(loaded.fisher[Side.IFA]["b"], np.array([[3.0]]))


def _bernoulli_logprob(params, x, y):
    theta = params["theta"].sum()
    return theta.log_sigmoid() if y[0] == 1 else (-theta).log_sigmoid()


def test_fisher_bernoulli_closed_form():
    for theta in (-1.3, 0.0, 0.4, 2.2):
        params = ParameterSet({"theta": np.array([theta])}, kind="custom")
        p = 1 / (1 + math.exp(-theta))
        data = [((0,), (1,))] * 3 + [((0,), (0,))] * 5
        expected = (3 * (1 - p) ** 2 + 5 * p ** 2) / 8
        test_close(fisher_diagonal(params, data, _bernoulli_logprob)["theta"][0], expected, eps=1e-10)
    # outcomes in proportion to p give the analytic Fisher information p(1-p)
    params = ParameterSet({"theta": np.array([0.0])}, kind="custom")
    test_close(fisher_diagonal(params, [((0,), (1,)), ((0,), (0,))], _bernoulli_logprob)["theta"][0], 0.25, eps=1e-12)


def test_fisher_on_toy_lm(grad_lm):
    fisher = fisher_diagonal(grad_lm, [([1, 2], [3, 4]), ([1], [2, 0, 1])])
    test_eq(sorted(fisher), sorted(grad_lm.names))
    for k, v in fisher.items():
        test_eq(v.shape, grad_lm[k].shape)
        assert np.all(v >= 0)
    test_fail(lambda: fisher_diagonal(grad_lm, []), contains="nonempty")


def test_freeze_mask():
    F = {f"u{i}": float(i) for i in range(10)}
    test_eq(freeze_mask(F, 0.2), frozenset({"u9", "u8"}))
    test_eq(freeze_mask(F, 0.0), frozenset())
    test_eq(len(freeze_mask(F, 0.25)), 3)
    test_eq(freeze_mask({"b": 1.0, "a": 1.0, "c": 0.5}, 0.3), frozenset({"b"}))
    test_fail(lambda: freeze_mask(F, 1.0), contains="[0, 1)")


def test_snapshot_is_detached_and_read_only(grad_lm, tmp_path):
    params = grad_lm.copy()
    snap = Snapshot.capture(params, SnapshotLabel("IFA1", Side.IFA, 1))
    params["tok_emb"].data[0, 0] += 1.0
    assert snap["tok_emb"][0, 0] != params["tok_emb"].data[0, 0]
    with pytest.raises(ValueError):
        snap["tok_emb"][0, 0] = 0.0
    saved = snap.save(tmp_path / "snap.ckpt")
    test_eq(saved.label, snap.label)
    test_eq(saved.path, str(tmp_path / "snap.ckpt"))
    for k in snap.names:
        test_eq(np.asarray(saved[k]), snap[k])
    test_eq(unit_change(snap, saved), {k: 0.0 for k in snap.names})


def test_compute_F_hand_example():
    F = compute_F({"a": math.log(3), "b": 0.0}, 4.0)
    test_close(F["a"], 3.0, eps=1e-12)
    test_close(F["b"], 1.0, eps=1e-12)


def test_unit_change_scales_quadratically(rng):
    before = {"w": rng.standard_normal((3, 4)), "b": rng.standard_normal(5)}
    step = {k: rng.standard_normal(v.shape) for k, v in before.items()}
    base = unit_change(before, {k: before[k] + step[k] for k in before})
    for s in (0.5, 2.0, 10.0):
        scaled = unit_change(before, {k: before[k] + s * step[k] for k in before})
        for k in before:
            test_close(scaled[k], s * s * base[k], eps=1e-9 * max(1.0, s * s * base[k]))


def test_freeze_mask_ties_follow_unit_order(grad_lm):
    F = {name: 1.0 for name in grad_lm.names}
    k = math.ceil(0.2 * len(F))
    test_eq(freeze_mask(F, 0.2), frozenset(grad_lm.names[:k]))


def test_freeze_mask_ignores_positive_scale(rng):
    for _ in range(50):
        F = {f"u{i}": float(v) for i, v in enumerate(rng.exponential(1.0, 12))}
        mask = freeze_mask(F, 0.25)
        for scale in (0.01, 3.0, 1e3):
            test_eq(freeze_mask({k: scale * v for k, v in F.items()}, 0.25), mask)


def test_fisher_ignores_duplicated_rows(grad_lm):
    data = [([1, 2], [3, 4]), ([1], [2, 0, 1]), ([4], [1])]
    once = fisher_diagonal(grad_lm, data)
    twice = fisher_diagonal(grad_lm, data + data)
    for k in once:
        assert np.allclose(twice[k], once[k], rtol=1e-12, atol=1e-15)
