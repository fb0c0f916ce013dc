import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail

from cjm_hybrid_alignment.core.checkpoint import (MAGIC, encode_container, load_checkpoint, read_container,
                                                  save_checkpoint, write_container)
from cjm_hybrid_alignment.core.model import ParameterSet, init_scalar_model
from cjm_hybrid_alignment.core.optim import MomentumSGD
from cjm_hybrid_alignment.errors import CheckpointError
from cjm_hybrid_alignment.models import OptimSettings, Side, SnapshotLabel


def test_checkpoint_round_trip_is_bit_exact(byte_lm, tmp_path):
    path = save_checkpoint(byte_lm, tmp_path / "p.ckpt", SnapshotLabel("HPA2", Side.HPA, 2))
    loaded = load_checkpoint(path)
    test_eq(loaded.names, byte_lm.names)
    test_eq(loaded.config, byte_lm.config)
    test_eq(loaded.kind, "lm")
    for k in byte_lm.names:
        test_eq(loaded[k].data.tobytes(), byte_lm[k].data.tobytes())
        test_eq(loaded[k].dtype, byte_lm[k].dtype)
    manifest, _ = read_container(path)
    test_eq(manifest["label"], {"phase_id": "HPA2", "side": "HPA", "subset": 2})
    again = save_checkpoint(loaded, tmp_path / "q.ckpt", SnapshotLabel("HPA2", Side.HPA, 2))
    test_eq(again.read_bytes(), path.read_bytes())


def test_scalar_model_kind_survives(byte_lm, tmp_path):
    rm = init_scalar_model(byte_lm, "reward")
    test_eq(load_checkpoint(save_checkpoint(rm, tmp_path / "rm.ckpt")).kind, "reward")


def test_container_mmap_and_empty_units(tmp_path):
    arrays = {"a": np.arange(6, dtype=np.float32).reshape(2, 3), "empty": np.zeros((0, 4)), "b": np.array([1.5])}
    path = write_container(tmp_path / "c.bin", arrays, {"kind": "test"})
    for mmap in (False, True):
        manifest, out = read_container(path, mmap=mmap)
        test_eq(manifest["kind"], "test")
        test_eq(list(out), ["a", "empty", "b"])
        test_eq(np.asarray(out["a"]), arrays["a"])
        test_eq(out["empty"].shape, (0, 4))
    assert encode_container(arrays).startswith(MAGIC)


def test_corrupt_containers(tmp_path, byte_lm):
    bad = tmp_path / "bad.ckpt"
    bad.write_bytes(b"NOTACKPT" + bytes(8))
    test_fail(lambda: read_container(bad), contains="bad magic")
    good = save_checkpoint(byte_lm, tmp_path / "good.ckpt")
    truncated = tmp_path / "trunc.ckpt"
    truncated.write_bytes(good.read_bytes()[:-16])
    with pytest.raises(CheckpointError):
        load_checkpoint(truncated)
    with pytest.raises(CheckpointError):
        read_container(tmp_path / "missing.ckpt")
    ledger_like = write_container(tmp_path / "l.bin", {"x": np.zeros(1)}, {"kind": "ledger"})
    test_fail(lambda: load_checkpoint(ledger_like), contains="not parameters")


def _params():
    return ParameterSet({"w": np.array([1.0, 1.0]), "b": np.array([0.0])}, kind="custom")


def test_sgd_clips_and_skips_frozen():
    params = _params()
    opt = MomentumSGD(params, OptimSettings(lr=1.0, momentum=0.0, max_grad_norm=1.0), frozen=["b"])
    norm = opt.step({"w": np.array([3.0, 4.0]), "b": np.array([100.0])})
    test_close(norm, 5.0, eps=1e-12)
    test_close(params["w"].data, np.array([1.0 - 0.6, 1.0 - 0.8]), eps=1e-12)
    test_eq(params["b"].data, np.array([0.0]))


def test_sgd_momentum():
    params = _params()
    opt = MomentumSGD(params, OptimSettings(lr=0.1, momentum=0.5, max_grad_norm=0.0))
    g = {"w": np.array([1.0, 0.0]), "b": np.array([0.0])}
    opt.step(g)
    opt.step(g)
    # velocities 1.0 then 1.5
    test_close(params["w"].data, np.array([1.0 - 0.1 - 0.15, 1.0]), eps=1e-12)
    opt.reset()
    test_eq(opt.velocity["w"], np.zeros(2))


def test_sgd_rejects_bad_input():
    params = _params()
    test_fail(lambda: MomentumSGD(params, OptimSettings(), frozen=["nope"]), contains="unknown units")
    opt = MomentumSGD(params, OptimSettings())
    test_fail(lambda: opt.step({"w": np.array([np.inf, 0.0])}), contains="not finite")
