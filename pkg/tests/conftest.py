import numpy as np
import pytest
import fastcore.test

from cjm_hybrid_alignment.core.model import init_lm_params, init_scalar_model
from cjm_hybrid_alignment.data.synth import synth_task_generate
from cjm_hybrid_alignment.models import GenerationSettings, HbatConfig, ModelConfig, OptimSettings

# fastcore assertion helpers imported into test modules are not tests themselves
for _helper in (fastcore.test.test_close, fastcore.test.test_eq, fastcore.test.test_fail):
    _helper.__test__ = False


def fast_optim(lr=0.05, batch_size=4, epochs=1):
    return OptimSettings(lr=lr, momentum=0.9, batch_size=batch_size, epochs=epochs)


@pytest.fixture
def grad_config():
    "Small enough for coordinate-wise finite differences."
    return ModelConfig(vocab_size=5, width=4, n_layers=1, n_heads=2, context_length=6, mlp_ratio=2, dtype="float64")


@pytest.fixture
def grad_lm(grad_config):
    return init_lm_params(grad_config, seed=3)


@pytest.fixture
def grad_rm(grad_lm):
    return init_scalar_model(grad_lm, "reward", seed=4)


@pytest.fixture
def byte_config():
    "Byte vocabulary, context long enough for the synthetic task with prompts of up to 5 characters."
    return ModelConfig(width=8, n_layers=1, n_heads=2, context_length=24, mlp_ratio=2, dtype="float64")


@pytest.fixture
def byte_lm(byte_config):
    return init_lm_params(byte_config, seed=0)


@pytest.fixture
def synth_data():
    ifa, prefs = synth_task_generate(7, 16, "reverse", min_len=3, max_len=5)
    return ifa[:12], prefs[:12], ifa[12:], prefs[12:]


@pytest.fixture
def fast_hbat():
    return HbatConfig(
        n_splits=2, sft=fast_optim(), rm=fast_optim(), dpo=fast_optim(0.02), ppo_policy=fast_optim(0.01),
        ppo_value=fast_optim(0.005), generation=GenerationSettings(max_new_tokens=4), cold_start_steps=3, seed=11)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
