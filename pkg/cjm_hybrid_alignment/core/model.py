"""Tiny decoder-only causal language model with reward and value heads"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/model.ipynb.

# %% auto #0
__all__ = ['HEAD_KINDS', 'ParameterUnit', 'ParameterSet', 'init_lm_params', 'init_scalar_model', 'backbone_forward',
           'lm_forward', 'token_logprobs', 'sequence_logprob', 'nucleus_distribution', 'sample_token', 'generate',
           'reward_forward', 'value_forward']

# %% ../../nbs/core/model.ipynb #model-imports
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import DomainError, ShapeError
from ..models import GenerationSettings, ModelConfig
from ..data.tokenizer import EOS_ID
from .tensor import Tensor, embedding, layer_norm, no_grad

# %% ../../nbs/core/model.ipynb #model-parameter-unit
@dataclass
class ParameterUnit:
    """One named weight matrix or bias vector."""

    name: str  # Stable path, e.g. "block.0.attn.wq"
    tensor: Tensor  # Trainable values

    @property
    def n_neurons(self) -> int:  # Number of scalars |theta_i|
        return self.tensor.size

# %% ../../nbs/core/model.ipynb #model-parameter-set
class ParameterSet:
    """Ordered collection of parameter units plus the model config they belong to."""

    def __init__(
        self,
        units: Union[Iterable[ParameterUnit], Mapping[str, np.ndarray]],  # Units or name -> array
        config: Optional[ModelConfig] = None,  # Model shape (None for hand-built toy sets)
        kind: str = "lm",  # "lm", "reward", "value" or "custom"
    ):
        self.config = config
        self.kind = kind
        self._units: Dict[str, ParameterUnit] = {}
        if isinstance(units, dict):
            units = [ParameterUnit(k, Tensor(v, requires_grad=True, name=k)) for k, v in units.items()]
        for unit in units:
            if unit.name in self._units:
                raise DomainError(f"duplicate parameter unit name {unit.name!r}")
            unit.tensor.name = unit.name
            unit.tensor.requires_grad = True
            self._units[unit.name] = unit
        if not self._units or self.total_size == 0:
            raise DomainError("a ParameterSet needs at least one scalar")
        self.check_finite()

    def __getitem__(self, name: str) -> Tensor:
        try:
            return self._units[name].tensor
        except KeyError:
            raise KeyError(f"no parameter unit named {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._units

    def __iter__(self) -> Iterator[str]:
        return iter(self._units)

    def __len__(self) -> int:
        return len(self._units)

    def __repr__(self):
        return f"ParameterSet(kind={self.kind!r}, units={len(self)}, scalars={self.total_size})"

    @property
    def names(self) -> List[str]:  # Unit names in insertion order
        return list(self._units)

    @property
    def units(self) -> List[ParameterUnit]:  # Units in insertion order
        return list(self._units.values())

    @property
    def total_size(self) -> int:  # Total scalar count
        return sum(u.n_neurons for u in self._units.values())

    def tensors(self) -> List[Tensor]:
        """Live tensors in unit order."""
        return [u.tensor for u in self._units.values()]

    def arrays(self) -> Dict[str, np.ndarray]:
        """Live arrays by name (views, not copies)."""
        return {k: u.tensor.data for k, u in self._units.items()}

    def check_finite(self):
        """Raise if any unit holds NaN or Inf."""
        for k, u in self._units.items():
            if not np.all(np.isfinite(u.tensor.data)):
                raise DomainError(f"parameter unit {k!r} holds non-finite values")

    def copy(self) -> "ParameterSet":
        """Deep copy with fresh tensors."""
        return ParameterSet({k: np.array(v, copy=True) for k, v in self.arrays().items()}, self.config, self.kind)

    def with_arrays(
        self,
        arrays: Mapping[str, np.ndarray]  # Replacement values for some or all units
    ) -> "ParameterSet":  # New set; units not named keep copies of current values
        """Copy of this set with some units replaced."""
        values = {}
        for k, v in self.arrays().items():
            new = np.asarray(arrays[k], dtype=v.dtype) if k in arrays else v
            if new.shape != v.shape:
                raise ShapeError("with_arrays", [v.shape, new.shape], k)
            values[k] = np.array(new, copy=True)
        return ParameterSet(values, self.config, self.kind)

    def assign_(
        self,
        arrays: Mapping[str, np.ndarray]  # Values to copy into the live tensors
    ) -> "ParameterSet":  # self
        """Overwrite live values in place, unit by unit."""
        for k, v in arrays.items():
            dst = self[k].data
            if np.shape(v) != dst.shape:
                raise ShapeError("assign", [dst.shape, np.shape(v)], k)
            dst[...] = v
        return self

# %% ../../nbs/core/model.ipynb #model-init
HEAD_KINDS = ("reward", "value")

def _normal(rng, shape, fan_in, dtype):
    return (rng.standard_normal(shape) / math.sqrt(fan_in)).astype(dtype)

def init_lm_params(
    config: ModelConfig,  # Model shape
    seed: int = 0  # Initialisation seed
) -> ParameterSet:  # Freshly initialised language model
    """Scaled-normal initialisation with per-unit fan-in scaling."""
    rng = np.random.default_rng(seed)
    d, v, dt = config.width, config.vocab_size, config.dtype
    hidden = config.mlp_ratio * d
    arrays: Dict[str, np.ndarray] = {
        "tok_emb": _normal(rng, (v, d), d, dt),
        "pos_emb": _normal(rng, (config.context_length, d), d, dt),
    }
    for i in range(config.n_layers):
        p = f"block.{i}."
        arrays[p + "ln1.gamma"] = np.ones(d, dtype=dt)
        arrays[p + "ln1.beta"] = np.zeros(d, dtype=dt)
        for w in ("wq", "wk", "wv", "wo"):
            arrays[p + f"attn.{w}"] = _normal(rng, (d, d), d, dt)
            arrays[p + f"attn.b{w[1]}"] = np.zeros(d, dtype=dt)
        arrays[p + "ln2.gamma"] = np.ones(d, dtype=dt)
        arrays[p + "ln2.beta"] = np.zeros(d, dtype=dt)
        arrays[p + "mlp.w1"] = _normal(rng, (d, hidden), d, dt)
        arrays[p + "mlp.b1"] = np.zeros(hidden, dtype=dt)
        arrays[p + "mlp.w2"] = _normal(rng, (hidden, d), hidden, dt)
        arrays[p + "mlp.b2"] = np.zeros(d, dtype=dt)
    arrays["ln_f.gamma"] = np.ones(d, dtype=dt)
    arrays["ln_f.beta"] = np.zeros(d, dtype=dt)
    arrays["lm_head.w"] = _normal(rng, (d, v), d, dt)
    arrays["lm_head.b"] = np.zeros(v, dtype=dt)
    return ParameterSet(arrays, config, kind="lm")

def init_scalar_model(
    source: ParameterSet,  # Language model whose backbone is copied (normally the IFA-trained policy)
    head: str = "reward",  # "reward" or "value"
    seed: Optional[int] = None  # Random head init; None gives a zero head
) -> ParameterSet:  # Backbone copy plus a scalar head
    """Build a reward or value model on a copy of a language model's backbone."""
    if head not in HEAD_KINDS:
        raise DomainError(f"head must be one of {HEAD_KINDS}, got {head!r}")
    d, dt = source.config.width, source.config.dtype
    arrays = {k: np.array(v, copy=True) for k, v in source.arrays().items()
              if not k.split(".")[0].endswith("_head")}
    if seed is None:
        arrays[f"{head}_head.w"] = np.zeros(d, dtype=dt)
    else:
        arrays[f"{head}_head.w"] = _normal(np.random.default_rng(seed), (d,), d, dt)
    arrays[f"{head}_head.b"] = np.zeros(1, dtype=dt)
    return ParameterSet(arrays, source.config, kind=head)

# %% ../../nbs/core/model.ipynb #model-forward
def _check_tokens(tokens: Sequence[int], config: ModelConfig) -> np.ndarray:
    ids = np.asarray(list(tokens), dtype=np.int64)
    if ids.size == 0:
        raise DomainError("token sequence is empty")
    if ids.size > config.context_length:
        raise DomainError(f"sequence of {ids.size} tokens exceeds context length {config.context_length}")
    if ids.min() < 0 or ids.max() >= config.vocab_size:
        raise DomainError(f"token ids must lie in [0, {config.vocab_size})")
    return ids

def _causal_mask(n: int, dtype) -> Tensor:
    return Tensor(np.triu(np.full((n, n), -1e9), k=1), dtype=dtype)

def _attention(h: Tensor, params: ParameterSet, p: str, config: ModelConfig, mask: Tensor) -> Tensor:
    n, heads = h.shape[0], config.n_heads
    dh = config.width // heads
    q = (h @ params[p + "attn.wq"] + params[p + "attn.bq"]).reshape(n, heads, dh).transpose(1, 0, 2)
    k = (h @ params[p + "attn.wk"] + params[p + "attn.bk"]).reshape(n, heads, dh).transpose(1, 2, 0)
    v = (h @ params[p + "attn.wv"] + params[p + "attn.bv"]).reshape(n, heads, dh).transpose(1, 0, 2)
    att = ((q @ k) * (1.0 / math.sqrt(dh)) + mask).softmax(-1)
    out = (att @ v).transpose(1, 0, 2).reshape(n, config.width)
    return out @ params[p + "attn.wo"] + params[p + "attn.bo"]

def backbone_forward(
    params: ParameterSet,  # Language, reward or value model
    tokens: Sequence[int]  # Token ids
) -> Tensor:  # (len, width) final hidden states
    """Transformer backbone with a causal mask."""
    config = params.config
    ids = _check_tokens(tokens, config)
    n = ids.size
    x = embedding(params["tok_emb"], ids) + params["pos_emb"][:n]
    mask = _causal_mask(n, config.dtype)
    for i in range(config.n_layers):
        p = f"block.{i}."
        h = layer_norm(x, params[p + "ln1.gamma"], params[p + "ln1.beta"])
        x = x + _attention(h, params, p, config, mask)
        h = layer_norm(x, params[p + "ln2.gamma"], params[p + "ln2.beta"])
        x = x + ((h @ params[p + "mlp.w1"] + params[p + "mlp.b1"]).gelu() @ params[p + "mlp.w2"] + params[p + "mlp.b2"])
    return layer_norm(x, params["ln_f.gamma"], params["ln_f.beta"])

def lm_forward(
    params: ParameterSet,  # Language model
    tokens: Sequence[int]  # Token ids
) -> Tensor:  # (len, vocab) next-token logits
    """Next-token logits; position t only sees tokens up to t."""
    return backbone_forward(params, tokens) @ params["lm_head.w"] + params["lm_head.b"]

# %% ../../nbs/core/model.ipynb #model-logprob
def token_logprobs(
    params: ParameterSet,  # Language model
    x: Sequence[int],  # Prompt ids (at least one token, normally BOS-led)
    y: Sequence[int]  # Response ids
) -> Tensor:  # (len(y),) log p(y_t | y_<t, x)
    """Per-token log-probabilities of a response given a prompt."""
    x, y = list(x), list(y)
    if not y:
        raise DomainError("response must hold at least one token")
    if not x:
        raise DomainError("prompt must hold at least one token")
    if len(x) + len(y) > params.config.context_length:
        raise DomainError(f"prompt + response ({len(x) + len(y)}) exceeds context length {params.config.context_length}")
    logp = lm_forward(params, x + y[:-1]).log_softmax(-1)
    rows = np.arange(len(x) - 1, len(x) + len(y) - 1)
    return logp[(rows, np.asarray(y, dtype=np.int64))]

def sequence_logprob(
    params: ParameterSet,  # Language model
    x: Sequence[int],  # Prompt ids
    y: Sequence[int]  # Response ids
) -> Tensor:  # Scalar log p(y | x)
    """Sequence log-probability: the sum of per-token log-softmax values."""
    return token_logprobs(params, x, y).sum()

# %% ../../nbs/core/model.ipynb #model-sampling
def nucleus_distribution(
    probs: np.ndarray,  # Probability vector
    top_p: float  # Nucleus mass threshold
) -> Tuple[np.ndarray, np.ndarray]:  # (token ids, renormalised probabilities)
    """Smallest probability-descending prefix with mass >= top_p, renormalised."""
    probs = np.asarray(probs, dtype=np.float64)
    order = np.argsort(-probs, kind="stable")
    cum = np.cumsum(probs[order])
    k = min(int(np.searchsorted(cum, top_p - 1e-12, side="left")) + 1, probs.size)
    keep = order[:k]
    return keep, probs[keep] / probs[keep].sum()

def sample_token(
    logits: np.ndarray,  # (vocab,) logits of the next position
    settings: GenerationSettings,  # Temperature and top-p
    rng: np.random.Generator  # Sampling stream
) -> int:  # Sampled token id
    """Temperature-scaled nucleus sampling; greedy below temperature 1e-6."""
    logits = np.asarray(logits, dtype=np.float64)
    if settings.temperature < 1e-6:
        return int(np.argmax(logits))
    z = logits / settings.temperature
    e = np.exp(z - z.max())
    ids, p = nucleus_distribution(e / e.sum(), settings.top_p)
    return int(ids[rng.choice(ids.size, p=p)])

def generate(
    params: ParameterSet,  # Language model
    prompt: Sequence[int],  # Prompt ids
    settings: GenerationSettings,  # Sampling settings
    rng: Optional[np.random.Generator] = None,  # Sampling stream (default: seeded from settings.seed)
    stop_token: Optional[int] = EOS_ID  # Token that ends generation (kept in the output)
) -> List[int]:  # Sampled response ids
    """Sample a response token by token."""
    tokens = list(_check_tokens(prompt, params.config))
    rng = rng if rng is not None else np.random.default_rng(settings.seed)
    out: List[int] = []
    with no_grad():
        for _ in range(settings.max_new_tokens):
            if len(tokens) >= params.config.context_length:
                break
            tok = sample_token(lm_forward(params, tokens).data[-1], settings, rng)
            out.append(tok)
            tokens.append(tok)
            if stop_token is not None and tok == stop_token:
                break
    return out

# %% ../../nbs/core/model.ipynb #model-heads
def _scalar_head(params: ParameterSet, tokens: List[int], head: str) -> Tensor:
    if params.kind != head:
        raise DomainError(f"expected a {head} model, got kind {params.kind!r}")
    h = backbone_forward(params, tokens)[len(tokens) - 1]
    return (h * params[f"{head}_head.w"]).sum() + params[f"{head}_head.b"].sum()

def reward_forward(
    params_rm: ParameterSet,  # Reward model
    x: Sequence[int],  # Prompt ids
    y: Sequence[int]  # Response ids
) -> Tensor:  # Scalar reward read at the final response token
    """Scalar reward of a response."""
    if not len(y):
        raise DomainError("response must hold at least one token")
    return _scalar_head(params_rm, list(x) + list(y), "reward")

def value_forward(
    params_vm: ParameterSet,  # Value model
    x: Sequence[int],  # Prompt ids
    y_partial: Sequence[int] = ()  # Response prefix (may be empty)
) -> Tensor:  # Scalar value estimate at the last prefix position
    """Baseline value of a (prompt, partial response) state."""
    if not len(x):
        raise DomainError("prompt must hold at least one token")
    return _scalar_head(params_vm, list(x) + list(y_partial), "value")
