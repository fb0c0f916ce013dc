"""Dense numpy tensors with a recorded trace for reverse-mode differentiation"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/tensor.ipynb.

# %% auto #0
__all__ = ['PRIMITIVES', 'Primitive', 'TraceRecord', 'Trace', 'Tensor', 'no_grad', 'is_grad_enabled', 'apply_primitive',
           'concat', 'embedding', 'layer_norm', 'trace_of', 'backward', 'finite_difference_grad']

# %% ../../nbs/core/tensor.ipynb #tensor-imports
import itertools
import math
import threading
import weakref
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import DomainError, ShapeError

# %% ../../nbs/core/tensor.ipynb #tensor-registry
@dataclass(frozen=True)
class Primitive:
    """Forward and reverse rules of one differentiable operation."""

    op_id: str  # Identifier used in trace records
    forward: Callable[..., Tuple[np.ndarray, Any]]  # (*arrays, **attrs) -> (output, saved)
    backward: Callable[..., Tuple[Optional[np.ndarray], ...]]  # (g, arrays, out, saved, **attrs) -> input grads

PRIMITIVES: Dict[str, Primitive] = {}

def _register(op_id, forward, backward):
    PRIMITIVES[op_id] = Primitive(op_id, forward, backward)

def _unbroadcast(g, shape):
    while g.ndim > len(shape):
        g = g.sum(axis=0)
    for i, s in enumerate(shape):
        if s == 1 and g.shape[i] != 1:
            g = g.sum(axis=i, keepdims=True)
    return g.reshape(shape)

def _broadcast_check(op_id, a, b):
    try:
        np.broadcast_shapes(a.shape, b.shape)
    except ValueError:
        raise ShapeError(op_id, [a.shape, b.shape]) from None

def _expand_reduced(g, shape, axis, keepdims):
    if axis is not None and not keepdims:
        axes = (axis,) if isinstance(axis, int) else tuple(axis)
        g = np.expand_dims(g, tuple(a % len(shape) for a in axes))
    return np.broadcast_to(g, shape)

# %% ../../nbs/core/tensor.ipynb #tensor-elementwise
def _add_fwd(a, b):
    _broadcast_check("add", a, b)
    return a + b, None

def _sub_fwd(a, b):
    _broadcast_check("sub", a, b)
    return a - b, None

def _mul_fwd(a, b):
    _broadcast_check("mul", a, b)
    return a * b, None

_register("add", _add_fwd, lambda g, x, out, s: (_unbroadcast(g, x[0].shape), _unbroadcast(g, x[1].shape)))
_register("sub", _sub_fwd, lambda g, x, out, s: (_unbroadcast(g, x[0].shape), _unbroadcast(-g, x[1].shape)))
_register("mul", _mul_fwd, lambda g, x, out, s: (_unbroadcast(g * x[1], x[0].shape), _unbroadcast(g * x[0], x[1].shape)))
_register("scalar-mul", lambda a, scalar: (a * a.dtype.type(scalar), None),
          lambda g, x, out, s, scalar: (g * g.dtype.type(scalar),))
_register("negate", lambda a: (-a, None), lambda g, x, out, s: (-g,))
_register("exp", lambda a: (np.exp(a), None), lambda g, x, out, s: (g * out,))

def _log_fwd(a):
    if np.any(a <= 0):
        raise DomainError("log: input has non-positive values; use log-softmax or log-sigmoid for probabilities")
    return np.log(a), None

_register("log", _log_fwd, lambda g, x, out, s: (g / x[0],))

def _sigmoid(a):
    e = np.exp(-np.abs(a))
    return np.where(a >= 0, 1 / (1 + e), e / (1 + e)).astype(a.dtype)

_register("sigmoid", lambda a: (_sigmoid(a), None), lambda g, x, out, s: (g * out * (1 - out),))
_register("log-sigmoid", lambda a: (-np.logaddexp(0, -a).astype(a.dtype), None),
          lambda g, x, out, s: (g * _sigmoid(-x[0]),))
_register("relu", lambda a: (np.maximum(a, 0), None), lambda g, x, out, s: (g * (x[0] > 0),))

_GELU_C = math.sqrt(2 / math.pi)

def _gelu_fwd(a):
    t = np.tanh(_GELU_C * (a + 0.044715 * a ** 3))
    return 0.5 * a * (1 + t), t

def _gelu_bwd(g, x, out, t):
    a = x[0]
    dt = (1 - t ** 2) * _GELU_C * (1 + 3 * 0.044715 * a ** 2)
    return (g * (0.5 * (1 + t) + 0.5 * a * dt),)

_register("gelu", _gelu_fwd, _gelu_bwd)

# %% ../../nbs/core/tensor.ipynb #tensor-linear
def _matmul_fwd(a, b):
    if a.ndim < 2 or a.ndim != b.ndim or a.shape[-1] != b.shape[-2] or a.shape[:-2] != b.shape[:-2]:
        raise ShapeError("matmul", [a.shape, b.shape])
    return a @ b, None

_register("matmul", _matmul_fwd,
          lambda g, x, out, s: (g @ np.swapaxes(x[1], -1, -2), np.swapaxes(x[0], -1, -2) @ g))

# %% ../../nbs/core/tensor.ipynb #tensor-reductions
_register("sum-reduce", lambda a, axis=None, keepdims=False: (np.sum(a, axis=axis, keepdims=keepdims), None),
          lambda g, x, out, s, axis=None, keepdims=False: (_expand_reduced(g, x[0].shape, axis, keepdims),))

def _mean_bwd(g, x, out, s, axis=None, keepdims=False):
    n = x[0].size // max(out.size, 1)
    return (_expand_reduced(g, x[0].shape, axis, keepdims) / x[0].dtype.type(n),)

_register("mean-reduce", lambda a, axis=None, keepdims=False: (np.mean(a, axis=axis, keepdims=keepdims), None), _mean_bwd)

def _softmax_fwd(a, axis=-1):
    e = np.exp(a - np.max(a, axis=axis, keepdims=True))
    return e / np.sum(e, axis=axis, keepdims=True), None

_register("softmax", _softmax_fwd,
          lambda g, x, out, s, axis=-1: (out * (g - np.sum(g * out, axis=axis, keepdims=True)),))

def _log_softmax_fwd(a, axis=-1):
    shifted = a - np.max(a, axis=axis, keepdims=True)
    return shifted - np.log(np.sum(np.exp(shifted), axis=axis, keepdims=True)), None

_register("log-softmax", _log_softmax_fwd,
          lambda g, x, out, s, axis=-1: (g - np.exp(out) * np.sum(g, axis=axis, keepdims=True),))

# %% ../../nbs/core/tensor.ipynb #tensor-indexing
def _embedding_fwd(table, ids):
    ids = np.asarray(ids, dtype=np.int64)
    if ids.size and (ids.min() < 0 or ids.max() >= table.shape[0]):
        raise DomainError(f"embedding-gather: ids must lie in [0, {table.shape[0]}), got range [{ids.min()}, {ids.max()}]")
    return table[ids], None

def _scatter_bwd(g, x, out, s, index):
    z = np.zeros_like(x[0])
    np.add.at(z, index, g)
    return (z,)

_register("embedding-gather", _embedding_fwd,
          lambda g, x, out, s, ids: _scatter_bwd(g, x, out, s, np.asarray(ids, dtype=np.int64)))

def _index_select_fwd(a, index):
    try:
        return a[index], None
    except IndexError as e:
        raise ShapeError("index-select", [a.shape], str(e)) from None

_register("index-select", _index_select_fwd, _scatter_bwd)

def _concat_fwd(*arrays, axis=0):
    try:
        return np.concatenate(arrays, axis=axis), None
    except ValueError:
        raise ShapeError("concat", [a.shape for a in arrays]) from None

def _concat_bwd(g, x, out, s, axis=0):
    cuts = np.cumsum([a.shape[axis] for a in x])[:-1]
    return tuple(np.split(g, cuts, axis=axis))

_register("concat", _concat_fwd, _concat_bwd)

def _reshape_fwd(a, shape):
    if int(np.prod(shape)) != a.size:
        raise ShapeError("reshape", [a.shape, shape])
    return a.reshape(shape), None

_register("reshape", _reshape_fwd, lambda g, x, out, s, shape: (g.reshape(x[0].shape),))

def _transpose_fwd(a, axes):
    if sorted(axes) != list(range(a.ndim)):
        raise ShapeError("transpose", [a.shape], f"axes {axes}")
    return np.transpose(a, axes), None

_register("transpose", _transpose_fwd, lambda g, x, out, s, axes: (np.transpose(g, np.argsort(axes)),))

# %% ../../nbs/core/tensor.ipynb #tensor-layer-norm
def _layer_norm_fwd(x, gamma, beta, eps=1e-5):
    if gamma.shape != x.shape[-1:] or beta.shape != x.shape[-1:]:
        raise ShapeError("layer-norm", [x.shape, gamma.shape, beta.shape])
    mu = x.mean(axis=-1, keepdims=True)
    var = x.var(axis=-1, keepdims=True)
    rstd = 1 / np.sqrt(var + x.dtype.type(eps))
    xhat = (x - mu) * rstd
    return xhat * gamma + beta, (xhat, rstd)

def _layer_norm_bwd(g, x, out, saved, eps=1e-5):
    xhat, rstd = saved
    lead = tuple(range(g.ndim - 1))
    dgamma = np.sum(g * xhat, axis=lead)
    dbeta = np.sum(g, axis=lead)
    dxhat = g * x[1]
    dx = rstd * (dxhat - dxhat.mean(axis=-1, keepdims=True) - xhat * (dxhat * xhat).mean(axis=-1, keepdims=True))
    return dx, dgamma, dbeta

_register("layer-norm", _layer_norm_fwd, _layer_norm_bwd)

# %% ../../nbs/core/tensor.ipynb #tensor-grad-mode
_grad_state = threading.local()
_seq = itertools.count()

def is_grad_enabled() -> bool:  # Whether primitives currently record trace entries
    """True unless inside a `no_grad` block on this thread."""
    return getattr(_grad_state, "enabled", True)

@contextmanager
def no_grad():
    """Disable trace recording on the current thread."""
    prev = is_grad_enabled()
    _grad_state.enabled = False
    try:
        yield
    finally:
        _grad_state.enabled = prev

# %% ../../nbs/core/tensor.ipynb #tensor-trace-record
@dataclass(eq=False)
class TraceRecord:
    """One primitive application in the trace."""

    seq: int  # Global application order
    op_id: str  # Primitive id
    inputs: Tuple["Tensor", ...]  # Input tensors
    output: "weakref.ReferenceType[Tensor]"  # Produced tensor
    saved: Any  # Activations kept for the reverse pass
    attrs: Dict[str, Any] = field(default_factory=dict)  # Static op arguments

# %% ../../nbs/core/tensor.ipynb #tensor-class
ArrayLike = Union[np.ndarray, float, int, Sequence]

class Tensor:
    """Dense float array that records how it was produced."""

    __array_priority__ = 100

    def __init__(
        self,
        data: ArrayLike,  # Values (row-major)
        requires_grad: bool = False,  # Whether gradients flow to this tensor
        name: Optional[str] = None,  # Name used as the key in gradient maps
        dtype: Optional[Union[str, np.dtype]] = None,  # Force a float dtype
    ):
        arr = np.asarray(data, dtype=dtype) if dtype is not None else np.asarray(data)
        if arr.dtype.kind != "f":
            arr = arr.astype(np.float64)
        self.data: np.ndarray = arr
        self.requires_grad = bool(requires_grad)
        self.name = name
        self._record: Optional[TraceRecord] = None

    # Properties ---------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.data.shape

    @property
    def dtype(self) -> np.dtype:
        return self.data.dtype

    @property
    def ndim(self) -> int:
        return self.data.ndim

    @property
    def size(self) -> int:
        return self.data.size

    @property
    def is_leaf(self) -> bool:  # True when not produced by a recorded primitive
        return self._record is None

    def item(self) -> float:
        return float(self.data.reshape(-1)[0]) if self.data.size == 1 else float(self.data)

    def numpy(self) -> np.ndarray:
        return self.data

    def detach(self) -> "Tensor":
        """Same values, no trace and no gradient."""
        return Tensor(self.data, name=self.name)

    def __repr__(self):
        flag = ", requires_grad=True" if self.requires_grad else ""
        return f"Tensor({np.array2string(self.data, precision=4, threshold=8)}{flag})"

    def _lift(self, other) -> "Tensor":
        return other if isinstance(other, Tensor) else Tensor(np.asarray(other, dtype=self.dtype))

    # Operators ----------------------------------------------------------------

    def __add__(self, other): return apply_primitive("add", self, self._lift(other))
    def __radd__(self, other): return apply_primitive("add", self._lift(other), self)
    def __sub__(self, other): return apply_primitive("sub", self, self._lift(other))
    def __rsub__(self, other): return apply_primitive("sub", self._lift(other), self)
    def __neg__(self): return apply_primitive("negate", self)
    def __matmul__(self, other): return apply_primitive("matmul", self, self._lift(other))

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return apply_primitive("scalar-mul", self, scalar=float(other))
        return apply_primitive("mul", self, self._lift(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return apply_primitive("scalar-mul", self, scalar=1.0 / float(other))
        raise DomainError("tensor division is only defined for scalar divisors")

    def __getitem__(self, index):
        return apply_primitive("index-select", self, index=index)

    # Methods ------------------------------------------------------------------

    def exp(self): return apply_primitive("exp", self)
    def log(self): return apply_primitive("log", self)
    def sigmoid(self): return apply_primitive("sigmoid", self)
    def log_sigmoid(self): return apply_primitive("log-sigmoid", self)
    def relu(self): return apply_primitive("relu", self)
    def gelu(self): return apply_primitive("gelu", self)
    def softmax(self, axis: int = -1): return apply_primitive("softmax", self, axis=axis)
    def log_softmax(self, axis: int = -1): return apply_primitive("log-softmax", self, axis=axis)

    def sum(self, axis=None, keepdims: bool = False):
        return apply_primitive("sum-reduce", self, axis=axis, keepdims=keepdims)

    def mean(self, axis=None, keepdims: bool = False):
        return apply_primitive("mean-reduce", self, axis=axis, keepdims=keepdims)

    def reshape(self, *shape):
        shape = tuple(shape[0]) if len(shape) == 1 and isinstance(shape[0], (tuple, list)) else tuple(shape)
        return apply_primitive("reshape", self, shape=shape)

    def transpose(self, *axes):
        axes = tuple(axes[0]) if len(axes) == 1 and isinstance(axes[0], (tuple, list)) else tuple(axes)
        return apply_primitive("transpose", self, axes=axes or tuple(reversed(range(self.ndim))))

    @property
    def T(self):
        return self.transpose()

# %% ../../nbs/core/tensor.ipynb #tensor-apply
def apply_primitive(
    op_id: str,  # Registered primitive id
    *inputs: Tensor,  # Input tensors
    **attrs  # Static arguments of the primitive (axis, shape, index, ...)
) -> Tensor:  # Forward value, traced when any input requires grad
    """Apply a primitive and append a trace record when gradients are needed."""
    prim = PRIMITIVES.get(op_id)
    if prim is None:
        raise DomainError(f"unknown primitive {op_id!r}")
    arrays = [t.data for t in inputs]
    out, saved = prim.forward(*arrays, **attrs)
    result = Tensor(np.asarray(out, dtype=arrays[0].dtype))
    if is_grad_enabled() and any(t.requires_grad for t in inputs):
        result.requires_grad = True
        result._record = TraceRecord(next(_seq), op_id, tuple(inputs), weakref.ref(result), saved, dict(attrs))
    return result

def concat(
    tensors: Sequence[Tensor],  # Tensors to join
    axis: int = 0  # Join axis
) -> Tensor:  # Concatenation
    """Concatenate tensors along an axis."""
    return apply_primitive("concat", *tensors, axis=axis)

def embedding(
    table: Tensor,  # (vocab, width) embedding table
    ids: Sequence[int]  # Token ids
) -> Tensor:  # (len(ids), width) rows
    """Gather embedding rows."""
    return apply_primitive("embedding-gather", table, ids=np.asarray(ids, dtype=np.int64))

def layer_norm(
    x: Tensor,  # Input normalised over its last axis
    gamma: Tensor,  # Scale
    beta: Tensor,  # Shift
    eps: float = 1e-5  # Variance floor
) -> Tensor:  # Normalised output
    """Layer normalisation over the last axis."""
    return apply_primitive("layer-norm", x, gamma, beta, eps=eps)

# %% ../../nbs/core/tensor.ipynb #tensor-trace
@dataclass(frozen=True)
class Trace:
    """Topologically ordered records that produced a tensor."""

    records: Tuple[TraceRecord, ...]  # Ascending application order
    output: Tensor  # Tensor the trace ends in

    @property
    def leaves(self) -> List[Tensor]:  # Untraced inputs, in first-use order
        seen, leaves = set(), []
        for rec in self.records:
            for t in rec.inputs:
                if t._record is None and id(t) not in seen:
                    seen.add(id(t))
                    leaves.append(t)
        return leaves

    def replay(
        self,
        feeds: Optional[Mapping[str, np.ndarray]] = None  # Replacement values for named leaves
    ) -> np.ndarray:  # Recomputed output value
        """Re-run every recorded primitive forward from the leaves."""
        feeds = feeds or {}
        values: Dict[int, np.ndarray] = {}
        for rec in self.records:
            arrays = []
            for t in rec.inputs:
                if id(t) in values:
                    arrays.append(values[id(t)])
                elif t.name is not None and t.name in feeds:
                    arrays.append(np.asarray(feeds[t.name], dtype=t.dtype))
                else:
                    arrays.append(t.data)
            out, _ = PRIMITIVES[rec.op_id].forward(*arrays, **rec.attrs)
            values[id(rec.output())] = np.asarray(out, dtype=arrays[0].dtype)
        return values.get(id(self.output), self.output.data)

def _collect_records(root: Tensor) -> List[TraceRecord]:
    records, seen, stack = [], set(), [root._record] if root._record is not None else []
    while stack:
        rec = stack.pop()
        if id(rec) in seen:
            continue
        seen.add(id(rec))
        records.append(rec)
        stack.extend(t._record for t in rec.inputs if t._record is not None and id(t._record) not in seen)
    return sorted(records, key=lambda r: r.seq)

def trace_of(
    tensor: Tensor  # Traced tensor
) -> Trace:  # Records reachable from the tensor
    """Collect the trace that produced a tensor."""
    return Trace(tuple(_collect_records(tensor)), tensor)

# %% ../../nbs/core/tensor.ipynb #tensor-backward
def backward(
    loss: Tensor,  # Scalar loss
    wrt: Optional[Sequence[Tensor]] = None  # Leaves to report (default: every reached leaf requiring grad)
) -> Dict[str, np.ndarray]:  # Gradient per leaf name
    """Reverse-mode differentiation of a scalar through its trace."""
    if loss.size != 1:
        raise ShapeError("backward", [loss.shape], "loss must be a scalar")
    leaf_grads: Dict[int, np.ndarray] = {}
    leaves: Dict[int, Tensor] = {}
    if loss._record is None:
        if loss.requires_grad:
            leaves[id(loss)] = loss
            leaf_grads[id(loss)] = np.ones_like(loss.data)
    else:
        grads: Dict[int, np.ndarray] = {id(loss): np.ones_like(loss.data)}
        for rec in reversed(_collect_records(loss)):
            out = rec.output()
            g = grads.pop(id(out), None) if out is not None else None
            if g is None:
                continue
            in_grads = PRIMITIVES[rec.op_id].backward(g, [t.data for t in rec.inputs], out.data, rec.saved, **rec.attrs)
            for t, gi in zip(rec.inputs, in_grads):
                if gi is None or not t.requires_grad:
                    continue
                target = leaf_grads if t._record is None else grads
                if t._record is None:
                    leaves[id(t)] = t
                key = id(t)
                target[key] = gi if key not in target else target[key] + gi
    if wrt is None:
        if not leaves:
            raise DomainError("loss is not reachable from any tensor that requires grad")
        wrt = list(leaves.values())
    result: Dict[str, np.ndarray] = {}
    for i, t in enumerate(wrt):
        name = t.name if t.name is not None else f"leaf{i}"
        if name in result:
            raise DomainError(f"duplicate leaf name {name!r} in gradient map")
        g = leaf_grads.get(id(t))
        result[name] = np.zeros_like(t.data) if g is None else np.array(g, dtype=t.dtype).reshape(t.shape)
    return result

# %% ../../nbs/core/tensor.ipynb #tensor-finite-difference
def _as_float(value) -> float:
    return value.item() if isinstance(value, Tensor) else float(value)

def finite_difference_grad(
    f: Callable[[Dict[str, np.ndarray]], Any],  # Deterministic scalar function of named arrays
    params: Mapping[str, np.ndarray],  # Point at which to differentiate
    eps: float = 1e-5  # Central-difference step
) -> Dict[str, np.ndarray]:  # Gradient estimate per name
    """Central-difference gradient of `f` at `params`, coordinate by coordinate."""
    if not eps > 0:
        raise DomainError(f"eps must be > 0, got {eps}")
    # C order so the flat views below write through
    point = {k: np.array(v, copy=True, order="C") for k, v in params.items()}
    f0, f1 = _as_float(f(point)), _as_float(f(point))
    if f0 != f1 and not (math.isnan(f0) and math.isnan(f1)):
        raise DomainError("finite_difference_grad: f is not deterministic (is sampling enabled?)")
    grads: Dict[str, np.ndarray] = {}
    for name, arr in point.items():
        flat = arr.reshape(-1)
        g = np.zeros(flat.size, dtype=np.float64)
        for i in range(flat.size):
            orig = flat[i]
            flat[i] = orig + eps
            fp = _as_float(f(point))
            flat[i] = orig - eps
            fm = _as_float(f(point))
            flat[i] = orig
            g[i] = (fp - fm) / (2 * eps)
        grads[name] = g.reshape(arr.shape)
    return grads
