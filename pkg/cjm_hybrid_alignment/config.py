"""Flat dotted-key run configuration: parsing, overrides, validation and run-directory locking"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/config.ipynb.

# %% auto #0
__all__ = ['OUTPUT_ROOT_ENV', 'SECTIONS', 'config_to_flat', 'flat_to_config', 'parse_overrides', 'load_config',
           'dump_config', 'validate_paths', 'resolve_run_dir', 'RunLock']

# %% ../nbs/config.ipynb #config-imports
import configparser
import logging
import os
from dataclasses import fields, is_dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple, Union

from .errors import ConfigError, HbatError
from .models import (BaselineMode, DataConfig, DPOSettings, EwcMode, GenerationSettings, HbatConfig, HpaAlgorithm,
                     KLSettings, ModelConfig, OptimSettings, RunConfig)
from .utils import atomic_write_text

logger = logging.getLogger(__name__)

# %% ../nbs/config.ipynb #config-sections
OUTPUT_ROOT_ENV = "CJM_HBAT_OUTPUT_ROOT"

# Key prefix -> attribute path inside RunConfig
SECTIONS: Dict[str, Tuple[str, ...]] = {
    "run": (),
    "model": ("model",),
    "data": ("data",),
    "hbat": ("hbat",),
    "sft": ("hbat", "sft"),
    "rm": ("hbat", "rm"),
    "dpo": ("hbat", "dpo"),
    "ppo_policy": ("hbat", "ppo_policy"),
    "ppo_value": ("hbat", "ppo_value"),
    "kl": ("hbat", "kl"),
    "generation": ("hbat", "generation"),
}

def _get(obj, path):
    for name in path:
        obj = getattr(obj, name)
    return obj

def config_to_flat(
    cfg: RunConfig  # Configuration tree
) -> Dict[str, Any]:  # Dotted key -> plain value
    """Flatten a RunConfig into its dotted keys."""
    flat: Dict[str, Any] = {}
    for section, path in SECTIONS.items():
        obj = _get(cfg, path)
        for f in fields(obj):
            v = getattr(obj, f.name)
            # hbat.seed is bound to run.seed
            if is_dataclass(v) or (section == "hbat" and f.name == "seed"):
                continue
            flat[f"{section}.{f.name}"] = v.value if isinstance(v, Enum) else v
    flat["dpo.beta"] = cfg.hbat.dpo_settings.beta
    return flat

# %% ../nbs/config.ipynb #config-coerce
_TRUE, _FALSE = {"true", "1", "yes", "on"}, {"false", "0", "no", "off"}
_ENUM_KEYS = {"hbat.algorithm": HpaAlgorithm, "hbat.mode": BaselineMode, "hbat.ewc_mode": EwcMode}

def _coerce(key: str, raw: Any, default: Any) -> Any:
    if not isinstance(raw, str):
        return raw
    text = raw.strip()
    try:
        if isinstance(default, bool):
            if text.lower() in _TRUE:
                return True
            if text.lower() in _FALSE:
                return False
            raise ValueError(text)
        if isinstance(default, int):
            return int(text)
        if isinstance(default, float):
            return float(text)
    except ValueError:
        raise ConfigError(f"{key}: cannot parse {raw!r} as {type(default).__name__}") from None
    return text

def _make(cls, section: str, flat: Mapping[str, Any], **extra):
    kwargs = {f.name: flat[f"{section}.{f.name}"] for f in fields(cls) if f"{section}.{f.name}" in flat}
    kwargs.update(extra)
    return cls(**kwargs)

def flat_to_config(
    flat: Mapping[str, Any]  # Complete dotted-key map
) -> RunConfig:  # Validated configuration tree
    """Rebuild a RunConfig from dotted keys; invalid values raise ConfigError."""
    try:
        flat = {k: _ENUM_KEYS[k](v) if k in _ENUM_KEYS else v for k, v in flat.items()}
        hbat = _make(
            HbatConfig, "hbat", flat,
            **{s: _make(OptimSettings, s, flat) for s in ("sft", "rm", "dpo", "ppo_policy", "ppo_value")},
            kl=_make(KLSettings, "kl", flat),
            generation=_make(GenerationSettings, "generation", flat),
            dpo_settings=DPOSettings(beta=flat["dpo.beta"]),
            seed=flat["run.seed"],
        )
        return _make(RunConfig, "run", flat, model=_make(ModelConfig, "model", flat), hbat=hbat,
                     data=_make(DataConfig, "data", flat))
    except ConfigError:
        raise
    except (HbatError, ValueError, TypeError) as e:
        raise ConfigError(str(e)) from None

# %% ../nbs/config.ipynb #config-load
def _apply(flat: Dict[str, Any], defaults: Mapping[str, Any], key: str, raw: Any, origin: str) -> None:
    key = key.strip()
    if key not in defaults:
        raise ConfigError(f"{origin}: unknown key {key!r}")
    flat[key] = _coerce(key, raw, defaults[key])

def parse_overrides(
    overrides: Sequence[str]  # "key=value" strings
) -> Dict[str, str]:  # key -> raw value
    out = {}
    for item in overrides or ():
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise ConfigError(f"override {item!r} is not of the form key=value")
        out[key.strip()] = value
    return out

def load_config(
    path: Optional[Union[str, Path]] = None,  # Flat "key = value" file (optional)
    overrides: Sequence[str] = ()  # Command-line "key=value" overrides; they win over the file
) -> RunConfig:  # Validated configuration
    """Parse a configuration file plus overrides; unknown keys are errors."""
    defaults = config_to_flat(RunConfig())
    flat = dict(defaults)
    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"config file not found: {path}")
        text = path.read_text(encoding="utf-8")
        if not text.lstrip().startswith("["):
            text = "[DEFAULT]\n" + text
        parser = configparser.ConfigParser(delimiters=["="], comment_prefixes=("#", ";"),
                                           inline_comment_prefixes=("#",), interpolation=None)
        parser.optionxform = str
        try:
            parser.read_string(text, source=str(path))
        except configparser.Error as e:
            raise ConfigError(f"{path}: {e}") from None
        if parser.sections():
            raise ConfigError(f"{path}: sections are not supported; use dotted keys such as hbat.lam")
        for key, raw in parser.defaults().items():
            _apply(flat, defaults, key, raw, str(path))
    for key, raw in parse_overrides(overrides).items():
        _apply(flat, defaults, key, raw, "--set")
    return flat_to_config(flat)

def dump_config(
    cfg: RunConfig,  # Configuration to persist
    path: Union[str, Path]  # Destination file
) -> Path:  # Written path
    """Write every key in sorted order; the file reloads to an equal RunConfig."""
    lines = [f"{k} = {str(v).lower() if isinstance(v, bool) else v}" for k, v in sorted(config_to_flat(cfg).items())]
    return atomic_write_text(path, "\n".join(lines) + "\n")

# %% ../nbs/config.ipynb #config-paths
def validate_paths(
    cfg: RunConfig  # Configuration whose referenced files must exist
) -> None:
    for key, value in config_to_flat(cfg).items():
        if (key.endswith("_path") or key.endswith("_checkpoint")) and value and not Path(value).is_file():
            raise ConfigError(f"{key}: file not found: {value}")

def resolve_run_dir(
    cfg: RunConfig,  # Configuration naming the output directory
    environ: Optional[Mapping[str, str]] = None  # Environment (default: os.environ)
) -> Path:  # Run directory, below the output root unless absolute
    environ = os.environ if environ is None else environ
    out = Path(cfg.output_dir)
    if out.is_absolute():
        return out
    return Path(environ.get(OUTPUT_ROOT_ENV, ".")) / out

# %% ../nbs/config.ipynb #config-lock
class RunLock:
    """Exclusive lock file that keeps two runs out of one directory."""

    def __init__(
        self,
        run_dir: Union[str, Path]  # Directory to lock
    ):
        self.path = Path(run_dir) / ".lock"
        self._held = False

    def __enter__(self) -> "RunLock":
        self.path.parent.mkdir(parents=True, exist_ok=True)
        try:
            fd = os.open(self.path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
        except FileExistsError:
            raise ConfigError(f"run directory {self.path.parent} is in use (remove {self.path} if stale)") from None
        with os.fdopen(fd, "w") as f:
            f.write(str(os.getpid()))
        self._held = True
        return self

    def __exit__(self, *exc):
        if self._held:
            self.path.unlink(missing_ok=True)
            self._held = False
        return False
