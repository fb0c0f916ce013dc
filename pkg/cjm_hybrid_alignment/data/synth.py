"""Deterministic synthetic alignment tasks for offline end-to-end runs"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/data/synth.ipynb.

# %% auto #0
__all__ = ['ALPHABET', 'TASKS', 'apply_task', 'corrupt', 'random_prompts', 'synth_task_generate']

# %% ../../nbs/data/synth.ipynb #synth-imports
import logging
from typing import Callable, Dict, List, Tuple

import numpy as np

from ..errors import DomainError
from ..models import PreferenceRecord, PromptResponseRecord
from ..utils import SeedStreams

logger = logging.getLogger(__name__)

# %% ../../nbs/data/synth.ipynb #synth-tasks
ALPHABET = "abcdefghijklmnop"

TASKS: Dict[str, Callable[[str], str]] = {
    "copy": lambda s: s,
    "reverse": lambda s: s[::-1],
    "sort": lambda s: "".join(sorted(s)),
}

def apply_task(
    task: str,  # copy | reverse | sort
    prompt: str  # Prompt string
) -> str:  # Gold response
    if task not in TASKS:
        raise DomainError(f"unknown synthetic task {task!r}; expected one of {sorted(TASKS)}")
    return TASKS[task](prompt)

# %% ../../nbs/data/synth.ipynb #synth-corrupt
def corrupt(
    gold: str,  # Gold response
    rng: np.random.Generator  # Corruption stream
) -> str:  # Response differing from gold by one transposition or substitution
    """Apply one seeded corruption, redrawing until the result differs from `gold`."""
    while True:
        chars = list(gold)
        if len(chars) > 1 and rng.random() < 0.5:
            i = int(rng.integers(len(chars) - 1))
            chars[i], chars[i + 1] = chars[i + 1], chars[i]
        else:
            i = int(rng.integers(len(chars)))
            chars[i] = ALPHABET[int(rng.integers(len(ALPHABET)))]
        out = "".join(chars)
        if out != gold:
            return out

# %% ../../nbs/data/synth.ipynb #synth-prompts
def random_prompts(
    rng: np.random.Generator,  # Prompt stream
    size: int,  # Number of prompts
    min_len: int = 3,  # Shortest prompt
    max_len: int = 8  # Longest prompt
) -> List[str]:  # Random strings over the 16-letter alphabet
    lengths = rng.integers(min_len, max_len + 1, size=size)
    return ["".join(ALPHABET[j] for j in rng.integers(len(ALPHABET), size=int(n))) for n in lengths]

# %% ../../nbs/data/synth.ipynb #synth-generate
def synth_task_generate(
    seed: int,  # Root seed
    size: int,  # Records per dataset
    task: str = "reverse",  # copy | reverse | sort
    min_len: int = 3,  # Shortest prompt
    max_len: int = 8  # Longest prompt
) -> Tuple[List[PromptResponseRecord], List[PreferenceRecord]]:  # (IFA records, preference records)
    """Generate a prompt/response set and a separable preference set for one task."""
    if size < 1:
        raise DomainError(f"size must be >= 1, got {size}")
    if task not in TASKS:
        raise DomainError(f"unknown synthetic task {task!r}; expected one of {sorted(TASKS)}")
    streams = SeedStreams(seed)
    prompt_rng, corruption_rng = streams.rng("prompts"), streams.rng("corruption")
    ifa = [PromptResponseRecord(p, apply_task(task, p)) for p in random_prompts(prompt_rng, size, min_len, max_len)]
    prefs = []
    for p in random_prompts(prompt_rng, size, min_len, max_len):
        gold = apply_task(task, p)
        prefs.append(PreferenceRecord(p, gold, corrupt(gold, corruption_rng)))
    logger.debug("Generated %d %s records per dataset (seed %d)", size, task, seed)
    return ifa, prefs
