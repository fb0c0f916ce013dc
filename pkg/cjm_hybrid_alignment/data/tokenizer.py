"""Byte-level tokenizer with three reserved special ids"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/data/tokenizer.ipynb.

# %% auto #0
__all__ = ['PAD_ID', 'BOS_ID', 'EOS_ID', 'N_SPECIALS', 'VOCAB_SIZE', 'tokenize', 'detokenize', 'encode_prompt',
           'encode_response', 'decode_response']

# %% ../../nbs/data/tokenizer.ipynb #tokenizer-imports
from typing import List, Sequence, Union

from ..errors import DomainError

# %% ../../nbs/data/tokenizer.ipynb #tokenizer-constants
PAD_ID = 0
BOS_ID = 1
EOS_ID = 2
N_SPECIALS = 3  # id = byte + N_SPECIALS
VOCAB_SIZE = 256 + N_SPECIALS

# %% ../../nbs/data/tokenizer.ipynb #tokenizer-codec
def tokenize(
    text: Union[str, bytes]  # UTF-8 text or raw bytes
) -> List[int]:  # One id per byte
    """Map each byte to `byte + 3`."""
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    return [b + N_SPECIALS for b in data]

def detokenize(
    ids: Sequence[int],  # Token ids
    keep_specials: bool = False  # Raise on special ids instead of dropping them
) -> bytes:  # Decoded bytes
    """Inverse of `tokenize`; special ids are dropped unless `keep_specials` is set."""
    out = bytearray()
    for i in ids:
        i = int(i)
        if not 0 <= i < VOCAB_SIZE:
            raise DomainError(f"token id {i} outside vocabulary [0, {VOCAB_SIZE})")
        if i < N_SPECIALS:
            if keep_specials:
                raise DomainError(f"special id {i} has no byte representation")
            continue
        out.append(i - N_SPECIALS)
    return bytes(out)

# %% ../../nbs/data/tokenizer.ipynb #tokenizer-framing
def encode_prompt(
    text: str  # Prompt text
) -> List[int]:  # BOS followed by the prompt bytes
    return [BOS_ID] + tokenize(text)

def encode_response(
    text: str  # Response text
) -> List[int]:  # Response bytes followed by EOS
    return tokenize(text) + [EOS_ID]

def decode_response(
    ids: Sequence[int]  # Generated ids (EOS optional)
) -> str:  # Text up to the first EOS
    """Decode a generated response, stopping at EOS and replacing invalid UTF-8."""
    ids = list(ids)
    if EOS_ID in ids:
        ids = ids[:ids.index(EOS_ID)]
    return detokenize(ids).decode("utf-8", errors="replace")
