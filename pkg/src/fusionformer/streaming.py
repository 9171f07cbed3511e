"""Chunk-based time-restricted attention masks and decoding-config names.

A query frame may attend to every frame whose chunk index lies in
``[chunk(i) - num_left_chunks, chunk(i)]``. Unbounded chunk size means full
attention; unbounded left context means "back to chunk 0". Masks are built
on the post-subsampling time axis (where attention runs), so chunk_size 16
covers 64 input frames = 640 ms at a 10 ms frame shift.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DecodingNameError, ShapeError

UNBOUNDED = None  # canonical in-memory spelling of the "inf" / ∞ flag value


def _as_bound(value) -> Optional[int]:
    if value is None or value == math.inf:
        return None
    return int(value)


@dataclass(frozen=True)
class ChunkMask:
    T: int
    chunk_size: Optional[int]
    num_left_chunks: Optional[int]
    allowed: np.ndarray  # [T, T] bool, row = query frame, column = key frame

    @property
    def full_context(self) -> bool:
        return bool(self.allowed.all())


def build_chunk_mask(T: int, chunk_size=None, num_left_chunks=None) -> ChunkMask:
    """Boolean [T, T] mask implementing the floor-division chunk rule."""
    chunk_size = _as_bound(chunk_size)
    num_left_chunks = _as_bound(num_left_chunks)
    if T < 1:
        raise ShapeError(f"mask needs T >= 1, got {T}")
    if chunk_size is not None and chunk_size < 1:
        raise ShapeError(f"chunk_size must be >= 1 when bounded, got {chunk_size}")
    if num_left_chunks is not None and num_left_chunks < 0:
        raise ShapeError(f"num_left_chunks must be >= 0 when bounded, got {num_left_chunks}")

    if chunk_size is None:
        allowed = np.ones((T, T), dtype=bool)
    else:
        chunk = np.arange(T) // chunk_size
        hi = chunk[:, None] >= chunk[None, :]
        if num_left_chunks is None:
            allowed = hi
        else:
            allowed = hi & (chunk[None, :] >= chunk[:, None] - num_left_chunks)
    return ChunkMask(T=T, chunk_size=chunk_size, num_left_chunks=num_left_chunks,
                     allowed=allowed)


def conv_left_bounds(mask: ChunkMask) -> np.ndarray:
    """Per-frame lowest input frame the depthwise conv may read.

    Keeps the conv receptive field inside the span the mask allows, so the
    model-level causality property holds for finite left-chunk settings.
    """
    if mask.chunk_size is None or mask.num_left_chunks is None:
        return np.zeros(mask.T, dtype=np.int64)
    chunk = np.arange(mask.T, dtype=np.int64) // mask.chunk_size
    lo = (chunk - mask.num_left_chunks) * mask.chunk_size
    return np.maximum(lo, 0)


@dataclass(frozen=True)
class DecodingConfig:
    """One of the named decoding setups, e.g. first-pass streaming 16/4."""

    pass_: str  # "first" | "second"
    streaming: bool
    chunk_size: Optional[int]
    num_left_chunks: Optional[int]

    def __post_init__(self):
        if self.pass_ not in ("first", "second"):
            raise ShapeError(f"pass_ must be 'first' or 'second', got {self.pass_!r}")
        if not self.streaming and (self.chunk_size is not None or self.num_left_chunks is not None):
            raise ShapeError("non-streaming decoding implies unbounded chunk_size and left chunks")

    def mask(self, T: int) -> ChunkMask:
        return build_chunk_mask(T, self.chunk_size, self.num_left_chunks)


_PASS_TOKENS = {"1st": "first", "2nd": "second"}
_PASS_NAMES = {v: k for k, v in _PASS_TOKENS.items()}
_INF_TOKENS = ("inf", "∞")


def _parse_bound(token: str, name: str, position: int) -> Optional[int]:
    if token in _INF_TOKENS:
        return None
    if not token.isdigit():
        raise DecodingNameError(name, position, f"expected integer or inf, got {token!r}")
    return int(token)


def parse_decoding_name(name: str) -> DecodingConfig:
    """Parse names of the form {1st|2nd}-{s|ns}-{int|inf}-{int|inf}."""
    parts = name.split("-")
    if len(parts) != 4:
        raise DecodingNameError(name, len(name), "expected 4 dash-separated fields")
    pos = 0
    if parts[0] not in _PASS_TOKENS:
        raise DecodingNameError(name, pos, f"expected 1st or 2nd, got {parts[0]!r}")
    pass_ = _PASS_TOKENS[parts[0]]
    pos += len(parts[0]) + 1
    if parts[1] not in ("s", "ns"):
        raise DecodingNameError(name, pos, f"expected s or ns, got {parts[1]!r}")
    streaming = parts[1] == "s"
    pos += len(parts[1]) + 1
    chunk = _parse_bound(parts[2], name, pos)
    pos += len(parts[2]) + 1
    left = _parse_bound(parts[3], name, pos)
    if not streaming and (chunk is not None or left is not None):
        raise DecodingNameError(name, pos, "ns requires inf chunk size and left chunks")
    return DecodingConfig(pass_=pass_, streaming=streaming, chunk_size=chunk,
                          num_left_chunks=left)


def format_decoding_name(cfg: DecodingConfig, unicode_inf: bool = False) -> str:
    """Inverse of parse: format(parse(n)) == n for the matching inf spelling."""
    inf = "∞" if unicode_inf else "inf"

    def fmt(v):
        return inf if v is None else str(v)

    return "-".join([
        _PASS_NAMES[cfg.pass_],
        "s" if cfg.streaming else "ns",
        fmt(cfg.chunk_size),
        fmt(cfg.num_left_chunks),
    ])
