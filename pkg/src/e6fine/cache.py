"""Versioned binary cache for expensive tables.

One small container format serves both the reflection-group table (36 signed
bytes per element) and any other byte-serializable payload.  The header pins
a payload kind, an element count, and a 16-byte key digest; the digest mixes
the Cartan matrix, the sort-convention tag, the working root-of-unity level,
and the package version, so a cache file from a stale build or a different
convention is rejected rather than silently reused.

Layout (little-endian):

    magic     4 bytes  b"E6FT"
    format    u32      container format version
    kind      u32      payload kind
    count     u32      number of records
    key       16 bytes digest of the builder's key material
    payload   count * record_size bytes
"""

from __future__ import annotations

import hashlib
import os
import struct
from pathlib import Path

import numpy as np

from . import __version__
from .weyl import CARTAN, WeylGroup

__all__ = [
    "CacheError",
    "cache_dir",
    "weyl_cache_path",
    "store_weyl",
    "load_weyl",
    "weyl_group",
]

MAGIC = b"E6FT"
FORMAT_VERSION = 1
KIND_WEYL = 1
KIND_STRUCT = 2

_HEADER = struct.Struct("<4sIII16s")

SORT_CONVENTION = "row-major-lex-ascending/1-based"


class CacheError(RuntimeError):
    """A cache file is corrupt or was produced under other conventions."""


def cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    """Resolve the cache directory: argument, then env var, then default."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get("E6FINE_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "e6fine"


def _weyl_key() -> bytes:
    h = hashlib.blake2s(digest_size=16)
    h.update(np.asarray(CARTAN, dtype=np.int8).tobytes())
    h.update(SORT_CONVENTION.encode())
    h.update(b"level=36")
    h.update(__version__.encode())
    return h.digest()


def write_container(path: Path, kind: int, key: bytes, count: int,
                    payload: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    header = _HEADER.pack(MAGIC, FORMAT_VERSION, kind, count, key)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(header + payload)
    tmp.replace(path)


def read_container(path: Path, kind: int, key: bytes,
                   record_size: int) -> tuple[int, bytes]:
    raw = path.read_bytes()
    if len(raw) < _HEADER.size:
        raise CacheError(f"{path}: truncated header")
    magic, version, got_kind, count, got_key = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise CacheError(f"{path}: not a cache file")
    if version != FORMAT_VERSION:
        raise CacheError(f"{path}: container version {version}, "
                         f"expected {FORMAT_VERSION}")
    if got_kind != kind:
        raise CacheError(f"{path}: wrong payload kind")
    if got_key != key:
        raise CacheError(f"{path}: built under different conventions; "
                         "rebuild the cache")
    payload = raw[_HEADER.size:]
    if len(payload) != count * record_size:
        raise CacheError(f"{path}: payload size mismatch")
    return count, payload


def weyl_cache_path(directory: str | os.PathLike | None = None) -> Path:
    return cache_dir(directory) / "weyl-e6.bin"


def store_weyl(group: WeylGroup,
               directory: str | os.PathLike | None = None) -> Path:
    path = weyl_cache_path(directory)
    payload = group.matrices.astype(np.int8).tobytes()
    write_container(path, KIND_WEYL, _weyl_key(), group.n, payload)
    return path


def load_weyl(directory: str | os.PathLike | None = None) -> WeylGroup:
    """Load the cached group table; CacheError if absent or unusable."""
    path = weyl_cache_path(directory)
    if not path.exists():
        raise CacheError(f"{path}: no cached table")
    count, payload = read_container(path, KIND_WEYL, _weyl_key(), 36)
    mats = np.frombuffer(payload, dtype=np.int8).reshape(count, 6, 6).copy()
    group = WeylGroup(mats)
    ident = np.eye(6, dtype=np.int8)
    if not group.contains(ident):
        raise CacheError(f"{path}: table does not contain the identity")
    return group


def weyl_group(directory: str | os.PathLike | None = None,
               refresh: bool = False) -> WeylGroup:
    """The enumerated group, from cache when possible, rebuilding if not."""
    if not refresh:
        try:
            return load_weyl(directory)
        except CacheError:
            pass
    group = WeylGroup.enumerate()
    store_weyl(group, directory)
    return group
