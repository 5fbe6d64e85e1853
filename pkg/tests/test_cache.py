"""Cache container: roundtrip, invalidation, and corruption detection."""

import numpy as np
import pytest

from e6fine import cache
from e6fine.weyl import WeylGroup


@pytest.fixture(scope="module")
def group():
    return WeylGroup.enumerate()


def test_roundtrip(tmp_path, group):
    p = cache.store_weyl(group, tmp_path)
    assert p.exists()
    loaded = cache.load_weyl(tmp_path)
    assert loaded.n == group.n
    assert (loaded.matrices == group.matrices).all()
    assert loaded.identity_index == group.identity_index


def test_weyl_group_builds_then_hits_cache(tmp_path, group, monkeypatch):
    # avoid re-enumerating: seed the cache, then load through the front door
    cache.store_weyl(group, tmp_path)
    got = cache.weyl_group(tmp_path)
    assert got.n == 51840


def test_missing_cache_raises(tmp_path):
    with pytest.raises(cache.CacheError):
        cache.load_weyl(tmp_path / "nowhere")


def test_corrupt_magic(tmp_path, group):
    p = cache.store_weyl(group, tmp_path)
    raw = bytearray(p.read_bytes())
    raw[:4] = b"XXXX"
    p.write_bytes(bytes(raw))
    with pytest.raises(cache.CacheError, match="not a cache file"):
        cache.load_weyl(tmp_path)


def test_version_mismatch(tmp_path, group):
    p = cache.store_weyl(group, tmp_path)
    raw = bytearray(p.read_bytes())
    raw[4] = 99
    p.write_bytes(bytes(raw))
    with pytest.raises(cache.CacheError, match="container version"):
        cache.load_weyl(tmp_path)


def test_key_mismatch(tmp_path, group, monkeypatch):
    p = cache.store_weyl(group, tmp_path)
    monkeypatch.setattr(cache, "SORT_CONVENTION", "other-order")
    with pytest.raises(cache.CacheError, match="conventions"):
        cache.load_weyl(tmp_path)


def test_truncated_payload(tmp_path, group):
    p = cache.store_weyl(group, tmp_path)
    raw = p.read_bytes()
    p.write_bytes(raw[:-7])
    with pytest.raises(cache.CacheError, match="size mismatch"):
        cache.load_weyl(tmp_path)


def test_env_var_resolution(tmp_path, monkeypatch):
    monkeypatch.setenv("E6FINE_CACHE_DIR", str(tmp_path / "envdir"))
    assert cache.cache_dir() == tmp_path / "envdir"
    assert cache.cache_dir(tmp_path / "flag") == tmp_path / "flag"
    monkeypatch.delenv("E6FINE_CACHE_DIR")
    assert cache.cache_dir().name == "e6fine"
