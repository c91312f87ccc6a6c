"""Tests for the binary table cache."""

import numpy as np
import pytest

from goldbach3.app.core.cache import HEADER, MAGIC, CacheFormatError, TableCache
from goldbach3.app.services import arith_service


def test_store_and_load(tmp_path):
    """Test that a stored table loads back identically."""
    cache = TableCache(tmp_path)
    table = arith_service.build_tables(500)

    path = cache.store(table)
    assert path.name == "tables_500.g3tb"
    assert path.read_bytes()[:4] == MAGIC

    loaded = cache.load(path)
    assert loaded.limit == 500
    assert np.array_equal(loaded.spf, table.spf)
    assert np.array_equal(loaded.mu, table.mu)
    assert np.allclose(loaded.mangoldt, table.mangoldt)


def test_payload_size(tmp_path):
    """Test the on-disk layout: header then u32 spf values."""
    cache = TableCache(tmp_path)
    path = cache.store(arith_service.build_tables(100))

    assert path.stat().st_size == HEADER.size + 4 * 101


def test_load_or_build_reuses_larger_table(tmp_path):
    """Test that a cached table covering the request is reused."""
    cache = TableCache(tmp_path)
    cache.store(arith_service.build_tables(1000))
    cache.store(arith_service.build_tables(3000))

    table = cache.load_or_build(800)

    assert table.limit == 1000
    assert cache.cached_limits() == [1000, 3000]


def test_load_or_build_miss_stores(tmp_path):
    """Test that a miss sieves and writes a new file."""
    cache = TableCache(tmp_path)

    table = cache.load_or_build(200)

    assert table.limit == 200
    assert cache.cached_limits() == [200]


def test_corrupt_file_is_skipped(tmp_path):
    """Test that a damaged cache file is ignored rather than trusted."""
    cache = TableCache(tmp_path)
    tmp_path.joinpath("tables_500.g3tb").write_bytes(b"XXXX" + b"\0" * 40)

    table = cache.load_or_build(100)

    assert table.limit == 100
    assert cache.cached_limits() == [100, 500]


def test_truncated_file(tmp_path):
    """Test that a short payload is a format error."""
    cache = TableCache(tmp_path)
    path = cache.store(arith_service.build_tables(100))
    path.write_bytes(path.read_bytes()[:-4])

    with pytest.raises(CacheFormatError):
        cache.load(path)
