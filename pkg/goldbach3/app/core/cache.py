"""Binary cache for sieved tables.

File layout (little endian): magic ``G3TB``, format version u16, limit N u64,
then spf[0..N] as u32. Everything else is recomputed from spf on load.
"""

import logging
import re
import struct
from pathlib import Path

import numpy as np

from goldbach3.app.config import settings
from goldbach3.app.schemas.arith import MangoldtTable
from goldbach3.app.services import arith_service

logger = logging.getLogger(__name__)

MAGIC = b"G3TB"
FORMAT_VERSION = 1
HEADER = struct.Struct("<4sHQ")

_NAME = re.compile(r"^tables_(\d+)\.g3tb$")


class CacheFormatError(ValueError):
    """A cache file is truncated or has a foreign header."""


class TableCache:
    """Directory of G3TB files, one per table limit."""

    def __init__(self, cache_dir: Path | str | None = None):
        self.cache_dir = Path(cache_dir) if cache_dir else settings.cache_dir

    def path_for(self, limit: int) -> Path:
        return self.cache_dir / f"tables_{limit}.g3tb"

    def store(self, table: MangoldtTable) -> Path:
        """Write ``table`` to the cache and return the file path."""
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        path = self.path_for(table.limit)
        tmp = path.with_suffix(".tmp")
        with tmp.open("wb") as fh:
            fh.write(HEADER.pack(MAGIC, FORMAT_VERSION, table.limit))
            fh.write(table.spf.astype("<u4").tobytes())
        tmp.replace(path)
        logger.info("Cached tables up to %d at %s", table.limit, path)
        return path

    def load(self, path: Path) -> MangoldtTable:
        """
        Read a cache file.

        Raises:
            CacheFormatError: If the header or payload size is wrong
        """
        data = path.read_bytes()
        if len(data) < HEADER.size:
            msg = f"{path} is too short for a G3TB header"
            raise CacheFormatError(msg)
        magic, version, limit = HEADER.unpack_from(data)
        if magic != MAGIC or version != FORMAT_VERSION:
            msg = f"{path} has header {magic!r} v{version}"
            raise CacheFormatError(msg)
        expected = HEADER.size + 4 * (limit + 1)
        if len(data) != expected:
            msg = f"{path} holds {len(data)} bytes, expected {expected}"
            raise CacheFormatError(msg)
        spf = np.frombuffer(data, dtype="<u4", count=limit + 1, offset=HEADER.size)
        return arith_service.tables_from_spf(spf.astype(np.uint32))

    def cached_limits(self) -> list[int]:
        """Limits of all cache files present, ascending."""
        if not self.cache_dir.is_dir():
            return []
        limits = []
        for entry in self.cache_dir.iterdir():
            match = _NAME.match(entry.name)
            if match:
                limits.append(int(match.group(1)))
        return sorted(limits)

    def load_or_build(self, limit: int, *, ceiling: int | None = None) -> MangoldtTable:
        """
        Return tables covering at least ``limit``.

        Reuses the smallest cached table with limit >= ``limit``; otherwise
        sieves, stores and returns a fresh one. Unreadable files are skipped.

        Args:
            limit: Required table size N
            ceiling: Memory ceiling override for a fresh build

        Returns:
            MangoldtTable with table.limit >= limit
        """
        for cached in self.cached_limits():
            if cached < limit:
                continue
            path = self.path_for(cached)
            try:
                table = self.load(path)
            except (OSError, CacheFormatError) as exc:
                logger.warning("Ignoring cache file %s: %s", path, exc)
                continue
            logger.debug("Cache hit: %s for limit %d", path, limit)
            return table

        logger.debug("Cache miss for limit %d", limit)
        table = arith_service.build_tables(limit, ceiling=ceiling)
        try:
            self.store(table)
        except OSError as exc:
            logger.warning("Could not write table cache: %s", exc)
        return table
