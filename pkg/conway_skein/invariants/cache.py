"""Persistent cache of serialized invariant values
Created on: 19 Oct 2026

One JSON object per line in ``$SKEIN_CACHE_DIR/cache.jsonl``, keyed by the
diagram digest, the algebra name and the sign convention.
"""

from __future__ import annotations

__all__ = ["default_cache_dir", "InvariantCache"]

import json
import logging
import os
import pathlib
import threading
import typing

import conway_skein as cs
import conway_skein.typing as cst

logger = logging.getLogger(__name__)

CacheKey = tuple[str, str, str]


def default_cache_dir() -> pathlib.Path:
    env = os.environ.get(cs.CACHE_DIR_ENV)
    if env:
        return pathlib.Path(env)
    return pathlib.Path.home() / ".cache" / "conway-skein"


class InvariantCache:
    filename = "cache.jsonl"

    def __init__(self, directory: cst.PathLike | None = None):
        self.directory = pathlib.Path(directory or default_cache_dir())
        self.path = self.directory / self.filename
        self._lock = threading.Lock()
        self._entries: dict[CacheKey, typing.Any] | None = None

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({str(self.directory)!r})"

    def _load(self) -> dict[CacheKey, typing.Any]:
        if self._entries is not None:
            return self._entries
        entries: dict[CacheKey, typing.Any] = {}
        if self.path.is_file():
            for lineno, line in enumerate(self.path.read_text().splitlines(), 1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                    key = (record["key"], record["algebra"], record["convention"])
                    entries[key] = record["value"]
                except (json.JSONDecodeError, KeyError, TypeError):
                    logger.warning(f"skipping malformed cache line {lineno}")
            logger.debug(f"loaded {len(entries)} cache entries from {self.path}")
        self._entries = entries
        return entries

    def get(self, key: str, algebra: str, convention: str) -> typing.Any | None:
        with self._lock:
            return self._load().get((key, algebra, convention))

    def put(self, key: str, algebra: str, convention: str, value: typing.Any) -> None:
        record = {
            "key": key,
            "algebra": algebra,
            "convention": convention,
            "value": value,
        }
        with self._lock:
            entries = self._load()
            if (key, algebra, convention) in entries:
                return
            entries[(key, algebra, convention)] = value
            self.directory.mkdir(parents=True, exist_ok=True)
            with self.path.open("a") as f:
                f.write(json.dumps(record, sort_keys=True) + "\n")

    def __len__(self) -> int:
        with self._lock:
            return len(self._load())
