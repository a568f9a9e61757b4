"""Append-only JSON-lines result store shared by concurrent processes."""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Iterator

from filelock import FileLock

from .ramsey import ENGINE_VERSION

ENV_VAR = "ORDRAM_CACHE"


class CacheCollision(RuntimeError):
    pass


def default_cache_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "ordram" / "results.jsonl"


def canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cache_key(op: str, inputs: dict) -> str:
    return hashlib.sha256(canonical({"op": op, "inputs": inputs, "engine": ENGINE_VERSION}).encode()).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    key: str
    op: str
    inputs: dict
    engine: str
    value: Any
    exact: bool
    timestamp: float

    def to_line(self) -> str:
        return canonical(
            {
                "key": self.key,
                "op": self.op,
                "inputs": self.inputs,
                "engine": self.engine,
                "value": self.value,
                "exact": self.exact,
                "timestamp": self.timestamp,
            }
        )

    @classmethod
    def from_line(cls, line: str) -> CacheEntry:
        obj = json.loads(line)
        return cls(obj["key"], obj["op"], obj["inputs"], obj["engine"], obj["value"], bool(obj["exact"]), obj["timestamp"])


class ResultCache:
    """Keyed by ``(op, canonical inputs, engine version)``; later lines never rewrite earlier ones."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else default_cache_path()
        self._lock = FileLock(str(self.path) + ".lock")

    def entries(self) -> Iterator[CacheEntry]:
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    yield CacheEntry.from_line(line)

    def get(self, op: str, inputs: dict) -> CacheEntry | None:
        key = cache_key(op, inputs)
        for e in self.entries():
            if e.key == key:
                self._check_same(e, op, inputs)
                return e
        return None

    @staticmethod
    def _check_same(e: CacheEntry, op: str, inputs: dict) -> None:
        if e.op != op or canonical(e.inputs) != canonical(inputs):
            raise CacheCollision(f"cache key {e.key[:12]} maps to different inputs")

    def put(self, op: str, inputs: dict, value: Any, exact: bool) -> CacheEntry:
        key = cache_key(op, inputs)
        entry = CacheEntry(key, op, inputs, ENGINE_VERSION, value, exact, time.time())
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self._lock:
            for e in self.entries():
                if e.key == key:
                    self._check_same(e, op, inputs)
                    if canonical(e.value) != canonical(value):
                        raise CacheCollision(f"cache entry {key[:12]} already holds a different value")
                    return e
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(entry.to_line() + "\n")
        return entry

    def memo(self, op: str, inputs: dict, compute: Callable[[], tuple[Any, bool]]) -> tuple[Any, bool, bool]:
        """Returns ``(value, exact, hit)``; only exact results are stored."""
        hit = self.get(op, inputs)
        if hit is not None:
            return hit.value, hit.exact, True
        value, exact = compute()
        if exact:
            self.put(op, inputs, value, exact)
        return value, exact, False


@dataclass
class CacheCheck:
    key: str
    op: str
    ok: bool
    reason: str


def verify_cache(cache: ResultCache, recompute: Callable[[str, dict], Any]) -> list[CacheCheck]:
    """Recompute every entry and require a byte-identical canonical value."""
    out = []
    for e in cache.entries():
        if e.engine != ENGINE_VERSION:
            out.append(CacheCheck(e.key, e.op, True, f"skipped: written by {e.engine}"))
            continue
        if cache_key(e.op, e.inputs) != e.key:
            out.append(CacheCheck(e.key, e.op, False, "key does not match inputs"))
            continue
        fresh = recompute(e.op, e.inputs)
        same = canonical(fresh) == canonical(e.value)
        out.append(CacheCheck(e.key, e.op, same, "match" if same else "recomputed value differs"))
    return out
