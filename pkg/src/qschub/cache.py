"""JSON-lines result cache for quantum products.

Each line is ``{"key": {...}, "value": {...}}``.  A key is written at most
once; unreadable lines are skipped with a warning.
"""

from __future__ import annotations

import json
import logging
import os
import threading

from .quantum import QuantumSum

log = logging.getLogger(__name__)

_lock = threading.Lock()


def make_key(lie_type: str, u, v, **extra) -> dict:
    key = {"type": str(lie_type), "u": list(u), "v": list(v)}
    key.update(extra)
    return key


def _canon(key: dict) -> str:
    return json.dumps(key, sort_keys=True, separators=(",", ":"))


class ResultCache:
    def __init__(self, path: str | None):
        self.path = path

    def _load(self) -> dict:
        out = {}
        if not self.path or not os.path.exists(self.path):
            return out
        with open(self.path, encoding="utf-8") as fh:
            for n, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    k = _canon(rec["key"])
                    QuantumSum.from_json(rec["value"])
                except (ValueError, KeyError, TypeError) as exc:
                    log.warning("cache %s: skipping corrupt line %d (%s)", self.path, n, exc)
                    continue
                out.setdefault(k, rec["value"])
        return out

    def get(self, key: dict) -> QuantumSum | None:
        if not self.path:
            return None
        with _lock:
            hit = self._load().get(_canon(key))
        return None if hit is None else QuantumSum.from_json(hit)

    def put(self, key: dict, value: QuantumSum) -> None:
        if not self.path:
            return
        with _lock:
            if _canon(key) in self._load():
                return
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps({"key": key, "value": value.to_json()}, sort_keys=True) + "\n")


def cache_get(path: str | None, key: dict) -> QuantumSum | None:
    return ResultCache(path).get(key)


def cache_put(path: str | None, key: dict, value: QuantumSum) -> None:
    ResultCache(path).put(key, value)
