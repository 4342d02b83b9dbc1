"""On-disk result cache keyed by a content hash of (operation, config)."""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional

from . import __version__

ENV_VAR = "CHEREDNIK_CACHE_DIR"


def cache_key(operation: str, config: Any) -> str:
    blob = json.dumps({"op": operation, "config": config}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


@dataclass
class CacheEntry:
    key: str
    value: Any
    version: str
    timestamp: float

    def to_json(self):
        return {"key": self.key, "value": self.value, "version": self.version, "timestamp": self.timestamp}


class ResultCache:
    """JSON files named by key; writes go through a temp file and an atomic rename."""

    def __init__(self, root: Optional[os.PathLike] = None):
        root = root if root is not None else os.environ.get(ENV_VAR)
        self.root = Path(root) if root else None

    @property
    def enabled(self) -> bool:
        return self.root is not None

    def _path(self, key: str) -> Path:
        assert self.root is not None
        return self.root / f"{key}.json"

    def get(self, operation: str, config: Any) -> Optional[CacheEntry]:
        if not self.enabled:
            return None
        key = cache_key(operation, config)
        try:
            data = json.loads(self._path(key).read_text())
        except (OSError, ValueError):
            return None
        if data.get("version") != __version__ or data.get("key") != key:
            return None
        return CacheEntry(key, data["value"], data["version"], data["timestamp"])

    def put(self, operation: str, config: Any, value: Any) -> Optional[CacheEntry]:
        if not self.enabled:
            return None
        key = cache_key(operation, config)
        entry = CacheEntry(key, value, __version__, time.time())
        self.root.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(entry.to_json(), fh, sort_keys=True, separators=(",", ":"))
            os.replace(tmp, self._path(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return entry

    def fetch(self, operation: str, config: Any, compute: Callable[[], Any]) -> Any:
        """Cached value if present, else compute (must return JSON data) and store."""
        hit = self.get(operation, config)
        if hit is not None:
            return hit.value
        value = compute()
        self.put(operation, config, value)
        return value
