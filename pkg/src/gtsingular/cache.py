"""Content-addressed JSON cache for computed objects.

One file per entry under <root>/<operation>/<digest>.json, written with an
atomic replace; entries carry a format version and the full key, and any
mismatch reads as a miss.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

CACHE_VERSION = 1
ENV_VAR = "GTSINGULAR_CACHE"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env).expanduser()
    return Path("~/.cache/gtsingular").expanduser()


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def key_digest(key: dict) -> str:
    return hashlib.sha256(canonical_json(key).encode("utf-8")).hexdigest()


class Cache:
    def __init__(self, root: Path | str | None = None):
        self.root = Path(root).expanduser() if root is not None else default_cache_dir()

    def _path(self, operation: str, key: dict) -> Path:
        return self.root / operation / f"{key_digest(key)}.json"

    def get(self, operation: str, key: dict):
        path = self._path(operation, key)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                entry = json.load(fh)
        except (OSError, json.JSONDecodeError):
            return None
        if entry.get("version") != CACHE_VERSION or entry.get("key") != key:
            return None
        return entry.get("value")

    def put(self, operation: str, key: dict, value) -> None:
        path = self._path(operation, key)
        path.parent.mkdir(parents=True, exist_ok=True)
        entry = {"version": CACHE_VERSION, "key": key, "value": value}
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(entry, fh, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
