"""Versioned on-disk cache for exact computation results.

Entries are single JSON documents carrying their own content digest; a
version bump or digest mismatch silently invalidates the entry, forcing
recomputation.  Payload integers are decimal strings so the files stay
auditable and independent of any binary format.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

SCHEMA_VERSION = 1


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def payload_digest(kind: str, params: dict, payload) -> str:
    body = canonical_json({"version": SCHEMA_VERSION, "kind": kind,
                           "params": params, "payload": payload})
    return hashlib.sha256(body.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    kind: str
    params: dict
    payload: object
    digest: str
    version: int = SCHEMA_VERSION

    @classmethod
    def build(cls, kind: str, params: dict, payload) -> "CacheEntry":
        return cls(kind=kind, params=params, payload=payload,
                   digest=payload_digest(kind, params, payload))

    def to_document(self) -> dict:
        return {"version": self.version, "kind": self.kind, "params": self.params,
                "payload": self.payload, "digest": self.digest}

    @classmethod
    def from_document(cls, doc: dict) -> "CacheEntry | None":
        """Parse and validate a cache document; None if stale or corrupt."""
        try:
            if doc["version"] != SCHEMA_VERSION:
                return None
            entry = cls(kind=doc["kind"], params=doc["params"],
                        payload=doc["payload"], digest=doc["digest"],
                        version=doc["version"])
        except (KeyError, TypeError):
            return None
        if payload_digest(entry.kind, entry.params, entry.payload) != entry.digest:
            return None
        return entry


def cache_dir() -> Path:
    env = os.environ.get("HOOK_CENSUS_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hookcensus"


def entry_path(key: str) -> Path:
    return cache_dir() / f"{key}.json"


def load(key: str) -> CacheEntry | None:
    path = entry_path(key)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, ValueError):
        return None
    return CacheEntry.from_document(doc)


def store(key: str, entry: CacheEntry) -> None:
    """Write atomically: temp file in the cache directory, then rename."""
    directory = cache_dir()
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(entry.to_document()))
            fh.write("\n")
        os.replace(tmp, entry_path(key))
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
