"""On-disk cache of Nichols truncations, keyed by input hash and cutoff.

Entries live in ``<dir>/<hash>-D<cutoff>.json``.  Writes go to a temporary
file in the same directory followed by an atomic rename, so a reader sees
either the old entry or the complete new one.  An entry that fails to load
is removed with a warning and the truncation is recomputed.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile

from .nichols import NicholsTruncation

CACHE_FORMAT = "ydnichols-cache/1"
CACHE_ENV = "YDNICHOLS_CACHE_DIR"

log = logging.getLogger(__name__)


def default_cache_dir():
    return os.environ.get(CACHE_ENV) or None


class TruncationCache:
    def __init__(self, directory):
        self.directory = directory
        self.hits = 0
        self.misses = 0

    def path(self, key, cutoff):
        return os.path.join(self.directory, f"{key}-D{cutoff}.json")

    def load(self, key, cutoff, space, tags=None):
        """The stored truncation, or None on a miss (corrupt entries count as misses)."""
        path = self.path(key, cutoff)
        try:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            self._evict(path, exc)
            return None
        try:
            if doc.get("format") != CACHE_FORMAT or doc.get("key") != key or doc.get("cutoff") != cutoff:
                raise ValueError("header does not match")
            return NicholsTruncation(space, cutoff, tags=tags, state=doc["state"])
        except Exception as exc:  # any malformed payload is treated as corruption
            self._evict(path, exc)
            return None

    def store(self, key, T):
        os.makedirs(self.directory, exist_ok=True)
        doc = {"format": CACHE_FORMAT, "key": key, "cutoff": T.cutoff, "state": T.to_state()}
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, sort_keys=True, separators=(",", ":"))
            os.replace(tmp, self.path(key, T.cutoff))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def nichols(self, key, space, cutoff, tags=None):
        T = self.load(key, cutoff, space, tags)
        if T is not None:
            self.hits += 1
            return T
        self.misses += 1
        T = NicholsTruncation(space, cutoff, tags=tags)
        self.store(key, T)
        return T

    def _evict(self, path, exc):
        log.warning("evicting corrupt cache entry %s (%s)", path, exc)
        try:
            os.unlink(path)
        except OSError:
            pass
