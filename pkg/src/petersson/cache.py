"""On-disk cache for Bernoulli numbers and Cohen H values.

File format (versioned JSON)::

    {"version": 1, "bernoulli": {"n": "p/q"}, "cohenH": {"r,N": "p/q"}}
"""

from __future__ import annotations

import atexit
import json
import logging
import os
import tempfile
from fractions import Fraction
from pathlib import Path

from . import arith

log = logging.getLogger(__name__)

CACHE_VERSION = 1
ENV_VAR = "PETERSSON_CACHE"

_registered: set[Path] = set()


def resolve_path(path: str | os.PathLike | None) -> Path | None:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(path) if path else None


def load(path: str | os.PathLike) -> int:
    """Merge a cache file into the in-memory tables; returns entries loaded."""
    p = Path(path)
    if not p.exists():
        return 0
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        log.warning("ignoring unreadable cache %s: %s", p, exc)
        return 0
    if data.get("version") != CACHE_VERSION:
        log.warning("ignoring cache %s with version %r", p, data.get("version"))
        return 0
    count = 0
    for n, v in data.get("bernoulli", {}).items():
        arith._BERNOULLI.setdefault(int(n), Fraction(v))
        count += 1
    for key, v in data.get("cohenH", {}).items():
        r, N = (int(x) for x in key.split(","))
        arith._COHEN_H.setdefault((r, N), Fraction(v))
        count += 1
    return count


def dump(path: str | os.PathLike) -> None:
    """Write the in-memory tables atomically (temp file + rename)."""
    p = Path(path)
    payload = {
        "version": CACHE_VERSION,
        "bernoulli": {str(n): arith.rat_str(v) for n, v in sorted(arith._BERNOULLI.items())},
        "cohenH": {f"{r},{N}": arith.rat_str(v) for (r, N), v in sorted(arith._COHEN_H.items())},
    }
    p.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=p.name, dir=p.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True)
        os.replace(tmp, p)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def attach(path: str | os.PathLike) -> Path:
    """Load ``path`` now and rewrite it when the interpreter exits."""
    p = Path(path)
    load(p)
    if p not in _registered:
        _registered.add(p)
        atexit.register(dump, p)
    return p
