"""Content-addressed cache for expensive curve computations.

Entries are JSON files named by the SHA-256 of their canonicalised key, so
identical inputs hit the same file regardless of argument spelling.  Writes
go through a temp file and os.replace, so readers never see partial JSON.
Corrupt or unreadable entries are treated as misses and recomputed.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile

from .curves import CurveSpec, GroupStructure, group_structure
from .fields import BinaryField


def cache_key(**fields) -> str:
    blob = json.dumps(fields, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("ascii")).hexdigest()


def cache_path(cache_dir: str, key: str) -> str:
    return os.path.join(cache_dir, key + ".json")


def cache_load(cache_dir: str, key: str) -> dict | None:
    path = cache_path(cache_dir, key)
    try:
        with open(path, "r", encoding="ascii") as fh:
            payload = json.load(fh)
    except FileNotFoundError:
        return None
    except (OSError, ValueError, UnicodeDecodeError) as exc:
        print(f"warning: ignoring unreadable cache entry {path}: {exc}",
              file=sys.stderr)
        return None
    if not isinstance(payload, dict):
        print(f"warning: ignoring malformed cache entry {path}", file=sys.stderr)
        return None
    return payload


def cache_store(cache_dir: str, key: str, payload: dict) -> None:
    try:
        os.makedirs(cache_dir, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="ascii") as fh:
                json.dump(payload, fh, indent=2, sort_keys=True)
                fh.write("\n")
            os.replace(tmp, cache_path(cache_dir, key))
        except BaseException:
            os.unlink(tmp)
            raise
    except OSError as exc:
        print(f"warning: could not write cache entry under {cache_dir}: {exc}",
              file=sys.stderr)


def _structure_key(curve: CurveSpec, field: BinaryField) -> str:
    base = curve.field
    return cache_key(
        kind="group_structure",
        base_degree=base.degree,
        base_modulus=base.modulus,
        a1=curve.a1.bits,
        a2=curve.a2.bits,
        field_degree=field.degree,
        field_modulus=field.modulus,
    )


def cached_group_structure(curve: CurveSpec, field: BinaryField | None = None,
                           cache_dir: str | None = None,
                           jobs: int = 1) -> GroupStructure:
    """group_structure with an optional on-disk cache in front of it."""
    if field is None:
        field = curve.field
    if cache_dir is None:
        return group_structure(curve, field, jobs=jobs)
    key = _structure_key(curve, field)
    payload = cache_load(cache_dir, key)
    if payload is not None:
        try:
            gs = GroupStructure(order=int(payload["order"]),
                                n1=int(payload["n1"]), n2=int(payload["n2"]))
            if gs.order == gs.n1 * gs.n2:
                return gs
        except (KeyError, TypeError, ValueError):
            pass
        print(f"warning: recomputing over bad cache entry {key[:16]}...",
              file=sys.stderr)
    gs = group_structure(curve, field, jobs=jobs)
    cache_store(cache_dir, key, {"order": gs.order, "n1": gs.n1, "n2": gs.n2})
    return gs
