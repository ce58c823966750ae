"""Deterministic JSON output helpers."""

from __future__ import annotations

import json

_I64_MIN, _I64_MAX = -(1 << 63), (1 << 63) - 1


def jint(n: int):
    """Integers beyond 64 bits travel as decimal strings for lossless interchange."""
    return n if _I64_MIN <= n <= _I64_MAX else str(n)


def dumps(obj) -> str:
    """Compact, key-order-preserving, byte-stable serialization."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)
