"""JSON certificates: ``{"kind", "version", "input", "payload"}``.

Serialization is canonical (sorted keys, fixed indentation, trailing
newline), so ``serialize(deserialize(text)) == text`` for any text this module
produced.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from . import __version__

KINDS = ("DECOMPOSITION_TREE", "INDECOMPOSABLE_REPORT", "FINITENESS", "REPRESENTATION", "MONODROMY_REPORT")


def _plain(obj: Any) -> Any:
    """Normalize to JSON-native values (tuples become lists)."""
    return json.loads(json.dumps(obj))


@dataclass(frozen=True)
class Certificate:
    kind: str
    input: Any
    payload: Any
    version: str = __version__

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        object.__setattr__(self, "input", _plain(self.input))
        object.__setattr__(self, "payload", _plain(self.payload))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "version": self.version, "input": self.input, "payload": self.payload}


def serialize(cert: Certificate) -> str:
    return json.dumps(cert.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def deserialize(text: str) -> Certificate:
    data = json.loads(text)
    missing = {"kind", "version", "input", "payload"} - set(data)
    if missing:
        raise ValueError(f"certificate lacks {sorted(missing)}")
    return Certificate(data["kind"], data["input"], data["payload"], data["version"])
