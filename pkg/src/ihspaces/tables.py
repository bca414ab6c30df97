"""Betti-table documents (JSON) and plain-text tables."""
from __future__ import annotations

import json
from typing import Any

from .complexes import GradedBetti


class BettiDocumentError(ValueError):
    pass


def betti_document(b: GradedBetti, dim: int, reduced: bool = True) -> dict[str, Any]:
    return {
        "dim": dim,
        "reduced": reduced,
        "betti": {str(d): r for d, r in b.ranks.items() if d >= 0},
    }


def parse_betti_document(doc: dict[str, Any] | str) -> tuple[GradedBetti, int, bool]:
    """Return (betti, dim, reduced) from a document or its JSON text."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise BettiDocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise BettiDocumentError("betti document must be a JSON object")
    try:
        dim = doc["dim"]
        table = doc["betti"]
    except KeyError as exc:
        raise BettiDocumentError(f"missing field {exc}") from None
    reduced = doc.get("reduced", True)
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise BettiDocumentError("dim must be an integer")
    if not isinstance(reduced, bool):
        raise BettiDocumentError("reduced must be a boolean")
    if not isinstance(table, dict):
        raise BettiDocumentError("betti must be an object mapping degree to rank")
    ranks = {}
    for key, r in table.items():
        if not (isinstance(key, str) and key.isdigit()):
            raise BettiDocumentError(f"degree {key!r} is not a nonnegative integer")
        if not isinstance(r, int) or isinstance(r, bool) or r < 0:
            raise BettiDocumentError(f"rank {r!r} in degree {key} is not a nonnegative integer")
        d = int(key)
        if r and d > dim:
            raise BettiDocumentError(f"degree {d} exceeds dim {dim}")
        ranks[d] = r
    return GradedBetti(ranks, max(dim, 0)), dim, reduced


def format_table(b: GradedBetti, dense_upto: int | None = None) -> str:
    """``degree: rank`` lines in increasing degree; zeros suppressed unless dense."""
    if dense_upto is not None:
        degrees = range(min(0, *b.ranks) if b.ranks else 0, max(dense_upto, b.top_degree) + 1)
        lines = [f"{d}: {b[d]}" for d in degrees]
    else:
        lines = [f"{d}: {r}" for d, r in b.ranks.items()]
    return "\n".join(lines) if lines else "(none)"
