"""Stabilization of k-fold sums: ``(k+1)A = kA + {0, max A}`` for large k."""
from __future__ import annotations

from dataclasses import dataclass

from ..nathanson import StructureError, canonical_structure
from ..natset import NatSet, divide_exact, gcd_of, sumset
from ..qset import QSet, format_fraction

__all__ = ["LEMMA22_SCHEMA", "Lemma22Report", "lemma22_minimal_h", "stabilization_threshold"]

DEFAULT_WINDOW = 50


@dataclass(frozen=True)
class Lemma22Report:
    input: QSet
    h_min: int
    threshold: int
    window_checked: int

    def to_json(self) -> dict:
        return {
            "set": [_exact(v) for v in self.input.values()],
            "h_min": self.h_min,
            "threshold": self.threshold,
            "window": self.window_checked,
        }


LEMMA22_SCHEMA = {
    "type": "object",
    "required": ["set", "h_min", "threshold", "window"],
    "additionalProperties": False,
    "properties": {
        "set": {
            "type": "array",
            "items": {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\d+/\d+$"}]},
        },
        "h_min": {"type": "integer", "minimum": 0},
        "threshold": {"type": "integer", "minimum": 0},
        "window": {"type": "integer", "minimum": 1},
    },
}


def _exact(v):
    return v.numerator if v.denominator == 1 else format_fraction(v)


def _as_qset(A) -> QSet:
    if isinstance(A, QSet):
        return A
    if isinstance(A, NatSet):
        return QSet(1, A)
    raise TypeError(f"expected QSet or NatSet, got {type(A).__name__}")


def stabilization_threshold(A: NatSet) -> int:
    """``max(k_star, ceil(1 + (b + c)/a))`` on ``A / gcd(A)``."""
    if A.max == 0:
        return 0
    s = canonical_structure(divide_exact(A, gcd_of(A)))
    return max(s.k_star, 1 + -(-(s.b + s.c) // s.a))


def lemma22_minimal_h(A, window: int = DEFAULT_WINDOW) -> Lemma22Report:
    """Least ``h`` from which ``(k+1)A = kA + {0, max A}`` holds for good.

    The identity is checked for every ``k`` up to ``threshold + window``;
    ``h_min`` is one past the last failure.  A failure at or beyond the
    threshold raises StructureError.
    """
    if window < 1:
        raise ValueError("window must be positive")
    Q = _as_qset(A)
    # the identity is invariant under 1/den-dilation, so work on the numerators
    X = Q.num
    threshold = stabilization_threshold(X)
    top = NatSet([0, X.max])
    last_fail = -1
    kX = NatSet()
    for k in range(threshold + window + 1):
        nxt = sumset(kX, X)
        if nxt != sumset(kX, top):
            last_fail = k
        kX = nxt
    if last_fail >= threshold:
        raise StructureError(
            f"(k+1)A != kA + {{0, max A}} at k = {last_fail} >= threshold {threshold} for {Q}"
        )
    return Lemma22Report(Q, last_fail + 1, threshold, window)
