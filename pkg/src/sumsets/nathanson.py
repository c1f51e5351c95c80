"""Eventual structure of k-fold sumsets.

For ``A`` with ``0 in A`` and gcd 1, ``a = max A`` and ``n = |A| - 1``, the
k-fold sum eventually reads::

    kA = B ∪ [b, ka - c] ∪ (ka - C)

The low part is fixed by the numerical monoid ``<A>``: ``b`` is its
Frobenius number plus one and ``B`` its members below ``b - 1``.  The high
part is the same construction applied to ``max A - A``.  ``k_star`` is the
least ``k`` from which the identity holds, certified exhaustively up to
``a**2 * n``.
"""
from __future__ import annotations

import csv
import io
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .natset import NatSet, gcd_of, interval_bits, kfold, reflect, sumset
from .numsgp import generated_by_set

__all__ = [
    "NathansonStructure",
    "ScanReport",
    "StructureError",
    "SCAN_COLUMNS",
    "SCAN_ROW_SCHEMA",
    "bound_scan",
    "canonical_structure",
    "enumerate_sets",
    "iter_scan_rows",
    "reconstruct_bits",
    "scan_row",
    "rows_to_csv",
    "verify_decomposition",
]


class StructureError(RuntimeError):
    """The decomposition failed where the structure theorem says it holds."""


@dataclass(frozen=True)
class NathansonStructure:
    a: int
    n: int
    b: int
    c: int
    B: tuple[int, ...]
    C: tuple[int, ...]
    k_star: int
    bound_a2n: int = field(init=False)
    bound_gw: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "bound_a2n", self.a * self.a * self.n)
        object.__setattr__(self, "bound_gw", self.a - self.n + 1)

    def reconstruct(self, k: int) -> NatSet | None:
        """``B ∪ [b, ka-c] ∪ (ka - C)``, or None if it leaves the naturals."""
        bits = reconstruct_bits(self, k)
        if bits is None or not bits & 1:
            return None
        return NatSet.from_bits(bits)


def _side(A: NatSet) -> tuple[int, tuple[int, ...]]:
    S = generated_by_set(A)
    b = S.frobenius + 1
    return b, S.members_upto(b - 2)


def reconstruct_bits(s: NathansonStructure, k: int) -> int | None:
    top = k * s.a
    if s.C and s.C[-1] > top:
        return None
    bits = interval_bits(s.b, top - s.c)
    for x in s.B:
        bits |= 1 << x
    for x in s.C:
        bits |= 1 << (top - x)
    return bits


@lru_cache(maxsize=4096)
def canonical_structure(A: NatSet) -> NathansonStructure:
    """Canonical ``(b, c, B, C)`` for ``A`` together with ``k_star``.

    Every ``k`` in ``[0, a**2 n]`` is checked against ``kfold(A, k)``, so
    ``k_star`` is one past the last failure.  Raises StructureError when the
    identity fails at ``k = a**2 n``.
    """
    if A.max == 0:
        raise ValueError("A = {0} has no eventual structure (gcd is 0)")
    if gcd_of(A) != 1:
        raise ValueError(f"gcd of A is {gcd_of(A)}, not 1; divide it out first")
    a, n = A.max, len(A) - 1
    b, B = _side(A)
    c, C = _side(reflect(A))
    s = NathansonStructure(a, n, b, c, B, C, 0)
    last_fail = -1
    kA = NatSet()
    for k in range(s.bound_a2n + 1):
        if k:
            kA = sumset(kA, A)
        if reconstruct_bits(s, k) != kA.bits:
            last_fail = k
    if last_fail == s.bound_a2n:
        raise StructureError(f"decomposition fails at k = a^2 n = {last_fail} for {A}")
    return NathansonStructure(a, n, b, c, B, C, last_fail + 1)


def verify_decomposition(A: NatSet, k: int, s: NathansonStructure) -> bool:
    return reconstruct_bits(s, k) == kfold(A, k).bits


def enumerate_sets(max_a: int) -> Iterator[NatSet]:
    """All sets with ``0 in A``, ``max A <= max_a``, gcd 1, in lexicographic order."""
    found = []
    for r in range(1, max_a + 1):
        for combo in itertools.combinations(range(1, max_a + 1), r):
            A = NatSet((0,) + combo)
            if gcd_of(A) == 1:
                found.append(A)
    found.sort()
    return iter(found)


SCAN_COLUMNS = ("set", "b", "c", "B", "C", "k_star", "gw_bound", "a2n_bound", "gw_ok")

SCAN_ROW_SCHEMA = {
    "type": "object",
    "required": list(SCAN_COLUMNS),
    "additionalProperties": False,
    "properties": {
        "set": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "b": {"type": "integer", "minimum": 0},
        "c": {"type": "integer", "minimum": 0},
        "B": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "C": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "k_star": {"type": "integer", "minimum": 0},
        "gw_bound": {"type": "integer"},
        "a2n_bound": {"type": "integer"},
        "gw_ok": {"type": "boolean"},
    },
}


def scan_row(A: NatSet) -> dict:
    s = canonical_structure(A)
    return {
        "set": list(A.elements),
        "b": s.b,
        "c": s.c,
        "B": list(s.B),
        "C": list(s.C),
        "k_star": s.k_star,
        "gw_bound": s.bound_gw,
        "a2n_bound": s.bound_a2n,
        "gw_ok": s.k_star <= s.bound_gw,
    }


def _safe_row(A: NatSet) -> dict | str:
    try:
        return scan_row(A)
    except StructureError as exc:
        return str(exc)


def iter_scan_rows(
    max_a: int, start: int = 0, stop: int | None = None, workers: int = 1
) -> Iterator[dict | str]:
    """Rows for sets ``start <= index < stop`` of :func:`enumerate_sets`.

    A hard failure (decomposition broken at ``a**2 n``) is yielded as its
    error message instead of a row.  Output order never depends on
    ``workers``.
    """
    sets = itertools.islice(enumerate_sets(max_a), start, stop)
    if workers <= 1:
        yield from map(_safe_row, sets)
        return
    with ProcessPoolExecutor(workers) as pool:
        yield from pool.map(_safe_row, sets, chunksize=16)


@dataclass
class ScanReport:
    rows: list[dict]
    anomalies: list[dict]  # k_star above the Granville-Walker bound
    failures: list[str]  # k_star above a^2 n

    @property
    def ok(self) -> bool:
        return not self.failures


def bound_scan(max_a: int, workers: int = 1) -> ScanReport:
    if max_a < 1:
        raise ValueError("max_a must be at least 1")
    report = ScanReport([], [], [])
    for row in iter_scan_rows(max_a, workers=workers):
        if isinstance(row, str):
            report.failures.append(row)
            continue
        report.rows.append(row)
        if not row["gw_ok"]:
            report.anomalies.append(row)
    return report


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return " ".join(map(str, v))
    return str(v)


def rows_to_csv(rows, header: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(SCAN_COLUMNS)
    for row in rows:
        w.writerow([_csv_cell(row[col]) for col in SCAN_COLUMNS])
    return buf.getvalue()
