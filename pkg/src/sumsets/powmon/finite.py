"""Small finite monoids given by Cayley tables, and their reduced power monoids.

Used to exhibit non-isomorphic monoids whose reduced finitary power monoids
coincide: a left-zero semigroup with an identity adjoined and its opposite.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "FPM_GUARD",
    "GALLERY_SCHEMA",
    "ISO_GUARD",
    "FiniteMonoidTable",
    "GuardError",
    "cyclic_group",
    "gallery_report",
    "idempotent_pair",
    "is_breakable",
    "left_zero_unitization",
    "opposite",
    "reduced_fpm_table",
    "set_union_table",
    "tables_isomorphic",
]

FPM_GUARD = 16
ISO_GUARD = 8


class GuardError(ValueError):
    """A size guard refused an exponential or factorial computation."""


@dataclass(frozen=True)
class FiniteMonoidTable:
    """Monoid on ``{0, ..., size-1}`` with ``table[x][y] = x*y``.

    ``labels`` optionally names the elements (e.g. the subsets of a
    reduced power monoid).
    """

    size: int
    identity: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple | None = None

    def __post_init__(self):
        n = self.size
        if n < 1 or len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError(f"table must be {n}x{n}")
        if any(not 0 <= z < n for row in self.table for z in row):
            raise ValueError("table entries out of range")
        e = self.identity
        if any(self.table[e][x] != x or self.table[x][e] != x for x in range(n)):
            raise ValueError(f"{e} is not a two-sided identity")
        t = self.table
        for x, y, z in itertools.product(range(n), repeat=3):
            if t[t[x][y]][z] != t[x][t[y][z]]:
                raise ValueError(f"not associative at ({x}, {y}, {z})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], identity: int = 0, labels=None):
        return cls(len(rows), identity, tuple(tuple(r) for r in rows), labels)

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def is_commutative(self) -> bool:
        return all(self.table[x][y] == self.table[y][x] for x in range(self.size) for y in range(x))

    def to_json(self) -> str:
        payload = {"size": self.size, "identity": self.identity, "table": self.table}
        if self.labels is not None:
            payload["labels"] = self.labels
        return json.dumps(payload, separators=(",", ":"))


def left_zero_unitization(v: int) -> FiniteMonoidTable:
    """``V = {1..v}`` with ``xy = x``, plus identity ``0``."""
    if v < 1:
        raise ValueError("v must be at least 1")
    n = v + 1
    rows = [[y if x == 0 else x for y in range(n)] for x in range(n)]
    return FiniteMonoidTable.from_rows(rows)


def cyclic_group(n: int) -> FiniteMonoidTable:
    return FiniteMonoidTable.from_rows([[(x + y) % n for y in range(n)] for x in range(n)])


def idempotent_pair() -> FiniteMonoidTable:
    """``{1, 0}`` under multiplication; index 0 is the identity 1."""
    return FiniteMonoidTable.from_rows([[0, 1], [1, 1]])


def opposite(M: FiniteMonoidTable) -> FiniteMonoidTable:
    rows = [[M.table[y][x] for y in range(M.size)] for x in range(M.size)]
    return FiniteMonoidTable.from_rows(rows, M.identity, M.labels)


def _subsets_with_identity(M: FiniteMonoidTable) -> list[tuple[int, ...]]:
    if M.size > FPM_GUARD:
        raise GuardError(f"FPM enumeration guard: size {M.size} > {FPM_GUARD}")
    rest = [x for x in range(M.size) if x != M.identity]
    out = []
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            out.append(tuple(sorted((M.identity,) + combo)))
    return out


def reduced_fpm_table(M: FiniteMonoidTable) -> FiniteMonoidTable:
    """Finite subsets containing the identity under setwise product.

    Elements are ordered by size, then lexicographically; index 0 is
    ``{identity}``.
    """
    subsets = _subsets_with_identity(M)
    index = {s: i for i, s in enumerate(subsets)}
    rows = []
    for X in subsets:
        rows.append([index[tuple(sorted({M.table[x][y] for x in X for y in Y}))] for Y in subsets])
    return FiniteMonoidTable.from_rows(rows, 0, tuple(subsets))


def set_union_table(M: FiniteMonoidTable) -> FiniteMonoidTable:
    """Same carrier as :func:`reduced_fpm_table` but with ``X ∪ Y``."""
    subsets = _subsets_with_identity(M)
    index = {s: i for i, s in enumerate(subsets)}
    rows = [[index[tuple(sorted(set(X) | set(Y)))] for Y in subsets] for X in subsets]
    return FiniteMonoidTable.from_rows(rows, 0, tuple(subsets))


def tables_isomorphic(M1: FiniteMonoidTable, M2: FiniteMonoidTable) -> bool:
    """Brute force over identity-preserving bijections."""
    if M1.size != M2.size:
        return False
    if M1.size > ISO_GUARD:
        raise GuardError(f"isomorphism search guard: size {M1.size} > {ISO_GUARD}")
    src = [x for x in range(M1.size) if x != M1.identity]
    dst = [x for x in range(M2.size) if x != M2.identity]
    for perm in itertools.permutations(dst):
        f = dict(zip(src, perm))
        f[M1.identity] = M2.identity
        if all(
            f[M1.table[x][y]] == M2.table[f[x]][f[y]]
            for x in range(M1.size)
            for y in range(M1.size)
        ):
            return True
    return False


def is_breakable(M: FiniteMonoidTable) -> bool:
    """``xy in {x, y}`` for all x, y."""
    return all(M.table[x][y] in (x, y) for x in range(M.size) for y in range(M.size))


GALLERY_SCHEMA = {
    "type": "object",
    "required": ["v", "fpm_equal", "isomorphic"],
    "additionalProperties": False,
    "properties": {
        "v": {"type": "integer", "minimum": 1},
        "fpm_equal": {"type": "boolean"},
        "isomorphic": {"type": "boolean"},
    },
}


def gallery_report(v: int) -> dict:
    H = left_zero_unitization(v)
    Hop = opposite(H)
    return {
        "v": v,
        "fpm_equal": reduced_fpm_table(H).to_json() == reduced_fpm_table(Hop).to_json(),
        "isomorphic": tables_isomorphic(H, Hop),
    }
