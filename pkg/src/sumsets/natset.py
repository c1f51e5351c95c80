"""Finite subsets of the naturals that contain 0.

A :class:`NatSet` is stored as a Python integer used as a bit-vector: bit
``i`` is set exactly when ``i`` is an element.  Sumsets are computed either
by a shifted-OR convolution on that bit-vector (``backend="bits"``, the
default) or by sorting pairwise sums (``backend="sorted"``).  Both backends
return identical values.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "BACKENDS",
    "Interval",
    "NatSet",
    "ParseError",
    "divide_exact",
    "format_natset",
    "gcd_of",
    "interval_bits",
    "kfold",
    "parse_natset",
    "reflect",
    "sumset",
]

BACKENDS = ("bits", "sorted")

# below this width the pure-Python string scans beat the numpy round trip
_SMALL_WIDTH = 4096
_ONES = re.compile("1+")


class ParseError(ValueError):
    """A set or generator literal could not be parsed."""

    def __init__(self, message: str, position: int, token: str):
        super().__init__(f"{message} at position {position}: {token!r}")
        self.position = position
        self.token = token


def _bit_array(bits: int) -> np.ndarray:
    nbytes = (bits.bit_length() + 7) // 8
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")


def _elements_of(bits: int) -> tuple[int, ...]:
    if bits.bit_length() <= _SMALL_WIDTH:
        s = bin(bits)[:1:-1]
        return tuple(i for i, ch in enumerate(s) if ch == "1")
    return tuple(np.flatnonzero(_bit_array(bits)).tolist())


def _runs(bits: int) -> list[tuple[int, int]]:
    """Maximal runs ``(lo, hi)`` of consecutive set bits, ascending."""
    if bits.bit_length() <= _SMALL_WIDTH:
        s = bin(bits)[:1:-1]
        return [(m.start(), m.end() - 1) for m in _ONES.finditer(s)]
    arr = _bit_array(bits).astype(np.int8)
    edges = np.diff(np.concatenate(([0], arr, [0])))
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1) - 1
    return list(zip(starts.tolist(), ends.tolist()))


def _smear(bits: int, width: int) -> int:
    """OR of ``bits << i`` for ``0 <= i < width``."""
    span = 1
    while 2 * span <= width:
        bits |= bits << span
        span *= 2
    if span < width:
        bits |= bits << (width - span)
    return bits


def interval_bits(lo: int, hi: int) -> int:
    """Bit-vector of the discrete interval ``{x : lo <= x <= hi}`` (lo >= 0)."""
    if hi < lo:
        return 0
    return ((1 << (hi - lo + 1)) - 1) << lo


@dataclass(frozen=True)
class Interval:
    """The discrete interval ``{x : lo <= x <= hi}``; empty when ``hi < lo``."""

    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.hi < self.lo

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))


class NatSet:
    """Immutable finite subset of the naturals containing 0.

    >>> NatSet([0, 2, 3]) + NatSet([0, 2, 3])
    NatSet([0, 2, 3, 4, 5, 6])
    """

    __slots__ = ("_bits", "_elements")

    def __init__(self, elements: Iterable[int] = (0,)):
        bits = 0
        for x in elements:
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise TypeError(f"NatSet elements must be integers, got {x!r}")
            if x < 0:
                raise ValueError(f"NatSet elements must be non-negative, got {x}")
            bits |= 1 << int(x)
        if not bits & 1:
            raise ValueError("NatSet must contain 0")
        self._bits = bits
        self._elements: tuple[int, ...] | None = None

    @classmethod
    def from_bits(cls, bits: int) -> NatSet:
        if bits < 0 or not bits & 1:
            raise ValueError("bit-vector must be non-negative with bit 0 set")
        obj = cls.__new__(cls)
        obj._bits = bits
        obj._elements = None
        return obj

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def elements(self) -> tuple[int, ...]:
        if self._elements is None:
            self._elements = _elements_of(self._bits)
        return self._elements

    @property
    def max(self) -> int:
        return self._bits.bit_length() - 1

    def runs(self) -> list[tuple[int, int]]:
        return _runs(self._bits)

    def __len__(self) -> int:
        return bin(self._bits).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and x >= 0 and bool(self._bits >> x & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NatSet):
            return NotImplemented
        return self._bits == other._bits

    def __hash__(self) -> int:
        return hash(("NatSet", self._bits))

    def __lt__(self, other: NatSet) -> bool:
        return self.elements < other.elements

    def __le__(self, other: NatSet) -> bool:
        """Subset test."""
        return self._bits & ~other._bits == 0

    def __add__(self, other: NatSet) -> NatSet:
        if not isinstance(other, NatSet):
            return NotImplemented
        return sumset(self, other)

    def __mul__(self, k: int) -> NatSet:
        return kfold(self, k)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if len(self) > 20:
            return f"NatSet(<{len(self)} elements, max {self.max}>)"
        return f"NatSet({list(self.elements)})"

    def __str__(self) -> str:
        return format_natset(self)


def _sumset_bits(x: int, y: int) -> int:
    rx, ry = _runs(x), _runs(y)
    if len(rx) < len(ry):
        x, ry = y, rx
    out = 0
    for lo, hi in ry:
        out |= _smear(x, hi - lo + 1) << lo
    return out


def _sumset_sorted(xs: tuple[int, ...], ys: tuple[int, ...]) -> tuple[int, ...]:
    a = np.asarray(xs, dtype=np.int64)
    b = np.asarray(ys, dtype=np.int64)
    return tuple(np.unique(np.add.outer(a, b)).tolist())


def sumset(X: NatSet, Y: NatSet, backend: str = "bits") -> NatSet:
    """The set ``{x + y : x in X, y in Y}``."""
    if backend == "bits":
        return NatSet.from_bits(_sumset_bits(X.bits, Y.bits))
    if backend == "sorted":
        return NatSet(_sumset_sorted(X.elements, Y.elements))
    raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")


def kfold(X: NatSet, k: int, backend: str = "bits") -> NatSet:
    """k-fold sum ``X + ... + X`` by binary doubling; ``kfold(X, 0) == {0}``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    result = NatSet()
    power = X
    while k:
        if k & 1:
            result = sumset(result, power, backend)
        k >>= 1
        if k:
            power = sumset(power, power, backend)
    return result


def reflect(X: NatSet) -> NatSet:
    """``{max X - x : x in X}``."""
    width = X.bits.bit_length()
    return NatSet.from_bits(int(format(X.bits, f"0{width}b")[::-1], 2))


def gcd_of(X: NatSet) -> int:
    """gcd of all elements, with ``gcd{0} == 0``."""
    g = 0
    for x in X.elements:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def divide_exact(X: NatSet, q: int) -> NatSet:
    if q <= 0:
        raise ValueError("divisor must be a positive integer")
    bad = [x for x in X.elements if x % q]
    if bad:
        raise ValueError(f"{bad[0]} is not divisible by {q}")
    return NatSet(x // q for x in X.elements)


def _tokens(text: str) -> Iterator[tuple[int, str]]:
    pos = 0
    for tok in text.split(","):
        yield pos, tok
        pos += len(tok) + 1


def parse_natset(text: str) -> NatSet:
    """Parse ``"0,2,3"``: ascending decimal integers, first one 0."""
    values: list[int] = []
    for pos, tok in _tokens(text):
        if not tok.isascii() or not tok.isdigit():
            raise ParseError("expected a non-negative integer", pos, tok)
        x = int(tok)
        if values and x <= values[-1]:
            raise ParseError("elements must be strictly ascending", pos, tok)
        values.append(x)
    if values[0] != 0:
        raise ParseError("set must contain 0", 0, text.split(",")[0])
    return NatSet(values)


def format_natset(X: NatSet) -> str:
    return ",".join(map(str, X.elements))
