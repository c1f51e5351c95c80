"""Finite subsets of the non-negative rationals that contain 0.

A :class:`QSet` is the 1/den-dilate of a :class:`~sumsets.natset.NatSet`,
kept with the smallest possible denominator so that equal sets have equal
fields.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator

from .natset import NatSet, ParseError, _tokens, divide_exact, gcd_of, kfold, sumset

__all__ = [
    "QSet",
    "as_fraction",
    "format_fraction",
    "format_qset",
    "parse_fraction",
    "parse_qset",
    "q_kfold",
    "q_make",
    "q_sumset",
]


def as_fraction(value) -> Fraction:
    """Exact conversion; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {value!r}")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_fraction(value)
    if hasattr(value, "__index__"):
        return Fraction(value.__index__())
    raise TypeError(f"cannot interpret {value!r} as a rational")


class QSet:
    """``{x / den : x in num}`` in lowest terms.

    Normalization divides ``den`` and every element of ``num`` by their
    common gcd, so ``{0}`` always has ``den == 1``.
    """

    __slots__ = ("den", "num")

    def __init__(self, den: int, num: NatSet):
        if den <= 0:
            raise ValueError("denominator must be positive")
        g = math.gcd(den, gcd_of(num))
        if g > 1:
            den //= g
            num = divide_exact(num, g)
        self.den = den
        self.num = num

    @property
    def max(self) -> Fraction:
        return Fraction(self.num.max, self.den)

    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num.elements)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values())

    def __len__(self) -> int:
        return len(self.num)

    def __contains__(self, value) -> bool:
        x = as_fraction(value) * self.den
        return x.denominator == 1 and x.numerator in self.num

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSet):
            return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self) -> int:
        return hash(("QSet", self.den, self.num.bits))

    def __add__(self, other: QSet) -> QSet:
        if not isinstance(other, QSet):
            return NotImplemented
        return q_sumset(self, other)

    def __repr__(self) -> str:
        return f"QSet(den={self.den}, num={self.num!r})"

    def __str__(self) -> str:
        return format_qset(self)


def q_make(values: Iterable, strict: bool = False) -> QSet:
    """Build a normalized QSet; 0 is added unless ``strict`` is set."""
    fracs = {as_fraction(v) for v in values}
    neg = [f for f in fracs if f < 0]
    if neg:
        raise ValueError(f"negative value {min(neg)} not allowed")
    if Fraction(0) not in fracs:
        if strict:
            raise ValueError("set must contain 0")
        fracs.add(Fraction(0))
    den = math.lcm(*(f.denominator for f in fracs))
    return QSet(den, NatSet(f.numerator * (den // f.denominator) for f in fracs))


def _rescale(X: QSet, den: int) -> NatSet:
    m = den // X.den
    if m == 1:
        return X.num
    return NatSet.from_bits(_spread(X.num, m))


def _spread(X: NatSet, m: int) -> int:
    bits = 0
    for x in X.elements:
        bits |= 1 << (x * m)
    return bits


def q_sumset(X: QSet, Y: QSet) -> QSet:
    den = math.lcm(X.den, Y.den)
    return QSet(den, sumset(_rescale(X, den), _rescale(Y, den)))


def q_kfold(X: QSet, k: int) -> QSet:
    return QSet(X.den, kfold(X.num, k))


def parse_fraction(tok: str, pos: int = 0) -> Fraction:
    parts = tok.split("/")
    if len(parts) > 2 or not all(p.isascii() and p.isdigit() for p in parts):
        raise ParseError("expected a non-negative integer or p/q", pos, tok)
    if len(parts) == 2 and int(parts[1]) == 0:
        raise ParseError("zero denominator", pos, tok)
    return Fraction(int(parts[0]), int(parts[1]) if len(parts) == 2 else 1)


def parse_rationals(text: str) -> list[Fraction]:
    return [parse_fraction(tok, pos) for pos, tok in _tokens(text)]


def parse_qset(text: str) -> QSet:
    """Parse ``"0,1/2,2/3"``; 0 is added when missing."""
    return q_make(parse_rationals(text))


def format_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_qset(X: QSet) -> str:
    return ",".join(format_fraction(v) for v in X.values())
