"""Numerical monoids and finitely generated Puiseux monoids."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .natset import NatSet, _elements_of, gcd_of
from .qset import as_fraction, format_fraction

__all__ = [
    "NumericalMonoid",
    "PuiseuxFG",
    "atoms_of",
    "closure_bits",
    "generate",
    "generated_by_set",
    "monoid_report",
    "pm_contains",
    "MONOID_REPORT_SCHEMA",
]


def closure_bits(gens: Iterable[int], limit: int) -> int:
    """Bit-vector of ``{sum of gens} ∩ [0, limit]``.

    Each generator is folded in by doubling: after ``j`` steps the set is
    closed under adding up to ``2**j - 1`` copies of it.
    """
    mask = (1 << (limit + 1)) - 1
    reach = 1
    for g in gens:
        step = g
        while step <= limit:
            reach = (reach | reach << step) & mask
            step *= 2
    return reach


def _irredundant(ints: Iterable[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for x in sorted(ints):
        if not (kept and closure_bits(kept, x) >> x & 1):
            kept.append(x)
    return tuple(kept)


@dataclass(frozen=True)
class NumericalMonoid:
    """Submonoid of (N, +) with finite complement.

    ``membership`` covers ``[0, frobenius + max(generators)]``; everything
    above ``frobenius`` is a member.
    """

    generators: tuple[int, ...]
    frobenius: int
    gaps: tuple[int, ...]
    membership: tuple[bool, ...] = field(repr=False)

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return self.membership[x]

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        """Generators that are not a sum of smaller generators."""
        return _irredundant(self.generators)

    def members_upto(self, n: int) -> tuple[int, ...]:
        return tuple(x for x in range(n + 1) if x in self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalMonoid):
            return NotImplemented
        return self.gaps == other.gaps

    def __hash__(self) -> int:
        return hash(("NumericalMonoid", self.gaps))


def generate(gens: Iterable[int]) -> NumericalMonoid:
    """Numerical monoid generated by coprime positive integers."""
    gens = tuple(sorted(set(int(g) for g in gens)))
    if not gens:
        raise ValueError("at least one generator is required")
    if gens[0] <= 0:
        raise ValueError("generators must be positive")
    if math.gcd(*gens) != 1:
        raise ValueError(f"gcd of generators is {math.gcd(*gens)}, not 1; complement is infinite")
    # Frobenius number < min*max for coprime generators
    limit = gens[0] * gens[-1]
    reach = closure_bits(gens, limit)
    missing = ~reach & ((1 << (limit + 1)) - 1)
    gaps = _elements_of(missing) if missing else ()
    frobenius = gaps[-1] if gaps else -1
    top = frobenius + gens[-1]
    digits = bin(reach)[:1:-1].ljust(top + 1, "0")
    table = tuple(ch == "1" for ch in digits[: top + 1])
    return NumericalMonoid(gens, frobenius, gaps, table)


def generated_by_set(A: NatSet) -> NumericalMonoid:
    """The numerical monoid generated by the nonzero elements of ``A``."""
    if A.max == 0:
        raise ValueError("A = {0} generates the trivial monoid")
    if gcd_of(A) != 1:
        raise ValueError(f"gcd of A is {gcd_of(A)}, not 1")
    return generate(A.elements[1:])


@dataclass(frozen=True)
class PuiseuxFG:
    """Finitely generated submonoid of the non-negative rationals.

    ``integer_model`` is ``atoms * den``; membership divides it by its gcd
    ``scale`` and defers to ``core``, a numerical monoid.
    """

    atoms: tuple[Fraction, ...]
    den: int
    integer_model: tuple[int, ...]
    scale: int = field(repr=False)
    core: NumericalMonoid = field(repr=False, compare=False)

    def __contains__(self, x) -> bool:
        return pm_contains(self, x)

    def scaled(self, q) -> PuiseuxFG:
        q = as_fraction(q)
        if q <= 0:
            raise ValueError("scaling factor must be positive")
        return atoms_of(a * q for a in self.atoms)

    def __str__(self) -> str:
        return "<" + ",".join(format_fraction(a) for a in self.atoms) + ">"


def atoms_of(gens: Iterable) -> PuiseuxFG:
    """Irredundant generating set of the monoid generated by ``gens``."""
    fracs = sorted({as_fraction(g) for g in gens})
    if not fracs:
        raise ValueError("at least one generator is required")
    if fracs[0] <= 0:
        raise ValueError("generators must be positive")
    den = math.lcm(*(f.denominator for f in fracs))
    ints = [f.numerator * (den // f.denominator) for f in fracs]
    kept = _irredundant(ints)
    # atoms may have dropped the largest denominators
    atoms = tuple(Fraction(x, den) for x in kept)
    den = math.lcm(*(a.denominator for a in atoms))
    model = tuple(int(a * den) for a in atoms)
    scale = math.gcd(*model)
    return PuiseuxFG(atoms, den, model, scale, generate(m // scale for m in model))


def pm_contains(S: PuiseuxFG, x) -> bool:
    x = as_fraction(x)
    if x < 0:
        return False
    y = x * S.den
    if y.denominator != 1 or y.numerator % S.scale:
        return False
    return y.numerator // S.scale in S.core


MONOID_REPORT_SCHEMA = {
    "type": "object",
    "required": ["generators", "atoms", "frobenius", "gaps"],
    "properties": {
        "generators": {"type": "array", "items": {"type": ["integer", "string"]}},
        "atoms": {"type": "array", "items": {"type": ["integer", "string"]}},
        "frobenius": {"type": ["integer", "null"]},
        "gaps": {"type": ["array", "null"], "items": {"type": "integer"}},
    },
}


def _json_number(f: Fraction):
    return f.numerator if f.denominator == 1 else format_fraction(f)


def monoid_report(gens: Iterable) -> dict:
    """JSON-ready summary; Frobenius data only for numerical monoids."""
    gens = [as_fraction(g) for g in gens]
    S = atoms_of(gens)
    numerical = S.den == 1 and S.scale == 1
    return {
        "generators": [_json_number(g) for g in gens],
        "atoms": [_json_number(a) for a in S.atoms],
        "frobenius": S.core.frobenius if numerical else None,
        "gaps": list(S.core.gaps) if numerical else None,
    }
