"""Scaling homomorphisms between f.g. Puiseux monoids and their lifts.

A scaling ``x -> q x`` induces the direct-image map ``X -> qX`` on finite
sets containing 0.  :func:`recover_scaling` goes the other way: given any
callable on sets, it reads off ``a -> max phi({0, a})`` and checks that it
is a consistent, additive scaling.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from ..numsgp import NumericalMonoid, PuiseuxFG, atoms_of, pm_contains
from ..qset import QSet, as_fraction, q_make

__all__ = [
    "RecoveryError",
    "ScalingHom",
    "find_scaling_iso",
    "lift",
    "lift_apply",
    "lift_is_homomorphism",
    "numerical_iso_is_equality",
    "recover_scaling",
    "scaling",
]


@dataclass(frozen=True)
class ScalingHom:
    q: Fraction
    source: PuiseuxFG
    target: PuiseuxFG

    def __post_init__(self):
        object.__setattr__(self, "q", as_fraction(self.q))
        if self.q <= 0:
            raise ValueError("scaling factor must be positive")
        for x in self.source.atoms:
            if not pm_contains(self.target, self.q * x):
                raise ValueError(f"{self.q} * {x} is not in the target monoid")

    def __call__(self, x) -> Fraction:
        return self.q * as_fraction(x)

    def then(self, other: ScalingHom) -> ScalingHom:
        """``other ∘ self``."""
        return ScalingHom(self.q * other.q, self.source, other.target)


def scaling(q, source: PuiseuxFG) -> ScalingHom:
    """The isomorphism ``source -> q * source``."""
    q = as_fraction(q)
    return ScalingHom(q, source, source.scaled(q))


def lift_apply(f: ScalingHom, X: QSet) -> QSet:
    bad = [x for x in X.values() if not pm_contains(f.source, x)]
    if bad:
        raise ValueError(f"{bad[0]} is not in the source monoid {f.source}")
    return q_make(f.q * x for x in X.values())


def lift(f: ScalingHom) -> Callable[[QSet], QSet]:
    return lambda X: lift_apply(f, X)


def lift_is_homomorphism(f: ScalingHom, samples: Iterable[tuple[QSet, QSet]]) -> bool:
    return all(lift_apply(f, X + Y) == lift_apply(f, X) + lift_apply(f, Y) for X, Y in samples)


class RecoveryError(ValueError):
    def __init__(self, reason: str, probe, detail: str):
        super().__init__(f"{reason} at probe {probe}: {detail}")
        self.reason = reason
        self.probe = probe


def recover_scaling(phi: Callable[[QSet], QSet], probe_atoms: Iterable) -> Fraction:
    """Recover ``q`` from ``phi`` via ``a -> max phi({0, a})``.

    Each probe image must be a 2-element set ``{0, b}``, the ratio ``b/a``
    must not depend on the probe, and ``phi({0, a1 + a2})`` must equal
    ``{0, b1 + b2}`` for every pair of probes.  Violations raise
    RecoveryError with ``reason`` one of ``"shape"``, ``"ratio"``,
    ``"additivity"``.
    """
    probes = [as_fraction(a) for a in probe_atoms]
    if not probes:
        raise ValueError("at least one probe is required")
    images: dict[Fraction, Fraction] = {}
    for a in probes:
        if a <= 0:
            raise ValueError(f"probe {a} must be positive")
        images[a] = _two_element_max(phi, a)
    ratio = None
    for a, b in images.items():
        r = b / a
        if ratio is None:
            ratio = r
        elif r != ratio:
            raise RecoveryError("ratio", a, f"{b}/{a} = {r} differs from {ratio}")
    for a1, a2 in itertools.combinations_with_replacement(images, 2):
        want = q_make([0, images[a1] + images[a2]])
        got = phi(q_make([0, a1 + a2]))
        if got != want:
            raise RecoveryError("additivity", (a1, a2), f"image {got} != {want}")
    return ratio


def _two_element_max(phi, a: Fraction) -> Fraction:
    img = phi(q_make([0, a]))
    if len(img) != 2:
        raise RecoveryError("shape", a, f"image {img} is not a 2-element set")
    return img.max


def find_scaling_iso(S1: PuiseuxFG, S2: PuiseuxFG) -> Fraction | None:
    """``q`` with ``q * S1 == S2``, or None.

    A scaling is increasing, so it sends the least atom to the least atom;
    that ratio is the only candidate and is checked on atoms both ways.
    """
    q = S2.atoms[0] / S1.atoms[0]
    if all(pm_contains(S2, q * x) for x in S1.atoms) and all(
        pm_contains(S1, y / q) for y in S2.atoms
    ):
        return q
    return None


def numerical_iso_is_equality(S1: NumericalMonoid, S2: NumericalMonoid) -> tuple[bool, bool]:
    iso = find_scaling_iso(atoms_of(S1.generators), atoms_of(S2.generators)) is not None
    return iso, S1 == S2
