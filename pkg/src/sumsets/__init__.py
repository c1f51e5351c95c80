"""Exact sumset arithmetic over the naturals and non-negative rationals."""
from .natset import (
    Interval,
    NatSet,
    ParseError,
    divide_exact,
    format_natset,
    gcd_of,
    kfold,
    parse_natset,
    reflect,
    sumset,
)
from .qset import QSet, format_qset, parse_qset, q_kfold, q_make, q_sumset
from .numsgp import NumericalMonoid, PuiseuxFG, atoms_of, generate, generated_by_set, pm_contains
from .nathanson import (
    NathansonStructure,
    StructureError,
    bound_scan,
    canonical_structure,
    enumerate_sets,
    verify_decomposition,
)

__version__ = "0.1.0"
