"""Power-monoid layer: stabilization, scaling lifts and recovery, finite gallery."""
from .finite import (
    FiniteMonoidTable,
    GuardError,
    cyclic_group,
    gallery_report,
    idempotent_pair,
    is_breakable,
    left_zero_unitization,
    opposite,
    reduced_fpm_table,
    set_union_table,
    tables_isomorphic,
)
from .scaling import (
    RecoveryError,
    ScalingHom,
    find_scaling_iso,
    lift,
    lift_apply,
    lift_is_homomorphism,
    numerical_iso_is_equality,
    recover_scaling,
    scaling,
)
from .stabilizer import Lemma22Report, lemma22_minimal_h, stabilization_threshold
