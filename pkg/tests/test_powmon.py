import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_kfold
from sumsets import NatSet, QSet, atoms_of, canonical_structure, generate, pm_contains, q_kfold, q_make
from sumsets.nathanson import StructureError
from sumsets.powmon import (
    FiniteMonoidTable,
    GuardError,
    RecoveryError,
    ScalingHom,
    cyclic_group,
    find_scaling_iso,
    gallery_report,
    idempotent_pair,
    is_breakable,
    left_zero_unitization,
    lemma22_minimal_h,
    lift,
    lift_apply,
    lift_is_homomorphism,
    numerical_iso_is_equality,
    opposite,
    recover_scaling,
    reduced_fpm_table,
    scaling,
    set_union_table,
    stabilization_threshold,
    tables_isomorphic,
)
from sumsets.powmon.finite import GALLERY_SCHEMA
from sumsets.powmon.stabilizer import LEMMA22_SCHEMA


# --- stabilization -------------------------------------------------------


def identity_holds(A, k):
    """(k+1)A == kA + {0, max A}, on plain sets."""
    kA = naive_kfold(A, k)
    return naive_kfold(A, k + 1) == kA | {x + max(A) for x in kA}


def test_lemma22_examples():
    assert [identity_holds({0, 2, 3}, k) for k in range(4)] == [False, False, True, True]
    assert lemma22_minimal_h(NatSet([0, 1])).h_min == 0
    rep = lemma22_minimal_h(NatSet([0, 2, 3]))
    assert (rep.h_min, rep.threshold, rep.window_checked) == (2, 2, 50)
    rep = lemma22_minimal_h(QSet(2, NatSet([0, 2, 3])))
    assert set(rep.input) == {0, 1, F(3, 2)}
    assert rep.h_min == 2


def test_lemma22_degenerate_and_errors():
    rep = lemma22_minimal_h(NatSet())
    assert (rep.h_min, rep.threshold) == (0, 0)
    with pytest.raises(ValueError):
        lemma22_minimal_h(NatSet([0, 1]), window=0)
    with pytest.raises(TypeError):
        lemma22_minimal_h({0, 1})


def test_lemma22_threshold_formula():
    s = canonical_structure(NatSet([0, 3, 5]))
    assert stabilization_threshold(NatSet([0, 3, 5])) == max(s.k_star, 1 + -(-(8 + 4) // 5)) == 4
    assert stabilization_threshold(NatSet([0, 6, 10])) == 4


def test_lemma22_json():
    jsonschema = pytest.importorskip("jsonschema")
    payload = lemma22_minimal_h(q_make([0, 1, F(3, 2)])).to_json()
    assert payload == {"set": [0, 1, "3/2"], "h_min": 2, "threshold": 2, "window": 50}
    jsonschema.validate(payload, LEMMA22_SCHEMA)


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(1, 9), min_size=1, max_size=5), st.integers(1, 4), st.integers(1, 3))
def test_lemma22_certificate(nonzero, d, g):
    A = q_make([F(g * x, d) for x in nonzero | {0}])
    rep = lemma22_minimal_h(A, window=10)
    top = q_make([0, A.max])
    for k in range(rep.h_min, rep.h_min + 11):
        assert q_kfold(A, k + 1) == q_kfold(A, k) + top
    if rep.h_min:
        assert q_kfold(A, rep.h_min) != q_kfold(A, rep.h_min - 1) + top
    assert rep.h_min <= rep.threshold
    assert rep.h_min == lemma22_minimal_h(NatSet(nonzero | {0}), window=10).h_min


def test_structure_error_is_runtime_error():
    assert issubclass(StructureError, RuntimeError)


# --- lifts and recovery --------------------------------------------------


def test_scaling_hom_validation():
    S = atoms_of([3, 5])
    with pytest.raises(ValueError):
        ScalingHom(F(1, 2), S, S)
    with pytest.raises(ValueError):
        scaling(0, S)
    f = scaling(2, S)
    assert f.target.atoms == (6, 10)
    assert f(F(5, 2)) == 5


def test_lift_apply_examples():
    S = atoms_of([2, 3])
    X = q_make([0, 2, 3, 7])
    assert lift_apply(scaling(1, S), X) == X
    assert lift_apply(scaling(2, atoms_of([3, 5])), q_make([0, 3, 5])) == q_make([0, 6, 10])
    f = scaling(F(1, 2), S)
    assert f.target.atoms == (1, F(3, 2))
    assert lift_apply(f, q_make([0, 2, 3])) == q_make([0, 1, F(3, 2)])
    with pytest.raises(ValueError, match="not in the source"):
        lift_apply(f, q_make([0, 1]))


def test_lift_is_homomorphism_examples():
    f = scaling(2, atoms_of([3, 5]))
    assert lift_is_homomorphism(f, [(q_make([0]), q_make([0]))])
    X, Y = q_make([0, 3]), q_make([0, 5])
    assert set(lift_apply(f, X + Y)) == {0, 6, 10, 16}
    assert lift_is_homomorphism(f, [(X, Y)])
    g = scaling(F(1, 3), atoms_of([3]))
    X, Y = q_make([0, 3]), q_make([0, 6])
    assert set(lift_apply(g, X) + lift_apply(g, Y)) == {0, 1, 2, 3}
    assert lift_is_homomorphism(g, [(X, Y)])


def test_lift_functoriality_and_identity():
    S = atoms_of([F(1, 2), F(1, 3)])
    f = scaling(F(3, 2), S)
    g = scaling(F(5, 7), f.target)
    X = q_make([0, F(1, 2), F(5, 6), 2])
    assert lift_apply(f.then(g), X) == lift_apply(g, lift_apply(f, X))
    assert lift_apply(scaling(1, S), X) == X


def test_recover_examples():
    S = atoms_of([F(1, 2), F(1, 3)])
    for q in (F(1), F(3, 2), F(2, 9), F(7)):
        assert recover_scaling(lift(scaling(q, S)), S.atoms + (F(5, 6), F(4))) == q
    with pytest.raises(RecoveryError) as info:
        recover_scaling(lambda X: q_make([0]), [1])
    assert info.value.reason == "shape"


def test_recover_detects_ratio_and_additivity_violations():
    def squash(X):  # {0, a} -> {0, a^2}: two-element but not linear
        return q_make(x * x for x in X)

    with pytest.raises(RecoveryError) as info:
        recover_scaling(squash, [1, 2])
    assert info.value.reason == "ratio"

    def sneaky(X):  # linear on the probes 1 and 3, wrong on their sums
        return q_make(2 * x if x in (1, 3) else x for x in X)

    with pytest.raises(RecoveryError) as info:
        recover_scaling(sneaky, [1, 3])
    assert info.value.reason == "additivity"


def test_find_scaling_iso_examples():
    assert find_scaling_iso(atoms_of([2, 3]), atoms_of([2, 3])) == 1
    assert find_scaling_iso(atoms_of([F(1, 2), F(1, 3)]), atoms_of([F(1, 4), F(1, 6)])) == F(1, 2)
    # the only candidate, 3/2, sends 2 to 3 but 3 to 9/2, outside <3, 4>
    assert pm_contains(atoms_of([3, 4]), F(3, 2) * 2)
    assert not pm_contains(atoms_of([3, 4]), F(3, 2) * 3)
    assert find_scaling_iso(atoms_of([2, 3]), atoms_of([3, 4])) is None


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.fractions(min_value=F(1, 6), max_value=5, max_denominator=6), min_size=1, max_size=4),
    st.fractions(min_value=F(1, 9), max_value=9, max_denominator=9).filter(lambda q: q > 0),
)
def test_find_scaling_iso_round_trip_and_symmetry(gens, q):
    S1 = atoms_of(gens)
    S2 = S1.scaled(q)
    assert find_scaling_iso(S1, S2) == q
    assert find_scaling_iso(S2, S1) == 1 / q


def test_find_scaling_iso_none_is_symmetric():
    S1, S2 = atoms_of([2, 3]), atoms_of([3, 4])
    assert find_scaling_iso(S1, S2) is None and find_scaling_iso(S2, S1) is None


def test_numerical_iso_examples():
    assert numerical_iso_is_equality(generate([2, 3]), generate([2, 3])) == (True, True)
    assert numerical_iso_is_equality(generate([2, 3]), generate([3, 4, 5])) == (False, False)
    assert numerical_iso_is_equality(generate([3, 5]), generate([3, 5])) == (True, True)
    assert numerical_iso_is_equality(generate([2, 3]), generate([2, 3, 4])) == (True, True)


# --- finite monoids ------------------------------------------------------


def test_table_validation():
    with pytest.raises(ValueError, match="identity"):
        FiniteMonoidTable.from_rows([[1, 0], [0, 1]])
    with pytest.raises(ValueError, match="associative"):
        # x*y = 2 for non-identity pairs except 2*2 = 1; (1*1)*2 != 1*(1*2)
        FiniteMonoidTable.from_rows([[0, 1, 2], [1, 2, 2], [2, 2, 1]])


def test_left_zero_unitization_examples():
    H1 = left_zero_unitization(1)
    assert H1.size == 2 and H1.is_commutative()
    H = left_zero_unitization(2)
    u, w = 1, 2
    assert H(u, w) == u and H(w, u) == w
    assert H.identity == 0
    t = H.table
    assert all(
        t[t[x][y]][z] == t[x][t[y][z]] for x, y, z in itertools.product(range(3), repeat=3)
    )


def test_opposite_examples():
    H = left_zero_unitization(2)
    assert opposite(opposite(H)) == H
    Z3 = cyclic_group(3)
    assert opposite(Z3) == Z3
    assert opposite(H)(1, 2) == 2


def test_reduced_fpm_examples():
    for H in (cyclic_group(2), idempotent_pair()):
        P = reduced_fpm_table(H)
        assert P.size == 2
        assert all(P(x, x) == x for x in range(2))
        assert tables_isomorphic(P, idempotent_pair())
    H = left_zero_unitization(2)
    P = reduced_fpm_table(H)
    assert P.size == 4 and P == set_union_table(H)
    for v in (1, 2, 3):
        H = left_zero_unitization(v)
        assert reduced_fpm_table(H).to_json() == reduced_fpm_table(opposite(H)).to_json()


def test_two_element_monoids_are_not_isomorphic():
    assert not tables_isomorphic(cyclic_group(2), idempotent_pair())


def test_tables_isomorphic_examples():
    H2 = left_zero_unitization(2)
    assert not tables_isomorphic(H2, opposite(H2))
    assert tables_isomorphic(H2, H2)
    assert tables_isomorphic(left_zero_unitization(1), opposite(left_zero_unitization(1)))
    assert not tables_isomorphic(cyclic_group(2), cyclic_group(3))


def test_is_breakable_examples():
    for v in range(1, 5):
        assert is_breakable(left_zero_unitization(v))
        assert is_breakable(opposite(left_zero_unitization(v)))
    assert not is_breakable(cyclic_group(2))
    assert is_breakable(FiniteMonoidTable.from_rows([[0]]))


def test_guards():
    with pytest.raises(GuardError):
        tables_isomorphic(cyclic_group(9), cyclic_group(9))
    with pytest.raises(GuardError):
        reduced_fpm_table(cyclic_group(17))


def test_breakable_fpm_is_union_for_random_breakable_monoids():
    # chains (min over a total order, identity on top) are breakable
    for n in range(1, 6):
        rows = [[y if x == 0 else x if y == 0 else min(x, y) for y in range(n)] for x in range(n)]
        M = FiniteMonoidTable.from_rows(rows)
        assert is_breakable(M)
        assert reduced_fpm_table(M) == set_union_table(M)


def test_gallery_report():
    jsonschema = pytest.importorskip("jsonschema")
    rep = gallery_report(2)
    assert rep == {"v": 2, "fpm_equal": True, "isomorphic": False}
    jsonschema.validate(rep, GALLERY_SCHEMA)
    assert gallery_report(1)["isomorphic"] is True
