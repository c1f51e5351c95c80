"""
Scalings, lifts and recovery
============================

A scaling x -> qx between Puiseux monoids lifts to the direct-image map on
finite sets containing 0.  Conversely, from a map phi on such sets we can
read off a -> max phi({0, a}); for a lifted scaling this returns q.
"""
from fractions import Fraction as F

from sumsets import atoms_of, generate, q_make
from sumsets.powmon import (
    find_scaling_iso,
    lift,
    lift_apply,
    lift_is_homomorphism,
    numerical_iso_is_equality,
    recover_scaling,
    scaling,
)

S = atoms_of([F(1, 2), F(1, 3), F(5, 6)])
print("atoms of <1/2, 1/3, 5/6>:", [str(a) for a in S.atoms])

f = scaling(F(3, 2), S)
X, Y = q_make([0, F(1, 2)]), q_make([0, F(1, 3), 1])
print("f(X)      =", lift_apply(f, X))
print("f(X + Y)  =", lift_apply(f, X + Y))
print("homomorphism on (X, Y):", lift_is_homomorphism(f, [(X, Y)]))
print("recovered q:", recover_scaling(lift(f), S.atoms))

print("iso <1/2,1/3> -> <1/4,1/6>:", find_scaling_iso(atoms_of([F(1, 2), F(1, 3)]), atoms_of([F(1, 4), F(1, 6)])))
print("iso <2,3> -> <3,4>:", find_scaling_iso(atoms_of([2, 3]), atoms_of([3, 4])))

# Among numerical monoids the only scaling is the identity, so isomorphic
# means equal.
pairs = [([2, 3], [2, 3]), ([2, 3], [3, 4, 5]), ([3, 5], [3, 5, 7]), ([3, 5], [3, 5, 8])]
for g1, g2 in pairs:
    print(f"<{g1}> vs <{g2}>: (isomorphic, equal) =", numerical_iso_is_equality(generate(g1), generate(g2)))
