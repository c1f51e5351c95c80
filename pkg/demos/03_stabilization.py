"""
Stabilization: (k+1)A = kA + {0, max A}
=======================================

For any finite A ⊆ Q≥0 containing 0, the next k-fold sum is eventually
obtained by adding {0, max A} alone.  The least such k is compared with the
threshold max{k_star, ⌈1 + (b + c)/a⌉} coming from the structure of kA.
"""
from fractions import Fraction as F

from sumsets import NatSet, q_kfold, q_make
from sumsets.powmon import lemma22_minimal_h

for A in (NatSet([0, 1]), NatSet([0, 2, 3]), NatSet([0, 3, 5]), NatSet([0, 1, 9, 10])):
    rep = lemma22_minimal_h(A)
    print(f"A={str(A):12s} h_min={rep.h_min} threshold={rep.threshold}")

# Rational sets reduce to integer ones through a common denominator.
Q = q_make([0, 1, F(3, 2)])
rep = lemma22_minimal_h(Q)
print("A = {0, 1, 3/2}:", rep.to_json())
top = q_make([0, Q.max])
for k in range(4):
    print(f"  k={k}: (k+1)A == kA + {{0, 3/2}} ?", q_kfold(Q, k + 1) == q_kfold(Q, k) + top)

# Multiplying A by a constant does not move h_min.
for g in (1, 2, 7):
    print(f"  h_min({g}*{{0,3,5}}) =", lemma22_minimal_h(NatSet([0, 3 * g, 5 * g])).h_min)
