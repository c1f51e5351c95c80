"""
Non-isomorphic monoids with equal reduced power monoids
=======================================================

Take V with the left-zero product xy = x and adjoin an identity e; call it H.
Its opposite H^op has xy = y.  Both are breakable (xy is x or y), so in both
the product of finite sets containing e is just their union.  The reduced
power monoids coincide while H and H^op differ once |V| >= 2.
"""
from sumsets.powmon import (
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

H = left_zero_unitization(2)
print("H table:    ", H.table)
print("H^op table: ", opposite(H).table)
P = reduced_fpm_table(H)
print("subsets containing e:", P.labels)
print("P(H) table:", P.table)
print("P(H) is the union table:", P == set_union_table(H))
print("breakable:", is_breakable(H), is_breakable(opposite(H)))

for v in (1, 2, 3):
    print(gallery_report(v))

# Two-element monoids: Z/2 and the idempotent {1, 0} are not isomorphic, yet
# both reduced power monoids are the idempotent 2-element monoid.
Z2, E = cyclic_group(2), idempotent_pair()
print("Z/2 ~ E:", tables_isomorphic(Z2, E))
print("P(Z/2) ~ E:", tables_isomorphic(reduced_fpm_table(Z2), E),
      " P(E) ~ E:", tables_isomorphic(reduced_fpm_table(E), E))
