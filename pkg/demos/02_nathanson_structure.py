"""
Eventual structure of kA
========================

For A with gcd 1, kA is eventually the union of a fixed low part B, a long
interval [b, ka - c], and a mirrored high part ka - C.  Here b - 1 is the
Frobenius number of the numerical monoid <A>, and c - 1 that of
<max A - A>.
"""
from sumsets import NatSet, canonical_structure, generated_by_set, kfold, reflect
from sumsets.nathanson import bound_scan

A = NatSet([0, 3, 5])
s = canonical_structure(A)
print(s)
print("gaps of <A>          :", generated_by_set(A).gaps)
print("gaps of <max A - A>  :", generated_by_set(reflect(A)).gaps)

for k in range(5):
    rebuilt = s.reconstruct(k)
    actual = kfold(A, k)
    print(f"k={k}: kA = {str(actual):40s} rebuilt = {rebuilt}  match={rebuilt == actual}")

print(f"k_star = {s.k_star}; Granville-Walker bound a-n+1 = {s.bound_gw}; a^2 n = {s.bound_a2n}")

# How tight is a-n+1 on small sets?
report = bound_scan(8)
slack = [r["gw_bound"] - r["k_star"] for r in report.rows]
print(f"{len(report.rows)} sets with max A <= 8: anomalies={len(report.anomalies)}, "
      f"failures={len(report.failures)}, min slack={min(slack)}")
for row in report.rows:
    if row["gw_bound"] == row["k_star"] and row["k_star"] > 1:
        print("  tight:", row["set"], "k_star =", row["k_star"])
        break
