"""
Sumsets and k-fold sums
=======================

Sets of naturals containing 0 form a monoid under set addition, with {0}
as identity.  This script walks through the basic operations and shows that
the two kernels (bit-vector shifted-OR, sorted pairwise sums) agree.
"""
import random
import time

from sumsets import NatSet, gcd_of, kfold, parse_natset, reflect, sumset

# Literals are comma-separated ascending integers starting at 0.
A = parse_natset("0,2,3")
print("A      =", A)
print("A + A  =", A + A)
print("3A     =", kfold(A, 3))

# kA only grows with k because 0 is in A.
for k in range(5):
    print(f"{k}A =", kfold(A, k))

# Reflection x -> max A - x mirrors the top end of kA onto the bottom end.
B = NatSet([0, 3, 5])
print("reflect(0,3,5) =", reflect(B), " gcd:", gcd_of(B), "->", gcd_of(reflect(B)))

# Both backends return the same set.
X, Y = NatSet([0, 4, 7, 19]), NatSet([0, 1, 11])
assert sumset(X, Y, "bits") == sumset(X, Y, "sorted")
print("X + Y  =", sumset(X, Y, "sorted"))

# The bit-vector kernel handles large k-fold sums: each doubling step ORs one
# shifted copy of the operand per run of consecutive elements of the other.
rng = random.Random(1)
big = NatSet([0, 10_000] + rng.sample(range(1, 10_000), 48))
t0 = time.perf_counter()
R = kfold(big, 1000)
print(f"kfold(|A|=50, max 10^4, k=1000): {len(R)} elements in {time.perf_counter() - t0:.2f}s")
