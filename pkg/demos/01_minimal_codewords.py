"""
Minimal codewords of small codes
================================

A nonzero codeword is minimal when no other nonzero codeword has a support
strictly inside its own.  This walk-through counts them for a few familiar
codes.
"""

from mincw import (
    count_minimal,
    decompose_into_minimal,
    direct_sum,
    extended_hamming,
    is_intersecting,
    minimal_codewords,
    parity_code,
    universe_code,
)

# The extended Hamming code has 14 words of weight 4 and one of weight 8.
# The weight-8 word is the sum of two disjoint weight-4 words, so only the
# fourteen are minimal.
h = extended_hamming()
mins = minimal_codewords(h)
print("extended Hamming:", mins.count, "minimal codewords")
for w in list(mins)[:4]:
    print("   ", w)
print("    ...")

# The all-ones word splits into minimal pieces with disjoint supports.
ones = (1 << h.n) - 1
print("11111111 =", " + ".join(str(p) for p in decompose_into_minimal(h, ones)))

# In the even-weight code every weight-2 word is minimal: C(n, 2) of them.
for n in (3, 5, 7):
    print(f"parity code P_{n}: M = {count_minimal(parity_code(n))}")

# Intersecting codes are exactly those where every nonzero word is minimal.
p3 = parity_code(3)
print("P_3 intersecting:", is_intersecting(p3), " M =", count_minimal(p3), "= 2^2 - 1")
print("Hamming intersecting:", is_intersecting(h))

# M adds up over direct sums.
s = direct_sum(parity_code(4), universe_code(3))
print(f"M(P_4 + U_3) = {count_minimal(s)} = 6 + 3")
