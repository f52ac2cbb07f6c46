"""
Searching for codes with many minimal codewords
===============================================

Every code is equivalent to one with generator [I | A], and the order of
A's columns does not matter, so the exhaustive search walks sorted column
tuples.  Larger cells fall back on seeded hill climbing.
"""

import time

from mincw import minimal_codewords
from mincw.search import SearchBudget, exhaustive_max_M, heuristic_max_M, verify_certificate

for n, k in [(6, 4), (7, 4), (9, 5)]:
    t0 = time.perf_counter()
    cert = exhaustive_max_M(n, k)
    print(f"M({n},{k}) = {cert.claimed_m}  [{cert.candidates_examined} generators, "
          f"{time.perf_counter() - t0:.2f} s]")

# Requiring A's rows to be sorted as well shrinks the space without losing
# any code.
plain = exhaustive_max_M(9, 4)
canon = exhaustive_max_M(9, 4, row_canonical=True)
print(f"(9,4): {plain.candidates_examined} vs {canon.candidates_examined} candidates, "
      f"both give {canon.claimed_m}")

# The witness is stored as a certificate that anyone can re-check.
cert = exhaustive_max_M(7, 4)
print(cert.to_text(), end="")
print("verified:", verify_certificate(cert))
print("weights of its minimal words:", sorted(w.weight for w in minimal_codewords(cert.code())))

# Hill climbing, reproducible from the seed.
for seed in range(3):
    h = heuristic_max_M(12, 6, SearchBudget(seed=seed, restarts=20))
    print(f"(12,6) seed {seed}: M >= {h.claimed_m}")
