"""
Bounds on M(n, k)
=================

Upper bounds come from four closed forms and a recursion that mixes them;
lower bounds come from constructions, searches and two counting arguments.
"""

from math import comb

from mincw.bounds import (
    abch_lower,
    agrell_upper,
    bounds_table,
    format_table,
    matroid_upper,
    random_coding_lower,
    recursion_upper_table,
    refined_trivial_upper,
)
from mincw.cli import shipped_certificates

# Four closed-form upper bounds at (12, 9).  The Agrell bound is only defined
# for rates with (k - 1)/n > 1/2.
n, k = 12, 9
print(f"({n},{k}): refined trivial {refined_trivial_upper(n, k)}, "
      f"matroid {matroid_upper(n, k)}, agrell {agrell_upper(n, k)}")

# The recursion M(n,k) <= M(n-1,k-1) + C(n-1,k-1) feeds each cell's best
# bound into the next diagonal cell.
u = recursion_upper_table(15, 13)
print(f"U(7,5) = {u[(7, 5)]} = U(6,4) + C(6,4) = {u[(6, 4)]} + {comb(6, 4)}")
print(f"U(8,6) = {u[(8, 6)]}, U(15,12) = {u[(15, 12)]}")

# Two lower bounds that need no search.
print("random coding (8,4):", random_coding_lower(8, 4))
print("ABCH (8,4) with d = 4:", abch_lower(8, 4, 4))

# The full table, with lower bounds from the bundled search certificates,
# closed under M(n+1,k) >= M(n,k) and superadditivity.
search = {}
for cert in shipped_certificates():
    search[(cert.n, cert.k)] = max(search.get((cert.n, cert.k), 0), cert.claimed_m)
cells = bounds_table(15, 13, search_lower=search)
exact = sum(c.exact for c in cells)
print(f"{len(cells)} cells, {exact} settled exactly")
text = format_table(cells)
lines = text.splitlines()
print(lines[0])
for line in lines:
    if line.startswith(("12\t", "# note (8,6)")):
        print(line)
