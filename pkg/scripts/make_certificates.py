"""Regenerate the bundled certificates under src/mincw/data/certificates.

Cells with k(n-k) <= 20, plus (10,7) and (11,8), are searched exhaustively
with the plain column-sorted walk.  Remaining cells of the 3 <= n <= 15,
k <= 13 table are searched exhaustively with row canonicalisation when the
walk is small enough, otherwise heuristically with seed 0 and 200 restarts.

    python scripts/make_certificates.py [--walk-limit 4e8] [--restarts 200] [--heuristic-only]
"""

import argparse
import time
from math import comb
from pathlib import Path

from mincw.published import TABLE_M
from mincw.search import SearchBudget, exhaustive_max_M, heuristic_max_M, write_certificate

OUT = Path(__file__).resolve().parents[1] / "src" / "mincw" / "data" / "certificates"
PLAIN_EXTRA = {(10, 7), (11, 8)}


def walk_size(n, k):
    r = n - k
    return comb((1 << k) + r - 1, r)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--walk-limit", type=float, default=4e8)
    ap.add_argument("--restarts", type=int, default=200)
    ap.add_argument("--heuristic-only", action="store_true")
    args = ap.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)
    for (n, k), (lo, hi, _) in sorted(TABLE_M.items()):
        if k == 1 or k == n:
            continue
        t0 = time.time()
        if k * (n - k) <= 20 or (n, k) in PLAIN_EXTRA:
            how = "exhaustive"
        elif walk_size(n, k) <= args.walk_limit:
            how = "exhaustive/row-canonical"
        else:
            how = "heuristic"
        if how != "heuristic" and args.heuristic_only:
            continue
        if how == "heuristic":
            cert = heuristic_max_M(n, k, SearchBudget(seed=0, restarts=args.restarts))
        elif how == "exhaustive":
            cert = exhaustive_max_M(n, k)
        else:
            cert = exhaustive_max_M(n, k, row_canonical=True)
        write_certificate(cert, OUT / f"m_{n:02d}_{k:02d}.cert")
        flag = "" if cert.claimed_m == lo else ("  ABOVE published" if cert.claimed_m > lo else "  below published")
        print(f"({n},{k}) {how}: M={cert.claimed_m} published {lo}-{hi} [{time.time() - t0:.1f}s]{flag}",
              flush=True)


if __name__ == "__main__":
    main()
