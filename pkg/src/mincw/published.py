"""Previously published values of g(n) and M(n,k), kept for comparison.

``TABLE_M`` maps ``(n, k)`` to ``(lower, upper, label)`` as printed; exact
entries have ``lower == upper`` and ``label is None``.  Labels are
``"t"`` (trivial), ``"m"`` (matroid) and ``"a"`` (Agrell).
"""

from __future__ import annotations

G_VALUES = {3: 2, 4: 2, 5: 2, 6: 3, 7: 3, 8: 3, 9: 4, 10: 4, 11: 4, 12: 4, 13: 5, 14: 5, 15: 6}

_ROWS = {
    3: "1 3 3",
    4: "1 3 6 4",
    5: "1 3 6 10 5",
    6: "1 3 7 11-14t 15 6",
    7: "1 3 7 14 17-30t 21 7",
    8: "1 3 7 14 22-30t 25-55m 28 8",
    9: "1 3 7 15 26-30t 33-62t 36-83m 36 9",
    10: "1 3 7 15 30 42-62t 48-126t 48-119m 45 10",
    11: "1 3 7 15 30 52-62t 66-126t 69-254t 63-164m 55 11",
    12: "1 3 7 15 30 54-62t 90-126t 103-254t 95-384a 82-219m 66 12",
    13: "1 3 7 15 31 58-62t 94-126t 151-254t 149-510t 130-532a 102-285m 78 13",
    14: "1 3 7 15 31 62 106-126t 159-254t 245-510t 217-896a 175-796a 126-363m 91",
    15: "1 3 7 15 31 63 108-126t 171-254t 245-510t 385-1022t 308-1228a 221-1253a 155-454m",
}


def _parse(entry: str) -> tuple[int, int, str | None]:
    if "-" not in entry:
        return int(entry), int(entry), None
    lo, hi = entry.split("-")
    return int(lo), int(hi[:-1]), hi[-1]


TABLE_M: dict[tuple[int, int], tuple[int, int, str | None]] = {
    (n, k): _parse(e) for n, row in _ROWS.items() for k, e in enumerate(row.split(), start=1)
}
