"""Compiled inner loops.

Every vector is a ``uint64`` bitset.  The search kernels walk generator
matrices ``[I | A]`` where ``A`` is given by its columns, each a k-bit int,
in nondecreasing order.
"""

from __future__ import annotations

import numba as nb
import numpy as np

U1 = np.uint64(1)
U0 = np.uint64(0)

MODE_MAX_M = 0
MODE_INTERSECTING = 1
MODE_MAX_D = 2


@nb.njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - np.uint64(1)
        c += 1
    return c


@nb.njit(cache=True)
def gray_words(rows, k):
    """All 2^k combinations of ``rows`` in Gray-code order, starting at 0."""
    size = 1 << k
    out = np.empty(size, np.uint64)
    w = np.uint64(0)
    out[0] = w
    for i in range(1, size):
        t = 0
        x = i
        while (x & 1) == 0:
            x >>= 1
            t += 1
        w ^= rows[t]
        out[i] = w
    return out


@nb.njit(cache=True)
def weight_order(words, n):
    """Nonzero words sorted by (weight, numeric value)."""
    vals = np.sort(words)
    cnt = np.zeros(n + 2, np.int64)
    m = 0
    for i in range(vals.size):
        if vals[i] != 0:
            cnt[_popcount(vals[i]) + 1] += 1
            m += 1
    for i in range(1, n + 2):
        cnt[i] += cnt[i - 1]
    out = np.empty(m, np.uint64)
    for i in range(vals.size):
        x = vals[i]
        if x != 0:
            wt = _popcount(x)
            out[cnt[wt]] = x
            cnt[wt] += 1
    return out


@nb.njit(cache=True)
def sieve(ordered):
    """Minimal words from a weight-ascending list: keep a word unless an
    already-kept word's support lies inside it."""
    acc = np.empty(ordered.size, np.uint64)
    m = 0
    for i in range(ordered.size):
        x = ordered[i]
        dominated = False
        for j in range(m):
            if acc[j] & ~x == 0:
                dominated = True
                break
        if not dominated:
            acc[m] = x
            m += 1
    return acc[:m].copy()


@nb.njit(cache=True)
def minimal_words(rows, k, n):
    return sieve(weight_order(gray_words(rows, k), n))


@nb.njit(cache=True)
def count_minimal(rows, k, n, floor):
    """Number of minimal codewords, or -1 once it provably cannot exceed ``floor``."""
    words = gray_words(rows, k)
    size = words.size
    cnt = np.zeros(n + 2, np.int64)
    for i in range(1, size):
        cnt[_popcount(words[i]) + 1] += 1
    for i in range(1, n + 2):
        cnt[i] += cnt[i - 1]
    ordered = np.empty(size - 1, np.uint64)
    for i in range(1, size):
        wt = _popcount(words[i])
        ordered[cnt[wt]] = words[i]
        cnt[wt] += 1
    acc = np.empty(size - 1, np.uint64)
    m = 0
    total = size - 1
    for i in range(total):
        if m + (total - i) <= floor:
            return -1
        x = ordered[i]
        dominated = False
        for j in range(m):
            if acc[j] & ~x == 0:
                dominated = True
                break
        if not dominated:
            acc[m] = x
            m += 1
    return m


@nb.njit(cache=True)
def is_intersecting_words(words):
    """True iff no two nonzero words have disjoint supports."""
    size = words.size
    for i in range(size):
        a = words[i]
        if a == 0:
            continue
        for j in range(i, size):
            b = words[j]
            if b != 0 and (a & b) == 0:
                return False
    return True


@nb.njit(cache=True)
def min_weight(words, ceiling):
    """Smallest nonzero weight, stopping early once it drops to ``ceiling``."""
    best = 1 << 30
    for i in range(words.size):
        x = words[i]
        if x != 0:
            wt = _popcount(x)
            if wt < best:
                best = wt
                if best <= ceiling:
                    return best
    return best


@nb.njit(cache=True)
def systematic_rows(cols, k, out):
    r = cols.size
    for i in range(k):
        x = np.uint64(1) << np.uint64(i)
        for j in range(r):
            if (cols[j] >> np.uint64(i)) & np.uint64(1):
                x |= np.uint64(1) << np.uint64(k + j)
        out[i] = x


@nb.njit(cache=True)
def rows_nondecreasing(cols, k):
    """Rows of A, read with column j as bit j, are nondecreasing."""
    r = cols.size
    prev = -1
    for i in range(k):
        v = 0
        for j in range(r):
            if (cols[j] >> np.uint64(i)) & np.uint64(1):
                v |= 1 << j
        if v < prev:
            return False
        prev = v
    return True


@nb.njit(cache=True)
def advance(cols, top):
    """Step to the next nondecreasing tuple with entries < top; False when exhausted."""
    r = cols.size
    j = r - 1
    while j >= 0 and cols[j] == top - 1:
        j -= 1
    if j < 0:
        return False
    cols[j] += np.uint64(1)
    for t in range(j + 1, r):
        cols[t] = cols[j]
    return True


@nb.njit(cache=True)
def scan(n, k, cols, stop_first, max_examined, mode, best, best_cols, row_canonical):
    """Walk candidates from ``cols`` (inclusive) while ``cols[0] < stop_first``.

    ``cols`` is advanced in place and ``best_cols`` receives the first
    candidate (in walk order) strictly improving on ``best``.  Returns
    ``(best, examined, finished)``.  In intersecting mode ``best`` becomes 1
    at the first intersecting candidate and the walk stops there.
    """
    top = np.uint64(1) << np.uint64(k)
    rows = np.empty(k, np.uint64)
    examined = 0
    r = cols.size
    if r == 0:
        # k == n: the single candidate is the universe code
        systematic_rows(cols, k, rows)
        words = gray_words(rows, k)
        if mode == MODE_MAX_M:
            score = count_minimal(rows, k, n, best)
        elif mode == MODE_INTERSECTING:
            score = 1 if is_intersecting_words(words) else 0
        else:
            score = min_weight(words, best)
        if score > best:
            best = score
        return best, 1, True
    while cols[0] < stop_first:
        if examined >= max_examined:
            return best, examined, False
        if (not row_canonical) or rows_nondecreasing(cols, k):
            examined += 1
            systematic_rows(cols, k, rows)
            if mode == MODE_MAX_M:
                score = count_minimal(rows, k, n, best)
            elif mode == MODE_INTERSECTING:
                score = 1 if is_intersecting_words(gray_words(rows, k)) else 0
            else:
                score = min_weight(gray_words(rows, k), best)
            if score > best:
                best = score
                best_cols[:] = cols
                if mode == MODE_INTERSECTING:
                    advance(cols, top)
                    return best, examined, True
        if not advance(cols, top):
            return best, examined, True
    return best, examined, True
