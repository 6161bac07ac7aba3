"""Compiled depth-first traversal of the semigroup tree.

Each node is a row of decomposition counts ``dec[x] = #{(i, x-i): i <= x-i,
both in S}``; ``x > 0`` is a minimal generator iff ``dec[x] == 1``.  Removing
a generator ``a`` from the parent row ``p`` gives the child row by
``child[y] = p[y] - 1`` wherever ``p[y - a] > 0``.
Rows have ``3 * max_genus + 3`` entries, enough to see every generator of a
node whose genus is below ``max_genus`` (generators are at most
``frobenius + multiplicity <= 3 * genus``).
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _gap_words(row, frob):
    lo = np.uint64(0)
    hi = np.uint64(0)
    for x in range(1, frob + 1):
        if row[x] == 0:
            if x < 64:
                lo |= np.uint64(1) << np.uint64(x)
            else:
                hi |= np.uint64(1) << np.uint64(x - 64)
    return lo, hi


@njit(cache=True, nogil=True)
def _record(row, frob, genus, ew, counts, max_ew, wit_lo, wit_hi, wit_n):
    counts[genus] += 1
    if ew > max_ew[genus]:
        max_ew[genus] = ew
        wit_n[genus] = 0
    if ew == max_ew[genus]:
        k = wit_n[genus]
        if k < wit_lo.shape[1]:
            lo, hi = _gap_words(row, frob)
            wit_lo[genus, k] = lo
            wit_hi[genus, k] = hi
        wit_n[genus] = k + 1


@njit(cache=True, nogil=True)
def subtree_stats(root, root_frob, root_genus, root_mult, root_ew,
                  max_genus, ew_bound, counts, max_ew, wit_lo, wit_hi, wit_n):
    """Accumulate counts and max-ew witnesses for the subtree under ``root``.

    ``ew_bound < 0`` disables pruning.  Returns the number of nodes visited.
    ``wit_n[g]`` may exceed the witness capacity; the caller must retry with
    larger buffers in that case.
    """
    size = root.shape[0]
    depth = max_genus - root_genus + 1
    rows = np.zeros((depth, size), dtype=np.int32)
    frob = np.zeros(depth, dtype=np.int64)
    mult = np.zeros(depth, dtype=np.int64)
    ew = np.zeros(depth, dtype=np.int64)
    nxt = np.zeros(depth, dtype=np.int64)
    below = np.zeros(depth, dtype=np.int64)

    rows[0, :] = root
    frob[0] = root_frob
    mult[0] = root_mult
    ew[0] = root_ew
    nxt[0] = root_mult
    below[0] = 0
    _record(rows[0], root_frob, root_genus, root_ew, counts, max_ew, wit_lo, wit_hi, wit_n)
    visited = 1
    if root_genus >= max_genus:
        return visited

    level = 0
    while level >= 0:
        f = frob[level]
        top = f + mult[level]
        if top < mult[level]:
            top = mult[level]
        if top > size - 1:
            top = size - 1
        x = nxt[level]
        child = -1
        child_ew = 0
        while x <= top:
            if rows[level, x] == 1:
                if x > f:
                    child_ew = ew[level] + below[level]
                    below[level] += 1
                    if ew_bound < 0 or child_ew <= ew_bound:
                        child = x
                        x += 1
                        break
                else:
                    below[level] += 1
            x += 1
        nxt[level] = x
        if child < 0:
            level -= 1
            continue

        parent = rows[level]
        lv = level + 1
        out = rows[lv]
        out[:] = parent
        for y in range(child, size):
            if parent[y - child] > 0:
                out[y] -= 1
        frob[lv] = child
        mult[lv] = mult[level] + 1 if child == mult[level] else mult[level]
        ew[lv] = child_ew
        genus = root_genus + lv
        _record(out, child, genus, child_ew, counts, max_ew, wit_lo, wit_hi, wit_n)
        visited += 1
        if genus < max_genus:
            nxt[lv] = mult[lv]
            below[lv] = 0
            level = lv
    return visited
