"""Pure-Python exact kernels: integer Smith normal form and GF(2) rank.

These are the reference implementations.  The compiled twins in ``_fast``
must agree with them bit for bit; the test suite checks that on random
input.  Python integers make the Smith reduction exact no matter how big
the intermediate entries grow.
"""

from __future__ import annotations


def gf2_rank(rows):
    """Rank over GF(2) of the matrix whose rows are the given bitmasks.

    Each row is a nonnegative int; bit j set means entry 1 in column j.
    """
    pivots = {}
    rank = 0
    for row in rows:
        while row:
            b = row.bit_length() - 1
            p = pivots.get(b)
            if p is None:
                pivots[b] = row
                rank += 1
                break
            row ^= p
    return rank


def snf_diagonal(mat):
    """Invariant factors d1 | d2 | ... | dr of an integer matrix.

    Returns the full positive diagonal of the Smith normal form as a list,
    ones included, so the rank is its length.  Pivoting picks a nonzero
    entry of minimal absolute value, which keeps the intermediate entries
    small in practice.
    """
    A = [list(row) for row in mat]
    nr = len(A)
    nc = len(A[0]) if nr else 0
    for row in A:
        if len(row) != nc:
            raise ValueError("ragged matrix")
    out = []
    t = 0
    while True:
        # Find a pivot of minimal |value| in the trailing block.
        bi = bj = -1
        bv = 0
        for i in range(t, nr):
            Ai = A[i]
            for j in range(t, nc):
                v = Ai[j]
                if v and (bv == 0 or abs(v) < bv):
                    bv = abs(v)
                    bi, bj = i, j
                    if bv == 1:
                        break
            if bv == 1:
                break
        if bi < 0:
            break
        if bi != t:
            A[t], A[bi] = A[bi], A[t]
        if bj != t:
            for row in A:
                row[t], row[bj] = row[bj], row[t]
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]

        p = A[t][t]
        dirty = False
        for i in range(t + 1, nr):
            v = A[i][t]
            if v:
                q = v // p
                if q:
                    Ai = A[i]
                    At = A[t]
                    for j in range(t, nc):
                        Ai[j] -= q * At[j]
                if A[i][t]:
                    dirty = True
        for j in range(t + 1, nc):
            v = A[t][j]
            if v:
                q = v // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    dirty = True
        if dirty:
            # Residues smaller than |p| remain; repeat with a better pivot.
            continue

        # Row and column are clear.  Enforce divisibility of the rest.
        offender = None
        for i in range(t + 1, nr):
            Ai = A[i]
            for j in range(t + 1, nc):
                if Ai[j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            At = A[t]
            Ao = A[offender]
            for j in range(t, nc):
                At[j] += Ao[j]
            continue
        out.append(p)
        t += 1
    return out
