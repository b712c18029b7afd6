# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: bit-packed GF(2) elimination and 64-bit integer SNF.

The Smith reduction works in C int64 arithmetic and refuses to continue
once any entry reaches 2**31 in magnitude (quotient times entry then still
fits in int64, so the guard is checked only after updates).  On overflow it
raises OverflowError and the caller reruns the pure-Python kernel, which
uses arbitrary precision.
"""

from libc.stdlib cimport free, malloc
from libc.stdint cimport int64_t, uint64_t

cdef int64_t BOUND = (<int64_t>1) << 31


cdef inline Py_ssize_t _top_bit(uint64_t* row, Py_ssize_t nwords) noexcept:
    cdef Py_ssize_t w = nwords - 1
    cdef uint64_t v
    cdef Py_ssize_t b
    while w >= 0:
        v = row[w]
        if v:
            b = 0
            while v > 1:
                v >>= 1
                b += 1
            return w * 64 + b
        w -= 1
    return -1


def gf2_rank(rows, Py_ssize_t nbits):
    """Rank over GF(2); rows are int bitmasks using at most nbits bits."""
    rows = list(rows)
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 0
    if nbits <= 0:
        for r in rows:
            if r:
                raise ValueError("nbits too small for the given rows")
        return 0
    cdef Py_ssize_t nwords = (nbits + 63) >> 6
    cdef uint64_t* data = <uint64_t*> malloc(n * nwords * sizeof(uint64_t))
    cdef Py_ssize_t* piv = <Py_ssize_t*> malloc(nbits * sizeof(Py_ssize_t))
    if data == NULL or piv == NULL:
        if data != NULL:
            free(data)
        if piv != NULL:
            free(piv)
        raise MemoryError()
    cdef Py_ssize_t i, w, b, j, rank
    cdef uint64_t* ri
    cdef uint64_t* rj
    # Bits at positions >= nbits would index past piv, so reject them exactly.
    cdef uint64_t topmask = <uint64_t>0xFFFFFFFFFFFFFFFF
    if nbits & 63:
        topmask = ((<uint64_t>1) << (nbits & 63)) - 1
    try:
        for i in range(n):
            r = rows[i]
            if r < 0:
                raise ValueError("negative bitmask")
            for w in range(nwords):
                data[i * nwords + w] = <uint64_t>(r & <object>0xFFFFFFFFFFFFFFFF)
                r >>= 64
            if r or (data[i * nwords + nwords - 1] & ~topmask):
                raise ValueError("nbits too small for the given rows")
        for b in range(nbits):
            piv[b] = -1
        rank = 0
        for i in range(n):
            ri = data + i * nwords
            while True:
                b = _top_bit(ri, nwords)
                if b < 0:
                    break
                j = piv[b]
                if j < 0:
                    piv[b] = i
                    rank += 1
                    break
                rj = data + j * nwords
                for w in range(nwords):
                    ri[w] ^= rj[w]
        return rank
    finally:
        free(data)
        free(piv)


def snf_diagonal(mat):
    """Invariant factors of an integer matrix, ones included.

    Same contract as the pure kernel; raises OverflowError when an entry
    leaves the guarded 64-bit range.
    """
    cdef Py_ssize_t nr = len(mat)
    cdef Py_ssize_t nc = 0
    if nr:
        nc = len(mat[0])
    cdef Py_ssize_t i, j, t, bi, bj
    cdef int64_t v, bv, p, q, r, tmp
    if nr == 0 or nc == 0:
        for row in mat:
            if len(row) != nc:
                raise ValueError("ragged matrix")
        return []
    cdef int64_t* A = <int64_t*> malloc(nr * nc * sizeof(int64_t))
    if A == NULL:
        raise MemoryError()
    out = []
    try:
        for i in range(nr):
            row = mat[i]
            if len(row) != nc:
                raise ValueError("ragged matrix")
            for j in range(nc):
                v = row[j]  # OverflowError from Python if it cannot fit int64
                if v >= BOUND or v <= -BOUND:
                    raise OverflowError("entry magnitude beyond guarded range")
                A[i * nc + j] = v
        t = 0
        while True:
            bi = -1
            bj = -1
            bv = 0
            for i in range(t, nr):
                for j in range(t, nc):
                    v = A[i * nc + j]
                    if v < 0:
                        v = -v
                    if v and (bv == 0 or v < bv):
                        bv = v
                        bi = i
                        bj = j
                        if bv == 1:
                            break
                if bv == 1:
                    break
            if bi < 0:
                break
            if bi != t:
                for j in range(nc):
                    tmp = A[t * nc + j]
                    A[t * nc + j] = A[bi * nc + j]
                    A[bi * nc + j] = tmp
            if bj != t:
                for i in range(nr):
                    tmp = A[i * nc + t]
                    A[i * nc + t] = A[i * nc + bj]
                    A[i * nc + bj] = tmp
            if A[t * nc + t] < 0:
                for j in range(t, nc):
                    A[t * nc + j] = -A[t * nc + j]

            p = A[t * nc + t]
            dirty = False
            for i in range(t + 1, nr):
                v = A[i * nc + t]
                if v:
                    q = v // p  # C truncation under cdivision
                    r = v - q * p
                    if r < 0:  # p > 0 here; make the division a floor
                        q -= 1
                    if q:
                        for j in range(t, nc):
                            v = A[i * nc + j] - q * A[t * nc + j]
                            if v >= BOUND or v <= -BOUND:
                                raise OverflowError("entry magnitude beyond guarded range")
                            A[i * nc + j] = v
                    if A[i * nc + t]:
                        dirty = True
            for j in range(t + 1, nc):
                v = A[t * nc + j]
                if v:
                    q = v // p
                    r = v - q * p
                    if r < 0:
                        q -= 1
                    if q:
                        for i in range(nr):
                            v = A[i * nc + j] - q * A[i * nc + t]
                            if v >= BOUND or v <= -BOUND:
                                raise OverflowError("entry magnitude beyond guarded range")
                            A[i * nc + j] = v
                    if A[t * nc + j]:
                        dirty = True
            if dirty:
                continue

            offender = -1
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if A[i * nc + j] % p:
                        offender = i
                        break
                if offender >= 0:
                    break
            if offender >= 0:
                for j in range(t, nc):
                    v = A[t * nc + j] + A[offender * nc + j]
                    if v >= BOUND or v <= -BOUND:
                        raise OverflowError("entry magnitude beyond guarded range")
                    A[t * nc + j] = v
                continue
            out.append(p)
            t += 1
        return out
    finally:
        free(A)
