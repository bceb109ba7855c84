# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernel for finite-field subspace counting.

Twin of cyclemotive._ffenum_py with identical semantics: materialize every
candidate matrix for a pivot pattern, run the reduced-row-echelon predicate
on each, count the passes.  Matrices are capped at MAX_SIDE on a side; the
caller falls back to the pure-Python kernel beyond that.
"""

MAX_SIDE = 32

cdef int _is_rref(int* mat, int k, int n, int q) nogil:
    cdef int r, i, j, lead, col, last_pivot
    cdef int pivots[32]
    last_pivot = -1
    for r in range(k):
        lead = -1
        for j in range(n):
            if mat[r * n + j] % q:
                lead = j
                break
        if lead < 0:
            return 0
        if mat[r * n + lead] % q != 1:
            return 0
        if lead <= last_pivot:
            return 0
        last_pivot = lead
        pivots[r] = lead
    for r in range(k):
        col = pivots[r]
        for i in range(k):
            if i != r and mat[i * n + col] % q:
                return 0
    return 1


def cell_count(int n, tuple pivots, int q):
    """Number of RREF matrices with the given pivot columns, by exhaustion."""
    cdef int k = len(pivots)
    if n > MAX_SIDE or k > MAX_SIDE:
        raise ValueError("kernel dimension cap exceeded")
    cdef int mat[1024]
    cdef int piv[32]
    cdef int free_r[1024]
    cdef int free_c[1024]
    cdef int digits[1024]
    cdef int nfree = 0
    cdef int r, c, i, in_pivots
    cdef long count = 0

    for r in range(k):
        piv[r] = pivots[r]
    for i in range(k * n):
        mat[i] = 0
    for r in range(k):
        mat[r * n + piv[r]] = 1
    for r in range(k):
        for c in range(n):
            in_pivots = 0
            for i in range(k):
                if piv[i] == c:
                    in_pivots = 1
                    break
            if not in_pivots and c > piv[r]:
                free_r[nfree] = r
                free_c[nfree] = c
                digits[nfree] = 0
                nfree += 1

    with nogil:
        while True:
            for i in range(nfree):
                mat[free_r[i] * n + free_c[i]] = digits[i]
            if _is_rref(mat, k, n, q):
                count += 1
            i = 0
            while i < nfree:
                digits[i] += 1
                if digits[i] < q:
                    break
                digits[i] = 0
                i += 1
            if i == nfree:
                break
    return count
