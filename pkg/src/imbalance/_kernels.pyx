# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; same contract as ``_kernels_py``."""

from cpython.mem cimport PyMem_Calloc, PyMem_Free
from libc.stdint cimport int64_t, uint64_t

from imbalance._kernels_py import CapExceeded


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

cdef enum:
    MAXN = 63


def extension_stats(int n, pred_masks, labels, long long cap):
    if n > MAXN:
        raise ValueError(f"compiled kernel supports at most {MAXN} elements")
    cdef int size = n * (n - 1) // 2 + 1
    inv_hist = [0] * size
    maj_hist = [0] * size
    if n == 0:
        inv_hist[0] = maj_hist[0] = 1
        return 1, inv_hist, maj_hist

    cdef uint64_t pred[MAXN]
    cdef int lab[MAXN]
    cdef uint64_t placed[MAXN + 1]
    cdef uint64_t labm[MAXN + 1]
    cdef int inv_acc[MAXN + 1]
    cdef int maj_acc[MAXN + 1]
    cdef int last[MAXN + 1]
    cdef int cand[MAXN + 1]
    cdef int i
    for i in range(n):
        pred[i] = <uint64_t>pred_masks[i]
        lab[i] = labels[i]

    cdef int64_t *ih = NULL
    cdef int64_t *mh = NULL
    ih = <int64_t *>PyMem_Calloc(size, sizeof(int64_t))
    mh = <int64_t *>PyMem_Calloc(size, sizeof(int64_t))
    if ih == NULL or mh == NULL:
        PyMem_Free(ih)
        PyMem_Free(mh)
        raise MemoryError()

    cdef uint64_t full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>-1
    cdef long long count = 0
    cdef int depth = 0, t, a, d1
    cdef uint64_t pm
    cdef bint over = False
    placed[0] = 0
    labm[0] = 0
    inv_acc[0] = 0
    maj_acc[0] = 0
    last[0] = 0
    cand[0] = 0
    with nogil:
        while depth >= 0:
            if placed[depth] == full:
                count += 1
                if count > cap:
                    over = True
                    break
                ih[inv_acc[depth]] += 1
                mh[maj_acc[depth]] += 1
                depth -= 1
                continue
            t = cand[depth]
            pm = placed[depth]
            while t < n and (((pm >> t) & 1) or (pred[t] & pm) != pred[t]):
                t += 1
            if t == n:
                depth -= 1
                continue
            cand[depth] = t + 1
            a = lab[t]
            d1 = depth + 1
            placed[d1] = pm | (<uint64_t>1 << t)
            labm[d1] = labm[depth] | (<uint64_t>1 << a)
            inv_acc[d1] = inv_acc[depth] + __builtin_popcountll(labm[depth] >> a)
            if depth > 0 and last[depth] > a:
                maj_acc[d1] = maj_acc[depth] + depth
            else:
                maj_acc[d1] = maj_acc[depth]
            last[d1] = a
            cand[d1] = 0
            depth = d1
    try:
        if over:
            raise CapExceeded(f"more than {cap} linear extensions")
        for i in range(size):
            inv_hist[i] = ih[i]
            maj_hist[i] = mh[i]
    finally:
        PyMem_Free(ih)
        PyMem_Free(mh)
    return count, inv_hist, maj_hist
