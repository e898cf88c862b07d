# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular Faddeev-LeVerrier kernel.

Same contract as ``_kernels_py.fl_charpoly_mod``.  Requires p < 2**28 so
that 128 products (< 2**56 each) fit in an unsigned 64-bit accumulator.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t

cnp.import_array()

cdef enum:
    FLUSH = 128


cdef void _mulmod(const int64_t[:, ::1] a, const int64_t[:, ::1] b,
                  int64_t[:, ::1] out, uint64_t p) noexcept nogil:
    cdef Py_ssize_t n = a.shape[0], i, j, l, cnt
    cdef uint64_t acc, ail
    # out = a @ b mod p, i-l-j loop order with a per-row accumulator
    for i in range(n):
        for j in range(n):
            out[i, j] = 0
        cnt = 0
        for l in range(n):
            ail = <uint64_t>a[i, l]
            if ail == 0:
                continue
            for j in range(n):
                out[i, j] = <int64_t>(<uint64_t>out[i, j] + ail * <uint64_t>b[l, j])
            cnt += 1
            if cnt == FLUSH:
                for j in range(n):
                    out[i, j] = <int64_t>(<uint64_t>out[i, j] % p)
                cnt = 0
        for j in range(n):
            out[i, j] = <int64_t>(<uint64_t>out[i, j] % p)


cdef int64_t _inv(int64_t k, int64_t p) noexcept nogil:
    cdef int64_t t = 0, newt = 1, r = p, newr = k % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def fl_charpoly_mod(re, im, long long p):
    cdef Py_ssize_t n = re.shape[0], k, i, j
    cdef uint64_t up = <uint64_t>p
    cdef bint cplx = im is not None
    a_re_np = np.ascontiguousarray(np.asarray(re, dtype=np.int64) % p)
    cdef int64_t[:, ::1] a_re = a_re_np
    cdef int64_t[:, ::1] a_im
    if cplx:
        a_im = np.ascontiguousarray(np.asarray(im, dtype=np.int64) % p)
    else:
        a_im = np.zeros((1, 1), dtype=np.int64)
    c_re_np = np.zeros(n + 1, dtype=np.int64)
    c_im_np = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] c_re = c_re_np
    cdef int64_t[::1] c_im = c_im_np
    cdef int64_t[:, ::1] m_re = np.eye(n, dtype=np.int64)
    cdef int64_t[:, ::1] m_im = np.zeros((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] t1 = np.zeros((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] t2 = np.zeros((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] t3 = np.zeros((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] t4 = np.zeros((n, n), dtype=np.int64)
    cdef int64_t tr_re, tr_im, inv_k, ck_re, ck_im
    cdef bint ok = True
    c_re[0] = 1
    with nogil:
        for k in range(1, n + 1):
            if cplx:
                _mulmod(a_re, m_re, t1, up)
                _mulmod(a_im, m_im, t2, up)
                _mulmod(a_re, m_im, t3, up)
                _mulmod(a_im, m_re, t4, up)
                for i in range(n):
                    for j in range(n):
                        m_re[i, j] = (t1[i, j] - t2[i, j] + p) % p
                        m_im[i, j] = (t3[i, j] + t4[i, j]) % p
            else:
                _mulmod(a_re, m_re, t1, up)
                for i in range(n):
                    for j in range(n):
                        m_re[i, j] = t1[i, j]
            inv_k = _inv(k, p)
            tr_re = 0
            tr_im = 0
            for i in range(n):
                tr_re = (tr_re + m_re[i, i]) % p
                tr_im = (tr_im + m_im[i, i]) % p
            ck_re = <int64_t>((<uint64_t>((p - tr_re) % p) * <uint64_t>inv_k) % up)
            ck_im = <int64_t>((<uint64_t>((p - tr_im) % p) * <uint64_t>inv_k) % up)
            c_re[k] = ck_re
            c_im[k] = ck_im
            for i in range(n):
                m_re[i, i] = (m_re[i, i] + ck_re) % p
                m_im[i, i] = (m_im[i, i] + ck_im) % p
        for i in range(n):
            for j in range(n):
                if m_re[i, j] != 0 or m_im[i, j] != 0:
                    ok = False
    return c_re_np, c_im_np, bool(ok)
