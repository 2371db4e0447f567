# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels; a line-for-line port of ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport INFINITY
from libc.stdlib cimport malloc, free

cnp.import_array()


def hungarian(double[:, ::1] C):
    cdef Py_ssize_t n = C.shape[0]
    if n == 0:
        return []
    cdef double[::1] u = np.zeros(n + 1)
    cdef double[::1] v = np.zeros(n + 1)
    cdef double[::1] minv = np.empty(n + 1)
    cdef Py_ssize_t[::1] p = np.zeros(n + 1, dtype=np.intp)
    cdef Py_ssize_t[::1] way = np.zeros(n + 1, dtype=np.intp)
    cdef unsigned char[::1] used = np.zeros(n + 1, dtype=np.uint8)
    cdef Py_ssize_t i, j, j0, j1, i0
    cdef double delta, cur, ui0
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        for j in range(n + 1):
            minv[j] = INFINITY
            used[j] = 0
        while True:
            used[j0] = 1
            i0 = p[j0]
            ui0 = u[i0]
            delta = INFINITY
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = C[i0 - 1, j - 1] - ui0 - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break
    sigma = [0] * n
    for j in range(1, n + 1):
        sigma[p[j] - 1] = j - 1
    return sigma


def edit_full(double[:, ::1] D, double[::1] dx, double[::1] dy):
    cdef Py_ssize_t n = D.shape[0], m = D.shape[1], i, j
    cdef double[:, ::1] C = np.zeros((n + 1, m + 1))
    cdef double a, b, c
    for i in range(n):
        C[i + 1, 0] = C[i, 0] + dx[i]
    for j in range(m):
        C[0, j + 1] = C[0, j] + dy[j]
    for i in range(n):
        for j in range(m):
            a = C[i, j] + D[i, j]
            b = C[i + 1, j] + dy[j]
            c = C[i, j + 1] + dx[i]
            if b < a:
                a = b
            if c < a:
                a = c
            C[i + 1, j + 1] = a
    return C[n, m]


def edit_light(double[:, ::1] D, double[::1] dx, double[::1] dy):
    cdef Py_ssize_t n = D.shape[0], m = D.shape[1], i, j
    cdef double[::1] prev = np.zeros(m + 1)
    cdef double[::1] curr = np.zeros(m + 1)
    cdef double[::1] tmp
    cdef double a, b, c
    for j in range(m):
        prev[j + 1] = prev[j] + dy[j]
    for i in range(n):
        curr[0] = prev[0] + dx[i]
        for j in range(m):
            a = prev[j] + D[i, j]
            b = curr[j] + dy[j]
            c = prev[j + 1] + dx[i]
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = a
        tmp = prev
        prev = curr
        curr = tmp
    return prev[m]


def fp_edit_full(double[:, ::1] D, double rho):
    cdef Py_ssize_t n = D.shape[0], m = D.shape[1], i, j
    cdef double[:, ::1] C = np.zeros((n + 1, m + 1))
    cdef double a, b, c
    for i in range(n + 1):
        C[i, 0] = i * rho
    for j in range(m + 1):
        C[0, j] = j * rho
    for i in range(n):
        for j in range(m):
            a = C[i, j] + D[i, j]
            b = C[i, j + 1] + rho
            c = C[i + 1, j] + rho
            if b < a:
                a = b
            if c < a:
                a = c
            C[i + 1, j + 1] = a
    return C[n, m]


def fp_edit_light(double[:, ::1] D, double rho):
    cdef Py_ssize_t n = D.shape[0], m = D.shape[1], i, j
    cdef double[::1] prev = np.empty(m + 1)
    cdef double[::1] curr = np.zeros(m + 1)
    cdef double[::1] tmp
    cdef double a, b, c
    for j in range(m + 1):
        prev[j] = j * rho
    for i in range(n):
        curr[0] = (i + 1) * rho
        for j in range(m):
            a = prev[j] + D[i, j]
            b = prev[j + 1] + rho
            c = curr[j] + rho
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = a
        tmp = prev
        prev = curr
        curr = tmp
    return prev[m]


def dtw_full(double[:, ::1] D):
    cdef Py_ssize_t n = D.shape[0], m = D.shape[1], i, j
    cdef double[:, ::1] C = np.full((n + 1, m + 1), np.inf)
    cdef double a, b, c
    C[0, 0] = 0.0
    for i in range(n):
        for j in range(m):
            a = C[i, j]
            b = C[i + 1, j]
            c = C[i, j + 1]
            if b < a:
                a = b
            if c < a:
                a = c
            C[i + 1, j + 1] = D[i, j] + a
    return C[n, m]


def dtw_light(double[:, ::1] D):
    cdef Py_ssize_t n = D.shape[0], m = D.shape[1], i, j
    cdef double[::1] prev = np.full(m + 1, np.inf)
    cdef double[::1] curr = np.full(m + 1, np.inf)
    cdef double[::1] tmp
    cdef double a, b, c
    prev[0] = 0.0
    for i in range(n):
        curr[0] = INFINITY
        for j in range(m):
            a = prev[j]
            b = curr[j]
            c = prev[j + 1]
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = D[i, j] + a
        tmp = prev
        prev = curr
        curr = tmp
    return prev[m]


def fp_dtw_full(double[:, ::1] D, double rho):
    cdef Py_ssize_t n = D.shape[0], m = D.shape[1], i, j
    cdef double[:, ::1] C = np.full((n + 1, m + 1), np.inf)
    cdef double a, b, c
    C[0, 0] = 0.0
    for i in range(n):
        for j in range(m):
            a = C[i, j]
            b = C[i + 1, j] + rho
            c = C[i, j + 1] + rho
            if b < a:
                a = b
            if c < a:
                a = c
            C[i + 1, j + 1] = D[i, j] + a
    return C[n, m]


def fp_dtw_light(double[:, ::1] D, double rho):
    cdef Py_ssize_t n = D.shape[0], m = D.shape[1], i, j
    cdef double[::1] prev = np.full(m + 1, np.inf)
    cdef double[::1] curr = np.full(m + 1, np.inf)
    cdef double[::1] tmp
    cdef double a, b, c
    prev[0] = 0.0
    for i in range(n):
        curr[0] = INFINITY
        for j in range(m):
            a = prev[j]
            b = curr[j] + rho
            c = prev[j + 1] + rho
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = D[i, j] + a
        tmp = prev
        prev = curr
        curr = tmp
    return prev[m]


cdef long _lcs(const cnp.int64_t* a, Py_ssize_t n, const cnp.int64_t* b, Py_ssize_t m,
               long* prev, long* curr) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef long s, t, w
    cdef long* tmp
    for j in range(m + 1):
        prev[j] = j
    for i in range(n):
        curr[0] = i + 1
        for j in range(m):
            s = prev[j] + (0 if a[i] == b[j] else 2)
            t = prev[j + 1] + 1
            w = curr[j] + 1
            if t < s:
                s = t
            if w < s:
                s = w
            curr[j + 1] = s
        tmp = prev
        prev = curr
        curr = tmp
    return prev[m]


cdef long _lsp(const cnp.int64_t* a, Py_ssize_t n, const cnp.int64_t* b, Py_ssize_t m,
               long* prev, long* curr) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef long q, best = 0
    cdef long* tmp
    for j in range(m + 1):
        prev[j] = 0
        curr[j] = 0
    for i in range(n):
        for j in range(m):
            if a[i] == b[j]:
                q = prev[j] + 1
                curr[j + 1] = q
                if q > best:
                    best = q
            else:
                curr[j + 1] = 0
        tmp = prev
        prev = curr
        curr = tmp
    return n + m - 2 * best


def lcs_full(const cnp.int64_t[::1] a, const cnp.int64_t[::1] b):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0], i, j
    cdef long[:, ::1] C = np.zeros((n + 1, m + 1), dtype=np.int_)
    cdef long s, t, w
    for i in range(n + 1):
        C[i, 0] = i
    for j in range(m + 1):
        C[0, j] = j
    for i in range(n):
        for j in range(m):
            s = C[i, j] + (0 if a[i] == b[j] else 2)
            t = C[i, j + 1] + 1
            w = C[i + 1, j] + 1
            if t < s:
                s = t
            if w < s:
                s = w
            C[i + 1, j + 1] = s
    return C[n, m]


def lcs_light(const cnp.int64_t[::1] a, const cnp.int64_t[::1] b):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0]
    cdef long[::1] buf = np.zeros(2 * (m + 1), dtype=np.int_)
    if n == 0 or m == 0:
        return n + m
    return _lcs(&a[0], n, &b[0], m, &buf[0], &buf[m + 1])


def lsp_full(const cnp.int64_t[::1] a, const cnp.int64_t[::1] b):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0], i, j
    cdef long[:, ::1] Q = np.zeros((n + 1, m + 1), dtype=np.int_)
    cdef long best = 0
    for i in range(n):
        for j in range(m):
            if a[i] == b[j]:
                Q[i + 1, j + 1] = Q[i, j] + 1
                if Q[i + 1, j + 1] > best:
                    best = Q[i + 1, j + 1]
            else:
                Q[i + 1, j + 1] = 0
    return n + m - 2 * best


def lsp_light(const cnp.int64_t[::1] a, const cnp.int64_t[::1] b):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0]
    cdef long[::1] buf = np.zeros(2 * (m + 1), dtype=np.int_)
    if n == 0 or m == 0:
        return n + m
    return _lsp(&a[0], n, &b[0], m, &buf[0], &buf[m + 1])


cdef _path_matrix(int which, const cnp.int64_t[::1] codes,
                  const cnp.int64_t[::1] offsets_x, const cnp.int64_t[::1] offsets_y):
    cdef Py_ssize_t nx = offsets_x.shape[0] - 1, ny = offsets_y.shape[0] - 1
    cdef Py_ssize_t i, j, la, lb, longest = 0
    out_arr = np.empty((nx, ny), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    for j in range(ny):
        lb = offsets_y[j + 1] - offsets_y[j]
        if lb > longest:
            longest = lb
    cdef long* buf = <long*> malloc(2 * (longest + 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    try:
        with nogil:
            for i in range(nx):
                la = offsets_x[i + 1] - offsets_x[i]
                for j in range(ny):
                    lb = offsets_y[j + 1] - offsets_y[j]
                    if la == 0 or lb == 0:
                        out[i, j] = la + lb
                    elif which == 0:
                        out[i, j] = _lcs(&codes[offsets_x[i]], la, &codes[offsets_y[j]], lb,
                                         buf, buf + lb + 1)
                    else:
                        out[i, j] = _lsp(&codes[offsets_x[i]], la, &codes[offsets_y[j]], lb,
                                         buf, buf + lb + 1)
    finally:
        free(buf)
    return out_arr


def lcs_matrix(codes, offsets_x, offsets_y):
    return _path_matrix(0, codes, offsets_x, offsets_y)


def lsp_matrix(codes, offsets_x, offsets_y):
    return _path_matrix(1, codes, offsets_x, offsets_y)
