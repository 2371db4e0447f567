"""Pure-Python numerical kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Both perform the same floating-point operations in the same order, so the
two backends agree bit for bit.  Inputs are float64 / int64 numpy arrays;
they are converted to lists once because indexing lists is much cheaper than
indexing arrays from Python.

DP tables use the one-based padding of the textbook recurrences: row/column
0 holds the boundary conditions and cell ``[i][j]`` refers to the prefixes
``X[:i]`` and ``Y[:j]``.
"""

import numpy as np

INF = float("inf")


def hungarian(C):
    """Shortest augmenting path Hungarian method, O(n^3).

    Returns ``sigma`` as a list with row ``i`` assigned to column ``sigma[i]``.
    """
    n = C.shape[0]
    if n == 0:
        return []
    c = C.tolist()
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    p = [0] * (n + 1)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            row = c[i0 - 1]
            ui0 = u[i0]
            delta = INF
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = row[j - 1] - ui0 - v[j]
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


# -- edit distance with per-element deletion costs ---------------------------

def edit_full(D, dx, dy):
    n, m = D.shape
    d = D.tolist()
    dx = dx.tolist()
    dy = dy.tolist()
    C = [[0.0] * (m + 1) for _ in range(n + 1)]
    for i in range(n):
        C[i + 1][0] = C[i][0] + dx[i]
    for j in range(m):
        C[0][j + 1] = C[0][j] + dy[j]
    for i in range(n):
        prev = C[i]
        curr = C[i + 1]
        di = d[i]
        dxi = dx[i]
        for j in range(m):
            a = prev[j] + di[j]
            b = curr[j] + dy[j]
            c = prev[j + 1] + dxi
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = a
    return C[n][m]


def edit_light(D, dx, dy):
    n, m = D.shape
    d = D.tolist()
    dx = dx.tolist()
    dy = dy.tolist()
    prev = [0.0] * (m + 1)
    for j in range(m):
        prev[j + 1] = prev[j] + dy[j]
    curr = [0.0] * (m + 1)
    for i in range(n):
        curr[0] = prev[0] + dx[i]
        di = d[i]
        dxi = dx[i]
        for j in range(m):
            a = prev[j] + di[j]
            b = curr[j] + dy[j]
            c = prev[j + 1] + dxi
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = a
        prev, curr = curr, prev
    return prev[m]


# -- fixed-penalty edit distance ---------------------------------------------

def fp_edit_full(D, rho):
    n, m = D.shape
    d = D.tolist()
    C = [[0.0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        C[i][0] = i * rho
    for j in range(m + 1):
        C[0][j] = j * rho
    for i in range(n):
        prev = C[i]
        curr = C[i + 1]
        di = d[i]
        for j in range(m):
            a = prev[j] + di[j]
            b = prev[j + 1] + rho
            c = curr[j] + rho
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = a
    return C[n][m]


def fp_edit_light(D, rho):
    n, m = D.shape
    d = D.tolist()
    prev = [j * rho for j in range(m + 1)]
    curr = [0.0] * (m + 1)
    for i in range(n):
        curr[0] = (i + 1) * rho
        di = d[i]
        for j in range(m):
            a = prev[j] + di[j]
            b = prev[j + 1] + rho
            c = curr[j] + rho
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = a
        prev, curr = curr, prev
    return prev[m]


# -- dynamic time warping ----------------------------------------------------

def dtw_full(D):
    n, m = D.shape
    d = D.tolist()
    C = [[INF] * (m + 1) for _ in range(n + 1)]
    C[0][0] = 0.0
    for i in range(n):
        prev = C[i]
        curr = C[i + 1]
        di = d[i]
        for j in range(m):
            a = prev[j]
            b = curr[j]
            c = prev[j + 1]
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = di[j] + a
    return C[n][m]


def dtw_light(D):
    n, m = D.shape
    d = D.tolist()
    prev = [INF] * (m + 1)
    prev[0] = 0.0
    curr = [INF] * (m + 1)
    for i in range(n):
        curr[0] = INF
        di = d[i]
        for j in range(m):
            a = prev[j]
            b = curr[j]
            c = prev[j + 1]
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = di[j] + a
        prev, curr = curr, prev
    return prev[m]


def fp_dtw_full(D, rho):
    n, m = D.shape
    d = D.tolist()
    C = [[INF] * (m + 1) for _ in range(n + 1)]
    C[0][0] = 0.0
    for i in range(n):
        prev = C[i]
        curr = C[i + 1]
        di = d[i]
        for j in range(m):
            a = prev[j]
            b = curr[j] + rho
            c = prev[j + 1] + rho
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = di[j] + a
    return C[n][m]


def fp_dtw_light(D, rho):
    n, m = D.shape
    d = D.tolist()
    prev = [INF] * (m + 1)
    prev[0] = 0.0
    curr = [INF] * (m + 1)
    for i in range(n):
        curr[0] = INF
        di = d[i]
        for j in range(m):
            a = prev[j]
            b = curr[j] + rho
            c = prev[j + 1] + rho
            if b < a:
                a = b
            if c < a:
                a = c
            curr[j + 1] = di[j] + a
        prev, curr = curr, prev
    return prev[m]


# -- path distances over integer-coded labels --------------------------------

def lcs_full(a, b):
    """LCS distance as fixed-penalty edit with 0/2 ground cost and penalty 1."""
    a = a.tolist()
    b = b.tolist()
    n, m = len(a), len(b)
    C = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        C[i][0] = i
    for j in range(m + 1):
        C[0][j] = j
    for i in range(n):
        prev = C[i]
        curr = C[i + 1]
        ai = a[i]
        for j in range(m):
            s = prev[j] + (0 if ai == b[j] else 2)
            t = prev[j + 1] + 1
            w = curr[j] + 1
            if t < s:
                s = t
            if w < s:
                s = w
            curr[j + 1] = s
    return C[n][m]


def lcs_light(a, b):
    a = a.tolist()
    b = b.tolist()
    n, m = len(a), len(b)
    prev = list(range(m + 1))
    curr = [0] * (m + 1)
    for i in range(n):
        curr[0] = i + 1
        ai = a[i]
        for j in range(m):
            s = prev[j] + (0 if ai == b[j] else 2)
            t = prev[j + 1] + 1
            w = curr[j] + 1
            if t < s:
                s = t
            if w < s:
                s = w
            curr[j + 1] = s
        prev, curr = curr, prev
    return prev[m]


def lsp_full(a, b):
    a = a.tolist()
    b = b.tolist()
    n, m = len(a), len(b)
    Q = [[0] * (m + 1) for _ in range(n + 1)]
    best = 0
    for i in range(n):
        prev = Q[i]
        curr = Q[i + 1]
        ai = a[i]
        for j in range(m):
            if ai == b[j]:
                q = prev[j] + 1
                curr[j + 1] = q
                if q > best:
                    best = q
            else:
                curr[j + 1] = 0
    return n + m - 2 * best


def lsp_light(a, b):
    a = a.tolist()
    b = b.tolist()
    n, m = len(a), len(b)
    prev = [0] * (m + 1)
    curr = [0] * (m + 1)
    best = 0
    for i in range(n):
        ai = a[i]
        for j in range(m):
            if ai == b[j]:
                q = prev[j] + 1
                curr[j + 1] = q
                if q > best:
                    best = q
            else:
                curr[j + 1] = 0
        prev, curr = curr, prev
    return n + m - 2 * best


def _path_matrix(fn, codes, offsets_x, offsets_y):
    nx = len(offsets_x) - 1
    ny = len(offsets_y) - 1
    out = np.empty((nx, ny), dtype=np.float64)
    for i in range(nx):
        a = codes[offsets_x[i]:offsets_x[i + 1]]
        for j in range(ny):
            b = codes[offsets_y[j]:offsets_y[j + 1]]
            out[i, j] = fn(a, b)
    return out


def lcs_matrix(codes, offsets_x, offsets_y):
    """All-pairs LCS distances between two packed path lists.

    ``codes`` holds every path back to back; path ``i`` of the left list is
    ``codes[offsets_x[i]:offsets_x[i+1]]`` and likewise for the right list.
    """
    return _path_matrix(lcs_light, codes, offsets_x, offsets_y)


def lsp_matrix(codes, offsets_x, offsets_y):
    return _path_matrix(lsp_light, codes, offsets_x, offsets_y)
