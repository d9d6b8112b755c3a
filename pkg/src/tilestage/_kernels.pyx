# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for the assembly engine's hot loops.

Mirrors tilestage._kernels_py: occupancy tables, batched placement
evaluation (overlap + bond strength), and the sliding-escape BFS used by
the planarity check.
"""

import numpy as np


cdef long long BIAS = 1 << 20


cdef inline long long pack(long long x, long long y) nogil:
    return ((x + BIAS) << 21) | (y + BIAS)


cdef inline Py_ssize_t probe(long long[:] keys, int[:] vals, long long key) nogil:
    cdef unsigned long long h = <unsigned long long> key
    cdef Py_ssize_t mask = keys.shape[0] - 1
    cdef Py_ssize_t i
    h ^= h >> 17
    h *= 0x9E3779B97F4A7C15ULL
    i = <Py_ssize_t> (h & <unsigned long long> mask)
    while True:
        if keys[i] == -1:
            return -1
        if keys[i] == key:
            return vals[i]
        i = (i + 1) & mask


def build_table(coords):
    """Open-addressing occupancy table for int32 (n, 2) coordinates."""
    cdef int[:, :] c = np.ascontiguousarray(coords, dtype=np.int32)
    cdef Py_ssize_t n = c.shape[0]
    cdef Py_ssize_t cap = 4
    while cap < 2 * n + 2:
        cap <<= 1
    keys_arr = np.full(cap, -1, dtype=np.int64)
    vals_arr = np.zeros(cap, dtype=np.int32)
    cdef long long[:] keys = keys_arr
    cdef int[:] vals = vals_arr
    cdef Py_ssize_t mask = cap - 1
    cdef Py_ssize_t i, j
    cdef long long key
    cdef unsigned long long h
    for i in range(n):
        key = pack(c[i, 0], c[i, 1])
        h = <unsigned long long> key
        h ^= h >> 17
        h *= 0x9E3779B97F4A7C15ULL
        j = <Py_ssize_t> (h & <unsigned long long> mask)
        while keys[j] != -1:
            j = (j + 1) & mask
        keys[j] = key
        vals[j] = <int> i
    return (keys_arr, vals_arr)


def eval_offsets(table, xsides, ycoords, ysides, offsets, strengths, tau):
    """For each offset: ok iff disjoint and bond total >= tau; also totals."""
    keys_arr, vals_arr = table
    cdef long long[:] keys = keys_arr
    cdef int[:] vals = vals_arr
    cdef int[:, :] xs = np.ascontiguousarray(xsides, dtype=np.int32)
    cdef int[:, :] yc = np.ascontiguousarray(ycoords, dtype=np.int32)
    cdef int[:, :] ys = np.ascontiguousarray(ysides, dtype=np.int32)
    cdef int[:, :] offs = np.ascontiguousarray(offsets, dtype=np.int32)
    cdef long long[:] stg = np.ascontiguousarray(strengths, dtype=np.int64)
    cdef long long t = tau
    cdef Py_ssize_t n_off = offs.shape[0]
    cdef Py_ssize_t m = yc.shape[0]
    ok_arr = np.zeros(n_off, dtype=np.uint8)
    tot_arr = np.zeros(n_off, dtype=np.int64)
    cdef unsigned char[:] ok = ok_arr
    cdef long long[:] tot = tot_arr
    cdef Py_ssize_t oi, i, j
    cdef int dx, dy, px, py, g
    cdef long long s
    cdef bint bad
    with nogil:
        for oi in range(n_off):
            dx = offs[oi, 0]
            dy = offs[oi, 1]
            s = 0
            bad = False
            for i in range(m):
                px = yc[i, 0] + dx
                py = yc[i, 1] + dy
                if probe(keys, vals, pack(px, py)) >= 0:
                    bad = True
                    break
                j = probe(keys, vals, pack(px, py + 1))
                if j >= 0:
                    g = ys[i, 0]
                    if g != 0 and g == xs[j, 2]:
                        s += stg[g]
                j = probe(keys, vals, pack(px + 1, py))
                if j >= 0:
                    g = ys[i, 1]
                    if g != 0 and g == xs[j, 3]:
                        s += stg[g]
                j = probe(keys, vals, pack(px, py - 1))
                if j >= 0:
                    g = ys[i, 2]
                    if g != 0 and g == xs[j, 0]:
                        s += stg[g]
                j = probe(keys, vals, pack(px - 1, py))
                if j >= 0:
                    g = ys[i, 3]
                    if g != 0 and g == xs[j, 1]:
                        s += stg[g]
            if bad:
                tot[oi] = -1
                continue
            tot[oi] = s
            if s >= t:
                ok[oi] = 1
    return ok_arr, tot_arr


def slide_escape(table, xbbox, ycoords, start_dx, start_dy):
    """Unit-step translation escape BFS (see the pure-Python twin)."""
    keys_arr, vals_arr = table
    cdef long long[:] keys = keys_arr
    cdef int[:] vals = vals_arr
    cdef int[:, :] yc = np.ascontiguousarray(ycoords, dtype=np.int32)
    cdef Py_ssize_t m = yc.shape[0]
    cdef int xx0 = xbbox[0], xy0 = xbbox[1], xx1 = xbbox[2], xy1 = xbbox[3]
    cdef int yx0 = yc[0, 0], yx1 = yc[0, 0], yy0 = yc[0, 1], yy1 = yc[0, 1]
    cdef Py_ssize_t i
    for i in range(m):
        if yc[i, 0] < yx0:
            yx0 = yc[i, 0]
        if yc[i, 0] > yx1:
            yx1 = yc[i, 0]
        if yc[i, 1] < yy0:
            yy0 = yc[i, 1]
        if yc[i, 1] > yy1:
            yy1 = yc[i, 1]
    cdef int sdx = start_dx, sdy = start_dy
    cdef int ux0 = min(xx0, yx0 + sdx), uy0 = min(xy0, yy0 + sdy)
    cdef int ux1 = max(xx1, yx1 + sdx), uy1 = max(xy1, yy1 + sdy)
    cdef int mm = max(ux1 - ux0 + 1, uy1 - uy0 + 1) + 1
    cdef int wx0 = ux0 - mm, wy0 = uy0 - mm, wx1 = ux1 + mm, wy1 = uy1 + mm
    cdef int dx_lo = wx0 - yx0, dx_hi = wx1 - yx1
    cdef int dy_lo = wy0 - yy0, dy_hi = wy1 - yy1
    if dx_hi < dx_lo or dy_hi < dy_lo:
        return False
    cdef int w = dx_hi - dx_lo + 1, h = dy_hi - dy_lo + 1
    seen_arr = np.zeros(w * h, dtype=np.uint8)
    qx_arr = np.zeros(w * h, dtype=np.int32)
    qy_arr = np.zeros(w * h, dtype=np.int32)
    cdef unsigned char[:] seen = seen_arr
    cdef int[:] qx = qx_arr
    cdef int[:] qy = qy_arr
    cdef Py_ssize_t head = 0, tail = 0
    cdef int dx, dy, nx, ny, k
    cdef int DDX[4]
    cdef int DDY[4]
    DDX[0] = 0; DDX[1] = 1; DDX[2] = 0; DDX[3] = -1
    DDY[0] = 1; DDY[1] = 0; DDY[2] = -1; DDY[3] = 0
    cdef bint found = False
    cdef bint bad

    with nogil:
        if (yx1 + sdx < xx0 - 1 or yx0 + sdx > xx1 + 1
                or yy1 + sdy < xy0 - 1 or yy0 + sdy > xy1 + 1):
            found = True
        else:
            seen[(sdx - dx_lo) * h + (sdy - dy_lo)] = 1
            qx[tail] = sdx
            qy[tail] = sdy
            tail += 1
            while head < tail and not found:
                dx = qx[head]
                dy = qy[head]
                head += 1
                for k in range(4):
                    nx = dx + DDX[k]
                    ny = dy + DDY[k]
                    if nx < dx_lo or nx > dx_hi or ny < dy_lo or ny > dy_hi:
                        continue
                    if seen[(nx - dx_lo) * h + (ny - dy_lo)]:
                        continue
                    seen[(nx - dx_lo) * h + (ny - dy_lo)] = 1
                    bad = False
                    for i in range(m):
                        if probe(keys, vals, pack(yc[i, 0] + nx, yc[i, 1] + ny)) >= 0:
                            bad = True
                            break
                    if bad:
                        continue
                    if (yx1 + nx < xx0 - 1 or yx0 + nx > xx1 + 1
                            or yy1 + ny < xy0 - 1 or yy0 + ny > xy1 + 1):
                        found = True
                        break
                    qx[tail] = nx
                    qy[tail] = ny
                    tail += 1
    return bool(found)
