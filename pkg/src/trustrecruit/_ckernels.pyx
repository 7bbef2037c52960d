# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled route kernels; same contract as ``_pykernels``."""

import threading

import numpy as np
cimport numpy as cnp

cnp.import_array()


def hop_ball(const cnp.int64_t[::1] indptr, const cnp.int64_t[::1] indices,
             const double[::1] weights, Py_ssize_t src, int max_hops):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef cnp.int32_t[::1] dist = np.full(n, -1, dtype=np.int32)
    cdef cnp.int64_t[::1] queue = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t head = 0, tail = 0, level_end, u, v, e
    cdef int hops = 0
    dist[src] = 0
    queue[tail] = src
    tail += 1
    while head < tail and hops < max_hops:
        hops += 1
        level_end = tail
        while head < level_end:
            u = queue[head]
            head += 1
            for e in range(indptr[u], indptr[u + 1]):
                if weights[e] <= 0.0:
                    continue
                v = indices[e]
                if dist[v] < 0:
                    dist[v] = hops
                    queue[tail] = v
                    tail += 1
    out = {}
    for e in range(1, tail):
        v = queue[e]
        out[v] = dist[v]
    return out


cdef int _cmp_prefix(cnp.int64_t[:, ::1] pred, int k, Py_ssize_t a, Py_ssize_t b,
                     cnp.int64_t *buf_a, cnp.int64_t *buf_b) noexcept nogil:
    # Lexicographic comparison of the layer-k walks ending at a and b.
    cdef int j
    for j in range(k, -1, -1):
        buf_a[j] = a
        buf_b[j] = b
        if j > 0:
            a = pred[j, a]
            b = pred[j, b]
    for j in range(k + 1):
        if buf_a[j] < buf_b[j]:
            return -1
        if buf_a[j] > buf_b[j]:
            return 1
    return 0


cdef class _Workspace:
    # Dense per-graph-size scratch buffers; every call restores the entries it
    # touched, so nothing is reinitialised between calls.
    cdef public Py_ssize_t n
    cdef public int hops
    cdef double[:, ::1] trust
    cdef cnp.int64_t[:, ::1] pred
    cdef cnp.int64_t[:, ::1] layer
    cdef Py_ssize_t[::1] layer_len
    cdef double[::1] best_t
    cdef cnp.int32_t[::1] best_k
    cdef cnp.int64_t[::1] touched

    def __init__(self, Py_ssize_t n, int hops):
        self.n = n
        self.hops = hops
        self.trust = np.full((hops + 1, n), -1.0)
        self.pred = np.full((hops + 1, n), -1, dtype=np.int64)
        self.layer = np.empty((hops + 1, n), dtype=np.int64)
        self.layer_len = np.zeros(hops + 1, dtype=np.intp)
        self.best_t = np.full(n, -1.0)
        self.best_k = np.zeros(n, dtype=np.int32)
        self.touched = np.empty(n, dtype=np.int64)


_local = threading.local()


cdef _Workspace _workspace(Py_ssize_t n, int hops):
    ws = getattr(_local, "ws", None)
    if ws is None or ws.n != n or ws.hops < hops:
        ws = _Workspace(n, hops)
        _local.ws = ws
    return ws


def best_routes(const cnp.int64_t[::1] indptr, const cnp.int64_t[::1] indices,
                const double[::1] weights, Py_ssize_t src, int max_hops):
    if max_hops > 62:
        raise ValueError("max_hops too large")
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef _Workspace ws = _workspace(n, max_hops)
    cdef double[:, ::1] trust = ws.trust
    cdef cnp.int64_t[:, ::1] pred = ws.pred
    cdef cnp.int64_t[:, ::1] layer = ws.layer
    cdef Py_ssize_t[::1] layer_len = ws.layer_len
    cdef double[::1] best_t = ws.best_t
    cdef cnp.int32_t[::1] best_k = ws.best_k
    cdef cnp.int64_t[::1] touched = ws.touched
    cdef cnp.int64_t buf_a[64]
    cdef cnp.int64_t buf_b[64]
    cdef Py_ssize_t nn, nt = 0, i, u, v, e
    cdef int k, last = 0
    cdef double t, w, cur

    out = None
    try:
        trust[0, src] = 1.0
        layer[0, 0] = src
        layer_len[0] = 1
        for k in range(1, max_hops + 1):
            nn = 0
            for i in range(layer_len[k - 1]):
                u = layer[k - 1, i]
                for e in range(indptr[u], indptr[u + 1]):
                    w = weights[e]
                    if w <= 0.0:
                        continue
                    v = indices[e]
                    t = trust[k - 1, u] * w
                    cur = trust[k, v]
                    if cur < 0.0:
                        layer[k, nn] = v
                        nn += 1
                        trust[k, v] = t
                        pred[k, v] = u
                    elif t > cur or (t == cur and _cmp_prefix(pred, k - 1, u, pred[k, v], buf_a, buf_b) < 0):
                        trust[k, v] = t
                        pred[k, v] = u
            layer_len[k] = nn
            last = k
            for i in range(nn):
                v = layer[k, i]
                if v == src:
                    continue
                if best_t[v] < 0.0:
                    touched[nt] = v
                    nt += 1
                    best_t[v] = trust[k, v]
                    best_k[v] = k
                elif trust[k, v] > best_t[v]:
                    best_t[v] = trust[k, v]
                    best_k[v] = k
            if nn == 0:
                break

        out = {}
        for i in range(nt):
            v = touched[i]
            k = best_k[v]
            path = [0] * (k + 1)
            u = v
            while k >= 0:
                path[k] = u
                if k > 0:
                    u = pred[k, u]
                k -= 1
            out[v] = (best_t[v], tuple(path))
    finally:
        for k in range(last + 1):
            for i in range(layer_len[k]):
                v = layer[k, i]
                trust[k, v] = -1.0
                pred[k, v] = -1
            layer_len[k] = 0
        for i in range(nt):
            best_t[touched[i]] = -1.0
    return out
