# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled set kernels.

Edge vertex sets live in a flat array of 64-bit words; Python ints cross the
boundary via ``int.to_bytes``/``int.from_bytes`` so arbitrarily many vertices
and edges are supported.
"""

import sys

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy, memset

if sys.byteorder != "little":
    raise ImportError("compiled kernels assume a little-endian host")


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline Py_ssize_t _words(Py_ssize_t bits) noexcept:
    return (bits + 63) // 64 if bits > 0 else 1


cdef int _load(object x, uint64_t* out, Py_ssize_t nw) except -1:
    # values wider than the table are truncated to it
    cdef Py_ssize_t nbytes = nw * 8
    cdef bytes raw
    if x.bit_length() > nbytes * 8:
        x = x & ((1 << (nbytes * 8)) - 1)
    raw = x.to_bytes(nbytes, "little")
    memcpy(out, <char*>raw, nbytes)
    return 0


cdef object _store(uint64_t* w, Py_ssize_t nw):
    return int.from_bytes((<char*>w)[:nw * 8], "little")


cdef class EdgeTable:
    cdef uint64_t* rows
    cdef Py_ssize_t n_edges
    cdef Py_ssize_t vw
    cdef Py_ssize_t ew
    cdef readonly str backend

    def __cinit__(self, edge_masks, Py_ssize_t vertex_count):
        cdef Py_ssize_t i
        masks = list(edge_masks)
        self.backend = "cython"
        self.n_edges = len(masks)
        self.vw = _words(vertex_count)
        self.ew = _words(self.n_edges)
        self.rows = <uint64_t*>calloc(max(self.n_edges, 1) * self.vw, sizeof(uint64_t))
        if self.rows == NULL:
            raise MemoryError()
        for i in range(self.n_edges):
            _load(masks[i], self.rows + i * self.vw, self.vw)

    def __dealloc__(self):
        free(self.rows)

    cdef void _union_into(self, uint64_t* es, uint64_t* out) noexcept:
        cdef Py_ssize_t wi, j, e
        cdef uint64_t x
        cdef uint64_t* row
        memset(out, 0, self.vw * sizeof(uint64_t))
        for wi in range(self.ew):
            x = es[wi]
            while x:
                e = wi * 64 + __builtin_ctzll(x)
                x &= x - 1
                if e >= self.n_edges:
                    break
                row = self.rows + e * self.vw
                for j in range(self.vw):
                    out[j] |= row[j]

    cdef uint64_t* _scratch(self, Py_ssize_t n) except NULL:
        # per call: tables may be shared between threads
        cdef uint64_t* buf = <uint64_t*>calloc(n, sizeof(uint64_t))
        if buf == NULL:
            raise MemoryError()
        return buf

    def vertex_union(self, es):
        cdef uint64_t* buf = self._scratch(self.ew + self.vw)
        try:
            _load(es, buf, self.ew)
            self._union_into(buf, buf + self.ew)
            return _store(buf + self.ew, self.vw)
        finally:
            free(buf)

    def bound_edges(self, conn):
        cdef uint64_t* buf
        cdef uint64_t* cw
        cdef uint64_t* out
        cdef uint64_t* row
        cdef Py_ssize_t i, j
        if not conn:
            return 0
        buf = self._scratch(self.ew + self.vw)
        out = buf
        cw = buf + self.ew
        try:
            _load(conn, cw, self.vw)
            for i in range(self.n_edges):
                row = self.rows + i * self.vw
                for j in range(self.vw):
                    if row[j] & cw[j]:
                        out[i >> 6] |= (<uint64_t>1) << (i & 63)
                        break
            return _store(out, self.ew)
        finally:
            free(buf)

    def separate(self, edges, separator):
        cdef Py_ssize_t ew = self.ew, vw = self.vw
        cdef uint64_t* buf = self._scratch(3 * ew + (2 + self.n_edges) * vw)
        cdef uint64_t* edges_w = buf
        cdef uint64_t* sep_w = buf + ew
        cdef uint64_t* out_w = buf + 2 * ew
        cdef uint64_t* sep_v = buf + 3 * ew
        cdef uint64_t* frontier = sep_v + vw
        cdef uint64_t* outside = frontier + vw
        cdef uint64_t* row
        cdef uint64_t* o
        cdef uint64_t x, any_bits
        cdef Py_ssize_t wi, j, e, n_loose = 0, a, b
        cdef bint grew, hit
        cdef int* loose_idx
        cdef char* taken

        loose_idx = <int*>calloc(max(self.n_edges, 1), sizeof(int))
        taken = <char*>calloc(max(self.n_edges, 1), sizeof(char))
        try:
            if loose_idx == NULL or taken == NULL:
                raise MemoryError()
            _load(edges, edges_w, ew)
            _load(separator, sep_w, ew)
            self._union_into(sep_w, sep_v)
            memset(out_w, 0, ew * sizeof(uint64_t))
            for wi in range(ew):
                x = edges_w[wi] & ~sep_w[wi]
                while x:
                    e = wi * 64 + __builtin_ctzll(x)
                    x &= x - 1
                    if e >= self.n_edges:
                        break
                    row = self.rows + e * vw
                    o = outside + n_loose * vw
                    any_bits = 0
                    for j in range(vw):
                        o[j] = row[j] & ~sep_v[j]
                        any_bits |= o[j]
                    if any_bits:
                        loose_idx[n_loose] = <int>e
                        n_loose += 1
                    else:
                        out_w[e >> 6] |= (<uint64_t>1) << (e & 63)
            covered = _store(out_w, ew)

            components = []
            for a in range(n_loose):
                if taken[a]:
                    continue
                taken[a] = 1
                memset(out_w, 0, ew * sizeof(uint64_t))
                e = loose_idx[a]
                out_w[e >> 6] |= (<uint64_t>1) << (e & 63)
                memcpy(frontier, outside + a * vw, vw * sizeof(uint64_t))
                grew = True
                while grew:
                    grew = False
                    for b in range(a + 1, n_loose):
                        if taken[b]:
                            continue
                        o = outside + b * vw
                        hit = False
                        for j in range(vw):
                            if o[j] & frontier[j]:
                                hit = True
                                break
                        if hit:
                            taken[b] = 1
                            grew = True
                            e = loose_idx[b]
                            out_w[e >> 6] |= (<uint64_t>1) << (e & 63)
                            for j in range(vw):
                                frontier[j] |= o[j]
                components.append(_store(out_w, ew))
            return components, covered
        finally:
            free(loose_idx)
            free(taken)
            free(buf)
