# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Function-for-function twin of ``anglekit._kernels_py``; expressions are kept
in the same shape (and the build disables FP contraction) so both backends
produce bit-identical float64 results.
"""

from libc.math cimport fabs, sqrt
from libc.stdlib cimport free, malloc

import numpy as np


def fill_triple_cosines(double[:, ::1] coords, double[::1] out,
                        Py_ssize_t b_lo, Py_ssize_t b_hi):
    """Clamped cosines of all ordered triples with vertex in [b_lo, b_hi).

    Canonical order (see anglekit._triples); writes into ``out`` starting at
    offset b_lo*(n-1)*(n-2).
    """
    cdef Py_ssize_t n = coords.shape[0]
    cdef Py_ssize_t pos = b_lo * (n - 1) * (n - 2)
    cdef Py_ssize_t a, b, c
    cdef double bx, by, bz, ux, uy, uz, vx, vy, vz, nu, cosv
    with nogil:
        for b in range(b_lo, b_hi):
            bx = coords[b, 0]
            by = coords[b, 1]
            bz = coords[b, 2]
            for a in range(n):
                if a == b:
                    continue
                ux = coords[a, 0] - bx
                uy = coords[a, 1] - by
                uz = coords[a, 2] - bz
                nu = sqrt(ux * ux + uy * uy + uz * uz)
                for c in range(n):
                    if c == b or c == a:
                        continue
                    vx = coords[c, 0] - bx
                    vy = coords[c, 1] - by
                    vz = coords[c, 2] - bz
                    cosv = (ux * vx + uy * vy + uz * vz) / (
                        nu * sqrt(vx * vx + vy * vy + vz * vz)
                    )
                    if cosv > 1.0:
                        cosv = 1.0
                    elif cosv < -1.0:
                        cosv = -1.0
                    out[pos] = cosv
                    pos += 1


def collinear_scan(double[:, ::1] coords, double eps):
    """All collinear triples i<j<k, float tolerance.

    A triple is collinear when every component of (q-p) x (r-p) is at most
    eps times |q-p||r-p|.  Returns (triples list, flat uint8 mask over
    i*n*n + j*n + k for i<j<k).
    """
    cdef Py_ssize_t n = coords.shape[0]
    mask_arr = np.zeros(n * n * n, dtype=np.uint8)
    cdef unsigned char[::1] mask = mask_arr
    triples = []
    cdef Py_ssize_t i, j, k
    cdef double px, py, pz, ux, uy, uz, vx, vy, vz, nu, scale, cx, cy, cz
    for i in range(n):
        px = coords[i, 0]
        py = coords[i, 1]
        pz = coords[i, 2]
        for j in range(i + 1, n):
            ux = coords[j, 0] - px
            uy = coords[j, 1] - py
            uz = coords[j, 2] - pz
            nu = sqrt(ux * ux + uy * uy + uz * uz)
            for k in range(j + 1, n):
                vx = coords[k, 0] - px
                vy = coords[k, 1] - py
                vz = coords[k, 2] - pz
                scale = eps * (nu * sqrt(vx * vx + vy * vy + vz * vz))
                cx = uy * vz - uz * vy
                if fabs(cx) > scale:
                    continue
                cy = uz * vx - ux * vz
                if fabs(cy) > scale:
                    continue
                cz = ux * vy - uy * vx
                if fabs(cz) > scale:
                    continue
                mask[(i * n + j) * n + k] = 1
                triples.append((i, j, k))
    return triples, mask_arr


def concyclic_scan(double[:, ::1] coords, double eps,
                   const unsigned char[::1] mask, Py_ssize_t i_lo, Py_ssize_t i_hi):
    """Concyclic quadruples i<j<k<l with i in [i_lo, i_hi), float tolerance.

    Quadruples containing a collinear sub-triple (per ``mask``) are skipped:
    those degeneracies are already reported as line violations and a circle
    cannot pass through three collinear points.
    """
    cdef Py_ssize_t n = coords.shape[0]
    quads = []
    cdef Py_ssize_t i, j, k, l, h, nhits, ijbase, ikbase, jkbase
    cdef double px, py, pz, ux, uy, uz, vx, vy, vz, wx, wy, wz
    cdef double uu, vv, uv, nu, nv, g, s1, s2, ox, oy, oz, r2, det, dx, dy, dz, d2
    cdef Py_ssize_t* hits = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    if hits == NULL:
        raise MemoryError()
    try:
        for i in range(i_lo, i_hi):
            px = coords[i, 0]
            py = coords[i, 1]
            pz = coords[i, 2]
            for j in range(i + 1, n):
                ux = coords[j, 0] - px
                uy = coords[j, 1] - py
                uz = coords[j, 2] - pz
                uu = ux * ux + uy * uy + uz * uz
                nu = sqrt(uu)
                ijbase = (i * n + j) * n
                for k in range(j + 1, n):
                    if mask[ijbase + k]:
                        continue
                    vx = coords[k, 0] - px
                    vy = coords[k, 1] - py
                    vz = coords[k, 2] - pz
                    vv = vx * vx + vy * vy + vz * vz
                    nv = sqrt(vv)
                    uv = ux * vx + uy * vy + uz * vz
                    g = uu * vv - uv * uv
                    s1 = vv * (uu - uv) / (2.0 * g)
                    s2 = uu * (vv - uv) / (2.0 * g)
                    # in-plane circumcenter O of (p_i, p_j, p_k), relative to p_i
                    ox = s1 * ux + s2 * vx
                    oy = s1 * uy + s2 * vy
                    oz = s1 * uz + s2 * vz
                    r2 = ox * ox + oy * oy + oz * oz
                    ikbase = (i * n + k) * n
                    jkbase = (j * n + k) * n
                    nhits = 0
                    with nogil:
                        for l in range(k + 1, n):
                            if mask[ijbase + l] or mask[ikbase + l] or mask[jkbase + l]:
                                continue
                            wx = coords[l, 0] - px
                            wy = coords[l, 1] - py
                            wz = coords[l, 2] - pz
                            det = (uy * vz - uz * vy) * wx + (uz * vx - ux * vz) * wy + (
                                ux * vy - uy * vx
                            ) * wz
                            if fabs(det) > eps * (
                                nu * nv * sqrt(wx * wx + wy * wy + wz * wz)
                            ):
                                continue
                            dx = wx - ox
                            dy = wy - oy
                            dz = wz - oz
                            d2 = dx * dx + dy * dy + dz * dz
                            if fabs(d2 - r2) <= eps * (d2 if d2 > r2 else r2):
                                hits[nhits] = l
                                nhits += 1
                    for h in range(nhits):
                        quads.append((i, j, k, hits[h]))
    finally:
        free(hits)
    return quads


def chain_keys(int[::1] table, Py_ssize_t n, Py_ssize_t k, bint all_distinct):
    """Distinct k-tuples of angle-class ids over (k+2)-tuples of points.

    ``table`` is the flat (a*n + b)*n + c -> class-id lookup (vertex b).
    Consecutive windows must be three distinct points; ``all_distinct``
    additionally forbids any repeated point in the whole tuple.
    """
    cdef Py_ssize_t length = k + 2
    keys = set()
    if n < 3:
        return keys
    cdef Py_ssize_t* xs = <Py_ssize_t*> malloc(length * sizeof(Py_ssize_t))
    cdef int* ids = <int*> malloc(k * sizeof(int))
    cdef Py_ssize_t* choice = <Py_ssize_t*> malloc(length * sizeof(Py_ssize_t))
    cdef unsigned char* used = <unsigned char*> malloc(n * sizeof(unsigned char))
    if xs == NULL or ids == NULL or choice == NULL or used == NULL:
        free(xs); free(ids); free(choice); free(used)
        raise MemoryError()
    cdef Py_ssize_t d, x, prev1, prev2, w
    try:
        for x in range(n):
            used[x] = 0
        for d in range(length):
            choice[d] = -1
        d = 0
        while d >= 0:
            x = choice[d] + 1
            prev1 = xs[d - 1] if d >= 1 else -1
            prev2 = xs[d - 2] if d >= 2 else -1
            while x < n:
                if x != prev1 and x != prev2 and not (all_distinct and used[x]):
                    break
                x += 1
            if x >= n:
                choice[d] = -1
                d -= 1
                if d >= 0 and all_distinct:
                    used[xs[d]] = 0
                continue
            choice[d] = x
            xs[d] = x
            if d >= 2:
                ids[d - 2] = table[(xs[d - 2] * n + xs[d - 1]) * n + x]
            if d == length - 1:
                keys.add(tuple([ids[w] for w in range(k)]))
            else:
                if all_distinct:
                    used[x] = 1
                d += 1
    finally:
        free(xs)
        free(ids)
        free(choice)
        free(used)
    return keys
