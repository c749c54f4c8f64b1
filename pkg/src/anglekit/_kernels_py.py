"""Pure-Python implementations of the hot enumeration kernels.

This module mirrors the compiled extension ``anglekit._kernels`` function for
function; whichever is importable gets selected by ``anglekit._backend``.
Arithmetic expressions are written in the exact same shape as the C versions
so both backends produce bit-identical float64 results.
"""

from __future__ import annotations

import math

import numpy as np


def fill_triple_cosines(coords, out, b_lo, b_hi):
    """Clamped cosines of all ordered triples with vertex in [b_lo, b_hi).

    Canonical order (see anglekit._triples); writes into ``out`` starting at
    offset b_lo*(n-1)*(n-2).
    """
    n = coords.shape[0]
    pts = [tuple(row) for row in coords.tolist()]
    pos = b_lo * (n - 1) * (n - 2)
    sqrt = math.sqrt
    for b in range(b_lo, b_hi):
        bx, by, bz = pts[b]
        for a in range(n):
            if a == b:
                continue
            ax, ay, az = pts[a]
            ux = ax - bx
            uy = ay - by
            uz = az - bz
            nu = sqrt(ux * ux + uy * uy + uz * uz)
            for c in range(n):
                if c == b or c == a:
                    continue
                cx, cy, cz = pts[c]
                vx = cx - bx
                vy = cy - by
                vz = cz - bz
                cosv = (ux * vx + uy * vy + uz * vz) / (
                    nu * sqrt(vx * vx + vy * vy + vz * vz)
                )
                if cosv > 1.0:
                    cosv = 1.0
                elif cosv < -1.0:
                    cosv = -1.0
                out[pos] = cosv
                pos += 1


def collinear_scan(coords, eps):
    """All collinear triples i<j<k, float tolerance.

    A triple is collinear when every component of (q-p) x (r-p) is at most
    eps times |q-p||r-p|.  Returns (triples list, flat uint8 mask over
    i*n*n + j*n + k for i<j<k).
    """
    n = coords.shape[0]
    pts = [tuple(row) for row in coords.tolist()]
    mask = np.zeros(n * n * n, dtype=np.uint8)
    triples = []
    sqrt = math.sqrt
    for i in range(n):
        px, py, pz = pts[i]
        for j in range(i + 1, n):
            ux = pts[j][0] - px
            uy = pts[j][1] - py
            uz = pts[j][2] - pz
            nu = sqrt(ux * ux + uy * uy + uz * uz)
            for k in range(j + 1, n):
                vx = pts[k][0] - px
                vy = pts[k][1] - py
                vz = pts[k][2] - pz
                scale = eps * (nu * sqrt(vx * vx + vy * vy + vz * vz))
                cx = uy * vz - uz * vy
                if abs(cx) > scale:
                    continue
                cy = uz * vx - ux * vz
                if abs(cy) > scale:
                    continue
                cz = ux * vy - uy * vx
                if abs(cz) > scale:
                    continue
                mask[(i * n + j) * n + k] = 1
                triples.append((i, j, k))
    return triples, mask


def concyclic_scan(coords, eps, mask, i_lo, i_hi):
    """Concyclic quadruples i<j<k<l with i in [i_lo, i_hi), float tolerance.

    Quadruples containing a collinear sub-triple (per ``mask``) are skipped:
    those degeneracies are already reported as line violations and a circle
    cannot pass through three collinear points.
    """
    n = coords.shape[0]
    pts = [tuple(row) for row in coords.tolist()]
    quads = []
    sqrt = math.sqrt
    for i in range(i_lo, i_hi):
        px, py, pz = pts[i]
        for j in range(i + 1, n):
            ux = pts[j][0] - px
            uy = pts[j][1] - py
            uz = pts[j][2] - pz
            uu = ux * ux + uy * uy + uz * uz
            nu = sqrt(uu)
            ijbase = (i * n + j) * n
            for k in range(j + 1, n):
                if mask[ijbase + k]:
                    continue
                vx = pts[k][0] - px
                vy = pts[k][1] - py
                vz = pts[k][2] - pz
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
                for l in range(k + 1, n):
                    if mask[ijbase + l] or mask[ikbase + l] or mask[jkbase + l]:
                        continue
                    wx = pts[l][0] - px
                    wy = pts[l][1] - py
                    wz = pts[l][2] - pz
                    det = (uy * vz - uz * vy) * wx + (uz * vx - ux * vz) * wy + (
                        ux * vy - uy * vx
                    ) * wz
                    if abs(det) > eps * (
                        nu * nv * sqrt(wx * wx + wy * wy + wz * wz)
                    ):
                        continue
                    dx = wx - ox
                    dy = wy - oy
                    dz = wz - oz
                    d2 = dx * dx + dy * dy + dz * dz
                    if abs(d2 - r2) <= eps * (d2 if d2 > r2 else r2):
                        quads.append((i, j, k, l))
    return quads


def chain_keys(table, n, k, all_distinct):
    """Distinct k-tuples of angle-class ids over (k+2)-tuples of points.

    ``table`` is the flat (a*n + b)*n + c -> class-id lookup (vertex b).
    Consecutive windows must be three distinct points; ``all_distinct``
    additionally forbids any repeated point in the whole tuple.
    """
    length = k + 2
    keys = set()
    if n < 3:
        return keys
    tbl = table.tolist() if hasattr(table, "tolist") else list(table)
    xs = [0] * length
    ids = [0] * k
    used = bytearray(n)
    choice = [-1] * length
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
            ids[d - 2] = tbl[(xs[d - 2] * n + xs[d - 1]) * n + x]
        if d == length - 1:
            keys.add(tuple(ids))
        else:
            if all_distinct:
                used[x] = 1
            d += 1
    return keys
