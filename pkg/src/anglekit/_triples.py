"""Canonical enumeration order for ordered point triples.

Every triple (a, b, c) of pairwise-distinct indices, with the angle vertex at
b, is enumerated vertex-major: b ascending, then a ascending (skipping b),
then c ascending (skipping b and a).  Kernels fill their output arrays in
exactly this order, so positions computed here line up with kernel output.
"""

from __future__ import annotations

import numpy as np


def ordered_triple_count(n: int) -> int:
    return n * (n - 1) * (n - 2) if n >= 3 else 0


def triple_index_arrays(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(a, b, c) index arrays for all ordered triples in canonical order."""
    m = ordered_triple_count(n)
    a_out = np.empty(m, dtype=np.intp)
    b_out = np.empty(m, dtype=np.intp)
    c_out = np.empty(m, dtype=np.intp)
    if m == 0:
        return a_out, b_out, c_out
    idx = np.arange(n)
    block = (n - 1) * (n - 2)
    keep = ~np.eye(n - 1, dtype=bool)
    pos = 0
    for b in range(n):
        others = np.delete(idx, b)
        a_out[pos : pos + block] = np.repeat(others, n - 2)
        c_out[pos : pos + block] = np.broadcast_to(others, (n - 1, n - 1))[keep]
        b_out[pos : pos + block] = b
        pos += block
    return a_out, b_out, c_out


def split_ranges(n: int, chunks: int) -> list[tuple[int, int]]:
    """Split range(n) into at most `chunks` contiguous nonempty pieces."""
    chunks = max(1, min(chunks, n))
    bounds = np.linspace(0, n, chunks + 1).astype(int)
    return [(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
