"""Compact keys for one-line partitions up to rotation and reflection.

A one-line partition on ``n`` points is encoded point by point as
``colour_index * 32 + offset`` where ``offset`` is the cyclic distance to the
next point of the same block (0 for a singleton).  Rotating the line rotates
this byte string, so the canonical key of a class is the smallest rotation of
either the string or its mirror image.
"""

from __future__ import annotations

from typing import Sequence

MAX_POINTS = 31


def encode(cols: Sequence[int], labels: Sequence[int]) -> bytes:
    n = len(cols)
    size = max(labels, default=-1) + 1
    first = [-1] * size
    last = [-1] * size
    out = [0] * n
    for i, b in enumerate(labels):
        prev = last[b]
        if prev >= 0:
            out[prev] = (cols[prev] << 5) | (i - prev)
        else:
            first[b] = i
        last[b] = i
    for b in range(size):
        i = last[b]
        if i >= 0:
            out[i] = (cols[i] << 5) | ((first[b] - i) % n)
    return bytes(out)


def widen(key: bytes, extra: int) -> bytes:
    """Re-encode ``key`` as the left part of a line that is ``extra`` points longer."""
    n = len(key)
    return bytes(
        c + extra if (c & 31) and i + (c & 31) >= n else c for i, c in enumerate(key)
    )


def decode(key: bytes) -> tuple[list[int], list[int]]:
    """Return ``(colour indices, block labels)`` with labels in first-seen order."""
    n = len(key)
    labels = [-1] * n
    nb = 0
    for i in range(n):
        if labels[i] < 0:
            j = i
            while labels[j] < 0:
                labels[j] = nb
                j = (j + (key[j] & 31)) % n
            nb += 1
    return [c >> 5 for c in key], labels


def mirror(key: bytes, cinv: Sequence[int]) -> bytes:
    """Reverse the line and invert colours."""
    n = len(key)
    prevoff = [0] * n
    for i in range(n):
        o = key[i] & 31
        prevoff[(i + o) % n] = o
    return bytes((cinv[key[i] >> 5] << 5) | prevoff[i] for i in range(n - 1, -1, -1))


def canonical(key: bytes, cinv: Sequence[int]) -> bytes:
    n = len(key)
    if n < 2:
        return key
    d = key + key
    m = mirror(key, cinv)
    e = m + m
    return min(min(d[t : t + n] for t in range(n)), min(e[t : t + n] for t in range(n)))


def canonical_transform(key: bytes, cinv: Sequence[int]) -> tuple[bytes, bool, int]:
    """Canonical key plus ``(mirrored, shift)`` with canon = rotate(mirror?(key), shift)."""
    n = len(key)
    if n < 2:
        return key, False, 0
    best = None
    for flip, base in ((False, key), (True, mirror(key, cinv))):
        d = base + base
        for t in range(n):
            cand = d[t : t + n]
            if best is None or cand < best[0]:
                best = (cand, flip, t)
    assert best is not None
    return best


def variants(key: bytes, cinv: Sequence[int]) -> list[bytes]:
    """All distinct rotations of the key and of its mirror, in a fixed order."""
    n = len(key)
    if n == 0:
        return [key]
    out: list[bytes] = []
    seen: set[bytes] = set()
    for base in (key, mirror(key, cinv)):
        d = base + base
        for t in range(n):
            v = d[t : t + n]
            if v not in seen:
                seen.add(v)
                out.append(v)
    return out


def variant_spec(key: bytes, index: int, cinv: Sequence[int]) -> tuple[bool, int]:
    """Mirror flag and shift that produced ``variants(key)[index]``."""
    n = len(key)
    seen: set[bytes] = set()
    count = 0
    for flip, base in ((False, key), (True, mirror(key, cinv))):
        d = base + base
        for t in range(n):
            v = d[t : t + n]
            if v not in seen:
                seen.add(v)
                if count == index:
                    return flip, t
                count += 1
    raise IndexError(index)


def cap(cols: list[int], labels: list[int], i: int) -> bytes:
    """Join points ``i`` and ``i+1`` (cyclically) and delete them."""
    n = len(cols)
    j = (i + 1) % n
    li, lj = labels[i], labels[j]
    keep = [t for t in range(n) if t != i and t != j]
    new_labels = [li if labels[t] == lj else labels[t] for t in keep]
    return encode([cols[t] for t in keep], new_labels)


def fuse(
    a_cols: list[int], a_labels: list[int], g_cols: list[int], g_labels: list[int], j: int
) -> bytes:
    """Concatenate ``a`` and ``g`` and cap the ``j`` nested pairs at the junction."""
    n, m = len(a_cols), len(g_cols)
    off = max(a_labels, default=-1) + 1
    labels = list(a_labels) + [x + off for x in g_labels]
    cols = list(a_cols) + list(g_cols)
    if j:
        parent = list(range(off + max(g_labels, default=-1) + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t in range(j):
            ra, rb = find(labels[n - 1 - t]), find(labels[n + t])
            if ra != rb:
                parent[rb] = ra
        keep = list(range(n - j)) + list(range(n + j, n + m))
        return encode([cols[t] for t in keep], [find(labels[t]) for t in keep])
    return encode(cols, labels)


def rotate_lists(cols: list[int], labels: list[int], t: int) -> tuple[list[int], list[int]]:
    return cols[t:] + cols[:t], labels[t:] + labels[:t]


def extract(cols: list[int], labels: list[int], length: int, cinv: Sequence[int]) -> bytes:
    """One-line form of ``A* A`` where ``A`` keeps the first ``length`` points on top.

    Blocks that also meet the remaining points become through-blocks joining
    the arc to its mirror image; the others are copied and mirrored.
    """
    n = len(cols)
    outside = {labels[t] for t in range(length, n)}
    off = max(labels, default=-1) + 1
    arc_cols = cols[:length]
    arc_labels = labels[:length]
    out_cols = arc_cols + [cinv[c] for c in reversed(arc_cols)]
    out_labels = arc_labels + [b if b in outside else b + off for b in reversed(arc_labels)]
    return encode(out_cols, out_labels)
