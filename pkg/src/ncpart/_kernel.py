"""Compiled expansion rounds for the closure engine.

Implements exactly the rules of the pure-Python expansion in ``category``
(capping, self-extraction and junction composition with the seeds) on
fixed-width packed keys so that a whole round runs without the interpreter.
Keys are packed big-endian into three 64-bit words, which limits the point
budget to 24.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit, types
    from numba.typed import Dict

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

MAX_KERNEL_POINTS = 24
KEY_WORDS = 3

if HAVE_NUMBA:
    KEY_TYPE = types.UniTuple(types.int64, KEY_WORDS + 1)

    @njit(cache=True, nogil=True)
    def _pack(buf, n):
        w0 = 0
        w1 = 0
        w2 = 0
        for i in range(8):
            w0 = (w0 << 8) | (buf[i] if i < n else 0)
        for i in range(8, 16):
            w1 = (w1 << 8) | (buf[i] if i < n else 0)
        for i in range(16, 24):
            w2 = (w2 << 8) | (buf[i] if i < n else 0)
        return (np.int64(n), np.int64(w0), np.int64(w1), np.int64(w2))

    @njit(cache=True, nogil=True)
    def _encode(cols, labels, n, out, first, last):
        m = 0
        for i in range(n):
            if labels[i] + 1 > m:
                m = labels[i] + 1
        for b in range(m):
            first[b] = -1
            last[b] = -1
        for i in range(n):
            b = labels[i]
            prev = last[b]
            if prev >= 0:
                out[prev] = (cols[prev] << 5) | (i - prev)
            else:
                first[b] = i
            last[b] = i
        for b in range(m):
            i = last[b]
            if i >= 0:
                out[i] = (cols[i] << 5) | ((first[b] - i) % n)

    @njit(cache=True, nogil=True)
    def _decode(codes, n, cols, labels):
        for i in range(n):
            labels[i] = -1
        nb = 0
        for i in range(n):
            cols[i] = codes[i] >> 5
            if labels[i] < 0:
                j = i
                while labels[j] < 0:
                    labels[j] = nb
                    j = (j + (codes[j] & 31)) % n
                nb += 1
        return nb

    @njit(cache=True, nogil=True)
    def _mirror(codes, n, cinv, out):
        prevoff = np.zeros(n, dtype=np.int64)
        for i in range(n):
            o = codes[i] & 31
            prevoff[(i + o) % n] = o
        for i in range(n):
            src = n - 1 - i
            out[i] = (cinv[codes[src] >> 5] << 5) | prevoff[src]

    @njit(cache=True, nogil=True)
    def _less_rot(a, sa, b, sb, n):
        # compare rotation sa of a with rotation sb of b
        for i in range(n):
            x = a[(sa + i) % n]
            y = b[(sb + i) % n]
            if x != y:
                return x < y
        return False

    @njit(cache=True, nogil=True)
    def _canonical(codes, n, cinv, mir, out):
        if n < 2:
            for i in range(n):
                out[i] = codes[i]
            return
        _mirror(codes, n, cinv, mir)
        best_arr = 0
        best_s = 0
        for s in range(n):
            if _less_rot(codes, s, codes if best_arr == 0 else mir, best_s, n):
                best_arr = 0
                best_s = s
        for s in range(n):
            if _less_rot(mir, s, codes if best_arr == 0 else mir, best_s, n):
                best_arr = 1
                best_s = s
        src = codes if best_arr == 0 else mir
        for i in range(n):
            out[i] = src[(best_s + i) % n]

    @njit(cache=True, nogil=True)
    def _find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    @njit(cache=True, nogil=True)
    def _deriv_less(a, b):
        for i in range(a.shape[0]):
            if a[i] != b[i]:
                return a[i] < b[i]
        return False

    @njit(cache=True, nogil=True)
    def _offer(raw, n, cinv, members, found, out_codes, out_len, out_deriv, deriv, work):
        mir = work[0]
        canon = work[1]
        _canonical(raw, n, cinv, mir, canon)
        key = _pack(canon, n)
        if key in members:
            return
        if key in found:
            idx = found[key]
            if _deriv_less(deriv, out_deriv[idx]):
                out_deriv[idx, :] = deriv
            return
        idx = len(found)
        found[key] = idx
        for i in range(n):
            out_codes[idx, i] = canon[i]
        out_len[idx] = n
        out_deriv[idx, :] = deriv

    @njit(cache=True, nogil=True)
    def expand(
        f_codes,
        f_len,
        f_ids,
        members,
        s_codes,
        s_len,
        s_meta,
        cinv,
        budget,
        capacity,
    ):
        """Expand the frontier rows; return new canonical keys with derivations.

        ``s_meta`` rows are ``(seed index, mirrored flag, shift)``.  Derivation
        rows are ``(kind, parent id, a, b, c, d, e)`` with kind 0=cap,
        1=extract, 2=fuse, matching the tuples built in Python.
        """
        W = 32
        found = Dict.empty(key_type=KEY_TYPE, value_type=types.int64)
        out_codes = np.zeros((capacity, W), dtype=np.int64)
        out_len = np.zeros(capacity, dtype=np.int64)
        out_deriv = np.zeros((capacity, 7), dtype=np.int64)
        work = np.zeros((2, W), dtype=np.int64)
        cols = np.zeros(W, dtype=np.int64)
        labels = np.zeros(W, dtype=np.int64)
        acols = np.zeros(W, dtype=np.int64)
        alabels = np.zeros(W, dtype=np.int64)
        gcols = np.zeros(W, dtype=np.int64)
        glabels = np.zeros(W, dtype=np.int64)
        raw = np.zeros(W, dtype=np.int64)
        tcols = np.zeros(2 * W, dtype=np.int64)
        tlabels = np.zeros(2 * W, dtype=np.int64)
        first = np.zeros(4 * W, dtype=np.int64)
        last = np.zeros(4 * W, dtype=np.int64)
        parent = np.zeros(4 * W, dtype=np.int64)
        mk = np.zeros(W, dtype=np.int64)
        deriv = np.zeros(7, dtype=np.int64)
        outside = np.zeros(4 * W, dtype=np.bool_)
        nseeds = s_len.shape[0]
        for row in range(f_codes.shape[0]):
            if len(found) + 4096 > capacity:
                return out_codes[: len(found)], out_len[: len(found)], out_deriv[: len(found)], row
            n = f_len[row]
            codes = f_codes[row]
            pid = f_ids[row]
            nb = _decode(codes, n, cols, labels)
            # caps
            if n >= 2:
                for i in range(n):
                    j = (i + 1) % n
                    if cinv[cols[i]] == cols[j]:
                        li = labels[i]
                        lj = labels[j]
                        m = 0
                        for t in range(n):
                            if t != i and t != j:
                                tcols[m] = cols[t]
                                lab = labels[t]
                                tlabels[m] = li if lab == lj else lab
                                m += 1
                        _encode(tcols, tlabels, m, raw, first, last)
                        deriv[:] = 0
                        deriv[0] = 0
                        deriv[1] = pid
                        deriv[2] = i
                        _offer(raw, m, cinv, members, found, out_codes, out_len, out_deriv, deriv, work)
            # self-extraction on every rotation
            for t in range(n):
                for i in range(n):
                    acols[i] = cols[(i + t) % n]
                    alabels[i] = labels[(i + t) % n]
                for length in range(1, n):
                    if 2 * length > budget:
                        break
                    for b in range(nb):
                        outside[b] = False
                    for i in range(length, n):
                        outside[alabels[i]] = True
                    for i in range(length):
                        tcols[i] = acols[i]
                        tlabels[i] = alabels[i]
                        src = length - 1 - i
                        tcols[length + i] = cinv[acols[src]]
                        lab = alabels[src]
                        tlabels[length + i] = lab if outside[lab] else lab + nb
                    _encode(tcols, tlabels, 2 * length, raw, first, last)
                    deriv[:] = 0
                    deriv[0] = 1
                    deriv[1] = pid
                    deriv[2] = t
                    deriv[3] = length
                    _offer(raw, 2 * length, cinv, members, found, out_codes, out_len, out_deriv, deriv, work)
            # junction composition with seeds
            if n > 0:
                _mirror(codes, n, cinv, mk)
            for si in range(nseeds):
                m = s_len[si]
                j = (n + m - budget + 1) // 2
                if j < 0:
                    j = 0
                if j > n or j > m:
                    continue
                gnb = _decode(s_codes[si], m, gcols, glabels)
                for flip in range(2):
                    if j == 0 and flip == 1:
                        break
                    for t in range(max(n, 1)):
                        if n > 0:
                            if flip == 0:
                                for i in range(n):
                                    raw[i] = codes[(i + t) % n]
                            else:
                                for i in range(n):
                                    raw[i] = mk[(i + t) % n]
                            anb = _decode(raw, n, acols, alabels)
                        else:
                            anb = 0
                        ok = True
                        for s in range(j):
                            if cinv[acols[n - 1 - s]] != gcols[s]:
                                ok = False
                                break
                        if not ok:
                            continue
                        for i in range(n):
                            tcols[i] = acols[i]
                            tlabels[i] = alabels[i]
                        for i in range(m):
                            tcols[n + i] = gcols[i]
                            tlabels[n + i] = glabels[i] + anb
                        tot = anb + gnb
                        for b in range(tot):
                            parent[b] = b
                        for s in range(j):
                            ra = _find(parent, tlabels[n - 1 - s])
                            rb = _find(parent, tlabels[n + s])
                            if ra != rb:
                                parent[rb] = ra
                        q = 0
                        for i in range(n + m):
                            if i >= n - j and i < n + j:
                                continue
                            tcols[q] = tcols[i]
                            tlabels[q] = _find(parent, tlabels[i])
                            q += 1
                        _encode(tcols, tlabels, q, raw, first, last)
                        deriv[0] = 2
                        deriv[1] = pid
                        deriv[2] = flip
                        deriv[3] = t
                        deriv[4] = s_meta[si, 0]
                        deriv[5] = s_meta[si, 1] * 1000 + s_meta[si, 2]
                        deriv[6] = j
                        _offer(raw, q, cinv, members, found, out_codes, out_len, out_deriv, deriv, work)
        k = len(found)
        return out_codes[:k], out_len[:k], out_deriv[:k], f_codes.shape[0]

    def new_member_dict():
        return Dict.empty(key_type=KEY_TYPE, value_type=types.int64)


def pack_py(key: bytes) -> tuple[int, int, int, int]:
    """Python twin of the kernel's key packing."""
    padded = key + bytes(8 * KEY_WORDS - len(key))
    words = [int.from_bytes(padded[8 * i : 8 * i + 8], "big") for i in range(KEY_WORDS)]
    # the kernel packs into signed 64-bit words
    words = [w - (1 << 64) if w >= (1 << 63) else w for w in words]
    return (len(key), *words)
