"""Exact integer matrices of partition maps and the checks built on them.

``T_p`` sends ``e_{i_1} (x) ... (x) e_{i_k}`` to the sum of ``e_{j_1} (x) ... (x) e_{j_l}``
over all lower indices ``j`` such that every block of ``p`` carries a single
index value.  Rows are indexed by ``j`` and columns by ``i``, both
big-endian.  Colours play no role.  All arithmetic is on int64.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numba import njit
from scipy import sparse
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from . import _oneline as ol
from .category import Category, enumerate_members
from .partition import Partition, compose, format_partition, from_one_line

DEFAULT_CAP = 10**7
DENSE_LIMIT = 10**5


class LinmapError(ValueError):
    """Raised for oversize matrices or incompatible partitions."""


@dataclass(frozen=True)
class TpMatrix:
    p: Partition
    n: int
    rows: np.ndarray
    cols: np.ndarray

    @property
    def source_dim(self) -> int:
        return self.n ** self.p.k

    @property
    def target_dim(self) -> int:
        return self.n ** self.p.l

    @property
    def shape(self) -> tuple[int, int]:
        return self.target_dim, self.source_dim

    def to_sparse(self) -> sparse.csr_matrix:
        data = np.ones(len(self.rows), dtype=np.int64)
        return sparse.csr_matrix((data, (self.rows, self.cols)), shape=self.shape, dtype=np.int64)

    def to_dense(self) -> np.ndarray:
        if self.target_dim * self.source_dim > DEFAULT_CAP:
            raise LinmapError("matrix too large for a dense copy; use to_sparse()")
        m = np.zeros(self.shape, dtype=np.int64)
        m[self.rows, self.cols] = 1
        return m

    @property
    def matrix(self):
        """Dense up to ``DENSE_LIMIT`` entries, sparse beyond."""
        if self.target_dim * self.source_dim > DENSE_LIMIT:
            return self.to_sparse()
        return self.to_dense()

    def coordinate_list(self) -> str:
        """Nonzero entries as ``row col value`` lines, row-major."""
        order = np.lexsort((self.cols, self.rows))
        return "".join(f"{self.rows[i]} {self.cols[i]} 1\n" for i in order)


def _flat_indices(p: Partition, n: int) -> np.ndarray:
    """Flat index ``row * n^k + col`` of every nonzero entry."""
    k, l = p.k, p.l  # noqa: E741
    weights = [n ** (k - 1 - i) for i in range(k)] + [n ** (k + l - 1 - i) for i in range(l)]
    block_weight = np.array([sum(weights[pt] for pt in b) for b in p.blocks], dtype=np.int64)
    nb = len(p.blocks)
    if nb == 0:
        return np.zeros(1, dtype=np.int64)
    values = np.indices((n,) * nb, dtype=np.int64).reshape(nb, -1)
    return block_weight @ values


def tp_matrix(p: Partition, n: int, cap: int = DEFAULT_CAP) -> TpMatrix:
    """The 0/1 matrix of ``T_p`` from ``(C^n)^{(x)k}`` to ``(C^n)^{(x)l}``."""
    if n < 1:
        raise LinmapError("N must be at least 1")
    if n ** len(p.blocks) > cap:
        raise LinmapError(f"T_p for {p.k}+{p.l} points at N={n} has more than {cap} nonzero entries")
    flat = _flat_indices(p, n)
    src = n**p.k
    return TpMatrix(p, n, flat // src, flat % src)


def _shape(p: Partition) -> Partition:
    return Partition("x" * p.k, "x" * p.l, p.blocks)


@lru_cache(maxsize=4096)
def _split_indices(p: Partition, n: int, cap: int) -> tuple[np.ndarray, np.ndarray]:
    """``(row, col)`` of the nonzero entries of ``T_p`` for an uncoloured shape."""
    t = tp_matrix(p, n, cap)
    return t.rows, t.cols


@njit(cache=True, nogil=True)
def _product_matches(p_mid, p_col, q_row, q_mid, r_keys, factor, mid_dim, col_dim):
    """Whether ``T_q T_p`` equals ``factor * T_r`` given coordinate lists of all three."""
    counts = np.zeros(mid_dim + 1, dtype=np.int64)
    for m in p_mid:
        counts[m + 1] += 1
    for m in range(mid_dim):
        counts[m + 1] += counts[m]
    order = np.argsort(p_mid, kind="mergesort")
    total = 0
    for m in q_mid:
        total += counts[m + 1] - counts[m]
    if total != factor * len(r_keys):
        return False
    keys = np.empty(total, dtype=np.int64)
    pos = 0
    for a in range(len(q_mid)):
        m = q_mid[a]
        base = q_row[a] * col_dim
        for b in range(counts[m], counts[m + 1]):
            keys[pos] = base + p_col[order[b]]
            pos += 1
    keys.sort()
    expected = np.sort(r_keys)
    pos = 0
    for e in expected:
        for _ in range(factor):
            if pos >= total or keys[pos] != e:
                return False
            pos += 1
    return pos == total


def check_composition(q: Partition, p: Partition, n: int, cap: int = DEFAULT_CAP) -> dict:
    """``T_q T_p == N^loops T_{qp}`` in exact integer arithmetic (``p`` on top)."""
    if q.upper != p.lower:
        raise LinmapError("word mismatch: the lower row of p must equal the upper row of q")
    r, loops = compose(q, p)
    factor = n**loops
    p_mid, p_col = _split_indices(_shape(p), n, cap)
    q_row, q_mid = _split_indices(_shape(q), n, cap)
    r_row, r_col = _split_indices(_shape(r), n, cap)
    col_dim = n**p.k
    ok = _product_matches(p_mid, p_col, q_row, q_mid, r_row * col_dim + r_col, factor, n**p.l, col_dim)
    return {
        "pair": [format_partition(q), format_partition(p)],
        "N": n,
        "factor": factor,
        "ok": bool(ok),
    }


def exact_rank(rows) -> int:
    """Rank over the rationals of an integer matrix, from its integer Gram matrix."""
    if rows.shape[0] == 0:
        return 0
    gram = rows @ rows.T
    if sparse.issparse(gram):
        gram = gram.toarray()
    gram = np.asarray(gram, dtype=np.int64)
    dm = DomainMatrix([[ZZ(int(v)) for v in row] for row in gram.tolist()], gram.shape, ZZ)
    return int(dm.rank())


def mor_dimension(cat: Category, w: str, w2: str, n: int, cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """Number of members in ``C(w, w2)`` and the rank of their ``T_p`` maps."""
    if n ** (len(w) + len(w2)) > cap:
        raise LinmapError("vectorised maps exceed the cap")
    parts = enumerate_members(cat, w, w2)
    if not parts:
        return 0, 0
    size = n ** (len(w) + len(w2))
    rows, cols = [], []
    for i, p in enumerate(parts):
        flat = _flat_indices(p, n)
        rows.append(np.full(len(flat), i, dtype=np.int64))
        cols.append(flat)
    data = np.ones(sum(len(c) for c in cols), dtype=np.int64)
    v = sparse.csr_matrix(
        (data, (np.concatenate(rows), np.concatenate(cols))), shape=(len(parts), size), dtype=np.int64
    )
    return len(parts), exact_rank(v)


@dataclass(frozen=True)
class CompositionAudit:
    coloured_pairs: int
    shape_pairs: int
    checks: int
    failures: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def audit_compositions(cat: Category, ns=(3, 4, 5), cap: int = DEFAULT_CAP) -> CompositionAudit:
    """Check the composition law on every compatible pair of members.

    ``T_p`` and the shape of ``compose(q, p)`` ignore colours, so each coloured
    pair is covered by checking its uncoloured shape pair once per ``N``.
    """
    by_upper: dict[str, set[Partition]] = defaultdict(set)
    by_lower: dict[str, set[Partition]] = defaultdict(set)
    seen = set()
    for key in cat.members:
        for v in ol.variants(key, cat.cinv):
            line = cat.rep(v)
            for cut in range(len(key) + 1):
                p = from_one_line(line, cut, cat.cs)
                if p in seen:
                    continue
                seen.add(p)
                by_upper[p.upper].add(_shape(p))
                by_lower[p.lower].add(_shape(p))
    shape_pairs: set[tuple[Partition, Partition]] = set()
    for w, tops in by_lower.items():
        for q in by_upper.get(w, ()):
            for p in tops:
                shape_pairs.add((q, p))
    lowers = defaultdict(int)
    uppers = defaultdict(int)
    for p in seen:
        lowers[p.lower] += 1
        uppers[p.upper] += 1
    coloured = sum(c * uppers.get(w, 0) for w, c in lowers.items())
    failures = []
    checks = 0
    ordered = sorted(shape_pairs, key=lambda t: (format_partition(t[0]), format_partition(t[1])))
    for q, p in ordered:
        for n in ns:
            checks += 1
            res = check_composition(q, p, n, cap)
            if not res["ok"]:
                failures.append(res)
    return CompositionAudit(coloured, len(shape_pairs), checks, tuple(failures))
