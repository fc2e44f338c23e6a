"""Brute-force reference implementations, independent of the package internals.

Partitions are handled here as ``(k, l, blocks)`` with flat points
``0..k-1`` for the upper row and ``k..k+l-1`` for the lower row.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def set_partitions(n: int):
    """All set partitions of ``range(n)`` via restricted growth strings."""
    if n == 0:
        yield ()
        return

    def rgs(prefix, m):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(m + 2):
            yield from rgs(prefix + [v], max(m, v))

    for s in rgs([0], 0):
        groups: dict[int, list[int]] = {}
        for i, v in enumerate(s):
            groups.setdefault(v, []).append(i)
        yield tuple(tuple(g) for g in groups.values())


def boundary_positions(k: int, l: int) -> list[int]:  # noqa: E741
    """Flat point at each position of the cyclic boundary walk."""
    return list(range(k)) + [k + j for j in reversed(range(l))]


def has_crossing(k: int, l: int, blocks) -> bool:  # noqa: E741
    """Naive quadruple test along the cyclic boundary order."""
    label = {}
    for bi, b in enumerate(blocks):
        for pt in b:
            label[pt] = bi
    seq = [label[pt] for pt in boundary_positions(k, l)]
    n = len(seq)
    for a, b, c, d in itertools.combinations(range(n), 4):
        if seq[a] == seq[c] and seq[b] == seq[d] and seq[a] != seq[b]:
            return True
    return False


def noncrossing_partitions(n: int):
    for blocks in set_partitions(n):
        if not has_crossing(n, 0, blocks):
            yield blocks


def noncrossing_pairings(n: int):
    for blocks in noncrossing_partitions(n):
        if all(len(b) == 2 for b in blocks):
            yield blocks


def delta(k: int, l: int, blocks, i, j) -> int:  # noqa: E741
    idx = list(i) + list(j)
    return int(all(len({idx[pt] for pt in b}) == 1 for b in blocks))


def tp_dense(k: int, l: int, blocks, n: int) -> list[list[int]]:  # noqa: E741
    """``T_p`` as nested lists; rows indexed by lower multi-indices, big-endian."""
    rows = list(itertools.product(range(n), repeat=l))
    cols = list(itertools.product(range(n), repeat=k))
    return [[delta(k, l, blocks, i, j) for i in cols] for j in rows]


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def rank(rows) -> int:
    """Rank over the rationals by Gaussian elimination on Fractions."""
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def reductions(word: str) -> set[str]:
    """Irreducible words reachable by deleting adjacent equal letters in any order."""
    out = set()
    stack = [word]
    seen = {word}
    while stack:
        w = stack.pop()
        moves = [w[:i] + w[i + 2 :] for i in range(len(w) - 1) if w[i] == w[i + 1]]
        if not moves:
            out.add(w)
        for v in moves:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return out


def compose_bfs(q, p):
    """Stack ``p`` (k -> l) on top of ``q`` (l -> m); return ``(blocks, loops)``.

    Nodes: ``('p', pt)`` for points of ``p`` and ``('q', pt)`` for points of
    ``q``; the lower row of ``p`` is glued to the upper row of ``q``.
    """
    (kp, lp, bp), (kq, lq, bq) = p, q
    assert lp == kq
    adj: dict = {}

    def link(a, b):
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    nodes = [("p", i) for i in range(kp + lp)] + [("q", i) for i in range(kq + lq)]
    for v in nodes:
        adj.setdefault(v, set())
    for b in bp:
        for x in b[1:]:
            link(("p", b[0]), ("p", x))
    for b in bq:
        for x in b[1:]:
            link(("q", b[0]), ("q", x))
    for j in range(lp):
        link(("p", kp + j), ("q", j))
    seen = set()
    blocks = []
    loops = 0
    for v in nodes:
        if v in seen:
            continue
        comp = []
        todo = [v]
        seen.add(v)
        while todo:
            u = todo.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        outer = sorted(
            pt if side == "p" else kp + (pt - kq)
            for side, pt in comp
            if (side == "p" and pt < kp) or (side == "q" and pt >= kq)
        )
        if outer:
            blocks.append(tuple(outer))
        else:
            loops += 1
    return tuple(sorted(blocks)), loops


def naive_closure(gens, budget, cs):
    """Least set containing ``gens`` and the identities, closed under the raw
    operations with every intermediate result inside ``budget`` points."""
    from ncpart.partition import compose, identity, involute, rotate, tensor

    members = set(gens) | {identity(c) for c in cs.colours}
    while True:
        cur = list(members)
        new = set()
        for p in cur:
            new.add(involute(p))
            for side in ("left", "right"):
                if p.l:
                    new.add(rotate(p, side, "up", cs))
                if p.k:
                    new.add(rotate(p, side, "down", cs))
        by_upper: dict[str, list] = {}
        for q in cur:
            by_upper.setdefault(q.upper, []).append(q)
        for p in cur:
            for q in cur:
                if p.size + q.size <= budget:
                    new.add(tensor(p, q))
            for q in by_upper.get(p.lower, ()):
                new.add(compose(q, p)[0])
        new = {x for x in new if x.size <= budget} - members
        if not new:
            return members
        members |= new
