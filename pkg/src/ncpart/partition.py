"""Coloured set partitions on two rows of points and the category operations.

Points are labelled ``u1..uk`` on the upper row and ``l1..ll`` on the lower
row.  Internally a partition stores blocks over *flat* indices, where upper
point ``u_i`` is ``i - 1`` and lower point ``l_j`` is ``k + j - 1``.  Blocks are
kept sorted and ordered by their smallest point, so two partitions are equal
exactly when their stored tuples are equal.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class PartitionError(ValueError):
    """Raised for malformed literals and violated operation preconditions."""


@dataclass(frozen=True)
class ColourSet:
    """Single-character colours with an involutive inverse map."""

    inverse: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        table = dict(self.inverse)
        if len(table) != len(self.inverse):
            raise PartitionError("duplicate colour in colour set")
        for c, inv in table.items():
            if len(c) != 1 or len(inv) != 1:
                raise PartitionError(f"colours must be single characters: {c!r}")
            if inv not in table or table[inv] != c:
                raise PartitionError(f"inverse map is not an involution at {c!r}")

    @classmethod
    def from_map(cls, mapping: dict[str, str]) -> "ColourSet":
        return cls(tuple(sorted(mapping.items())))

    @property
    def colours(self) -> tuple[str, ...]:
        return tuple(c for c, _ in self.inverse)

    def inv(self, c: str) -> str:
        for a, b in self.inverse:
            if a == c:
                return b
        raise PartitionError(f"unknown colour {c!r}")

    def bar(self, word: str) -> str:
        """Reverse a word and invert every letter."""
        table = dict(self.inverse)
        return "".join(table[c] for c in reversed(word))

    def check_word(self, word: str) -> None:
        table = dict(self.inverse)
        for c in word:
            if c not in table:
                raise PartitionError(f"unknown colour {c!r}")

    def is_self_inverse_xy(self) -> bool:
        return dict(self.inverse) == {"x": "x", "y": "y"}

    def to_literal(self) -> str:
        return "colours=" + ",".join(f"{c}:{i}" for c, i in self.inverse)


XY = ColourSet.from_map({"x": "x", "y": "y"})

_COLOURS_RE = re.compile(r"^colours=(\S:\S(?:,\S:\S)*)$")


def parse_colours(text: str) -> ColourSet:
    """Parse ``colours=x:x,y:y``."""
    m = _COLOURS_RE.match(text.strip())
    if not m:
        raise PartitionError(f"malformed colour declaration: {text!r}")
    mapping: dict[str, str] = {}
    for item in m.group(1).split(","):
        c, inv = item.split(":")
        if c in mapping:
            raise PartitionError(f"duplicate colour {c!r}")
        mapping[c] = inv
    return ColourSet.from_map(mapping)


def _canon_blocks(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


@dataclass(frozen=True)
class Partition:
    """A partition of ``len(upper) + len(lower)`` points into blocks.

    Construct through :meth:`make` (which canonicalises and validates) unless
    the blocks are already canonical.
    """

    upper: str
    lower: str
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, upper: str, lower: str, blocks: Iterable[Iterable[int]]) -> "Partition":
        canon = _canon_blocks(blocks)
        n = len(upper) + len(lower)
        seen = [pt for b in canon for pt in b]
        if any(len(b) == 0 for b in canon):
            raise PartitionError("empty block")
        if sorted(seen) != list(range(n)):
            raise PartitionError("blocks do not partition the point set")
        return cls(upper, lower, canon)

    @property
    def k(self) -> int:
        return len(self.upper)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.lower)

    @property
    def size(self) -> int:
        return len(self.upper) + len(self.lower)

    def colour(self, pt: int) -> str:
        k = len(self.upper)
        return self.upper[pt] if pt < k else self.lower[pt - k]

    def label(self, pt: int) -> str:
        k = len(self.upper)
        return f"u{pt + 1}" if pt < k else f"l{pt - k + 1}"

    def is_upper(self, pt: int) -> bool:
        return pt < len(self.upper)

    def block_views(self) -> list["Block"]:
        return [Block(self, b) for b in self.blocks]

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class Block:
    """Read-only view of one block of a partition."""

    parent: Partition
    points: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def upper_points(self) -> tuple[int, ...]:
        return tuple(p for p in self.points if p < self.parent.k)

    @property
    def lower_points(self) -> tuple[int, ...]:
        return tuple(p for p in self.points if p >= self.parent.k)

    @property
    def is_through(self) -> bool:
        return bool(self.upper_points) and bool(self.lower_points)

    @property
    def is_interval(self) -> bool:
        if self.is_through:
            return False
        pts = self.points
        return pts[-1] - pts[0] == len(pts) - 1

    @property
    def upper_word(self) -> str:
        return "".join(self.parent.colour(p) for p in self.upper_points)

    @property
    def lower_word(self) -> str:
        return "".join(self.parent.colour(p) for p in self.lower_points)

    @property
    def colours(self) -> frozenset[str]:
        return frozenset(self.parent.colour(p) for p in self.points)


# ---------------------------------------------------------------- literals

_LIT_RE = re.compile(r"^up=([^;]*);low=([^;]*);blocks=(.*)$")
_LABEL_RE = re.compile(r"^([ul])([1-9][0-9]*)$")


def parse_partition(text: str, cs: ColourSet = XY) -> Partition:
    """Parse ``up=<word>;low=<word>;blocks=u1,l1|u2``."""
    m = _LIT_RE.match(text.strip())
    if not m:
        raise PartitionError(f"malformed partition literal: {text!r}")
    upper, lower, body = m.groups()
    cs.check_word(upper)
    cs.check_word(lower)
    blocks = []
    if body:
        for chunk in body.split("|"):
            if not chunk:
                raise PartitionError("empty block in literal")
            blocks.append([_parse_label(lab, len(upper), len(lower)) for lab in chunk.split(",")])
    return Partition.make(upper, lower, blocks)


def _parse_label(lab: str, k: int, l: int) -> int:  # noqa: E741
    m = _LABEL_RE.match(lab)
    if not m:
        raise PartitionError(f"bad point label {lab!r}")
    row, idx = m.group(1), int(m.group(2))
    if row == "u":
        if idx > k:
            raise PartitionError(f"point {lab} outside upper row of length {k}")
        return idx - 1
    if idx > l:
        raise PartitionError(f"point {lab} outside lower row of length {l}")
    return k + idx - 1


def format_partition(p: Partition) -> str:
    body = "|".join(",".join(p.label(pt) for pt in b) for b in p.blocks)
    return f"up={p.upper};low={p.lower};blocks={body}"


def partition_to_json(p: Partition) -> dict:
    return {"up": p.upper, "low": p.lower, "blocks": [[p.label(pt) for pt in b] for b in p.blocks]}


def partition_from_json(obj: dict | str, cs: ColourSet = XY) -> Partition:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        upper, lower, blocks = obj["up"], obj["low"], obj["blocks"]
    except (KeyError, TypeError) as exc:
        raise PartitionError(f"malformed partition JSON: {obj!r}") from exc
    body = "|".join(",".join(b) for b in blocks)
    return parse_partition(f"up={upper};low={lower};blocks={body}", cs)


# ------------------------------------------------------------- predicates


def boundary_order(p: Partition) -> list[int]:
    """Flat points in cyclic boundary order: upper left-to-right, lower right-to-left."""
    k, l = p.k, p.l  # noqa: E741
    return list(range(k)) + [k + j for j in range(l - 1, -1, -1)]


def labels_noncrossing(labels: Sequence[int]) -> bool:
    """True iff the block-label sequence of points on a line has no crossing."""
    last: dict[int, int] = {}
    for i, b in enumerate(labels):
        last[b] = i
    stack: list[int] = []
    opened: set[int] = set()
    for i, b in enumerate(labels):
        if b in opened:
            if not stack or stack[-1] != b:
                return False
        else:
            opened.add(b)
            stack.append(b)
        if last[b] == i:
            stack.pop()
    return True


def point_labels(p: Partition) -> list[int]:
    """Block index of every flat point."""
    out = [0] * p.size
    for bi, b in enumerate(p.blocks):
        for pt in b:
            out[pt] = bi
    return out


def is_noncrossing(p: Partition) -> bool:
    labels = point_labels(p)
    return labels_noncrossing([labels[pt] for pt in boundary_order(p)])


def through_block_count(p: Partition) -> int:
    k = p.k
    return sum(1 for b in p.blocks if b[0] < k <= b[-1])


# -------------------------------------------------------------- operations


def tensor(p: Partition, q: Partition) -> Partition:
    """Horizontal concatenation, ``p`` on the left."""
    kp, lp, kq = p.k, p.l, q.k

    def shift_p(pt: int) -> int:
        return pt if pt < kp else pt + kq

    def shift_q(pt: int) -> int:
        return pt + kp if pt < kq else pt + kp + lp

    blocks = [tuple(shift_p(x) for x in b) for b in p.blocks]
    blocks += [tuple(shift_q(x) for x in b) for b in q.blocks]
    return Partition(p.upper + q.upper, p.lower + q.lower, _canon_blocks(blocks))


def tensor_all(parts: Sequence[Partition]) -> Partition:
    out = EMPTY
    for part in parts:
        out = tensor(out, part)
    return out


def compose(q: Partition, p: Partition) -> tuple[Partition, int]:
    """Stack ``p`` on top of ``q`` and return ``(qp, loop count)``.

    Requires the lower word of ``p`` to equal the upper word of ``q``.
    """
    if p.lower != q.upper:
        raise PartitionError(f"cannot compose: lower word {p.lower!r} != upper word {q.upper!r}")
    kp, m, lq = p.k, p.l, q.l
    # nodes: 0..kp-1 top, kp..kp+m-1 middle, kp+m..kp+m+lq-1 bottom
    parent = list(range(kp + m + lq))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for b in p.blocks:
        for x in b[1:]:
            union(b[0], x)
    for b in q.blocks:
        nodes = [kp + x for x in b]  # q's upper row is the middle row
        for x in nodes[1:]:
            union(nodes[0], x)

    groups: dict[int, list[int]] = {}
    for node in range(kp + m + lq):
        groups.setdefault(find(node), []).append(node)
    blocks = []
    loops = 0
    for nodes in groups.values():
        outer = [x if x < kp else x - m for x in nodes if x < kp or x >= kp + m]
        if outer:
            blocks.append(outer)
        else:
            loops += 1
    return Partition(p.upper, q.lower, _canon_blocks(blocks)), loops


def involute(p: Partition) -> Partition:
    """Reflect across the horizontal axis."""
    k, l = p.k, p.l  # noqa: E741

    def move(pt: int) -> int:
        return pt + l if pt < k else pt - k

    return Partition(p.lower, p.upper, _canon_blocks(tuple(move(x) for x in b) for b in p.blocks))


def rotate(p: Partition, side: str, direction: str, cs: ColourSet = XY) -> Partition:
    """Move the extreme point on ``side`` to the other row, inverting its colour.

    ``direction='up'`` moves a lower point to the upper row and ``'down'`` the
    reverse.
    """
    if side not in ("left", "right") or direction not in ("up", "down"):
        raise PartitionError(f"bad rotation {side}/{direction}")
    k, l = p.k, p.l  # noqa: E741
    up, low = p.upper, p.lower
    if direction == "up":
        if l == 0:
            raise PartitionError("cannot rotate up: lower row is empty")
        if side == "left":
            new_up, new_low = cs.inv(low[0]) + up, low[1:]

            def move(pt: int) -> int:
                if pt < k:
                    return pt + 1
                return 0 if pt == k else pt

        else:
            new_up, new_low = up + cs.inv(low[-1]), low[:-1]

            def move(pt: int) -> int:
                if pt < k:
                    return pt
                return k if pt == k + l - 1 else pt + 1

    else:
        if k == 0:
            raise PartitionError("cannot rotate down: upper row is empty")
        if side == "left":
            new_up, new_low = up[1:], cs.inv(up[0]) + low

            def move(pt: int) -> int:
                if pt == 0:
                    return k - 1
                return pt - 1 if pt < k else pt

        else:
            new_up, new_low = up[:-1], low + cs.inv(up[-1])

            def move(pt: int) -> int:
                if pt == k - 1:
                    return k + l - 1
                return pt if pt < k else pt - 1

    return Partition(new_up, new_low, _canon_blocks(tuple(move(x) for x in b) for b in p.blocks))


def conjugate(p: Partition, cs: ColourSet = XY) -> Partition:
    """Rotate by a half turn: the result lies in NC(bar lower, bar upper)."""
    k, l = p.k, p.l  # noqa: E741

    def move(pt: int) -> int:
        # lower j -> upper l-1-j ; upper i -> lower k-1-i
        return l - 1 - (pt - k) if pt >= k else l + (k - 1 - pt)

    return Partition(
        cs.bar(p.lower), cs.bar(p.upper), _canon_blocks(tuple(move(x) for x in b) for b in p.blocks)
    )


def to_one_line(p: Partition, cs: ColourSet = XY) -> Partition:
    """Rotate every lower point to the right end of the upper row."""
    for _ in range(p.l):
        p = rotate(p, "right", "up", cs)
    return p


def from_one_line(p: Partition, lower_len: int, cs: ColourSet = XY) -> Partition:
    """Inverse of :func:`to_one_line` for a target with ``lower_len`` lower points."""
    if p.l != 0 or lower_len > p.k:
        raise PartitionError("from_one_line needs a one-line partition with enough points")
    for _ in range(lower_len):
        p = rotate(p, "right", "down", cs)
    return p


def is_projective(p: Partition) -> bool:
    if p.upper != p.lower:
        return False
    if involute(p) != p:
        return False
    return compose(p, p)[0] == p


def upper_row(p: Partition) -> Partition:
    """The restriction of ``p`` to its upper row, as a one-line partition."""
    k = p.k
    return Partition.make(p.upper, "", [[x for x in b if x < k] for b in p.blocks if b[0] < k])


def lower_row(p: Partition) -> Partition:
    """The restriction of ``p`` to its lower row, placed on the upper row."""
    k = p.k
    return Partition.make(p.lower, "", [[x - k for x in b if x >= k] for b in p.blocks if b[-1] >= k])


# ---------------------------------------------------------------- builders

EMPTY = Partition("", "", ())


def identity(c: str) -> Partition:
    return Partition(c, c, ((0, 1),))


def identity_word(w: str) -> Partition:
    return tensor_all([identity(c) for c in w])


def d_pair(a: str, b: str) -> Partition:
    """The two-point block on the upper row coloured ``a b``."""
    return Partition(a + b, "", ((0, 1),))


def singleton_word(w: str) -> Partition:
    """All singletons on the upper row with word ``w``."""
    return Partition(w, "", tuple((i,) for i in range(len(w))))


def pi(w: str, w2: str) -> Partition:
    """The one-block partition with upper word ``w`` and lower word ``w2``."""
    n = len(w) + len(w2)
    return Partition(w, w2, (tuple(range(n)),) if n else ())


def beta(w: str, w2: str) -> Partition:
    """One block on the upper row and one on the lower row."""
    k, l = len(w), len(w2)  # noqa: E741
    blocks = []
    if k:
        blocks.append(tuple(range(k)))
    if l:
        blocks.append(tuple(range(k, k + l)))
    return Partition(w, w2, tuple(blocks))


def beta_gamma(w: str) -> Partition:
    return beta(w, w)


def _yx_row(k: int) -> str:
    return "yx" * k + "y"


def p_k(k: int) -> Partition:
    """``y x y ... y`` on both rows, all y's in one through-block, x singletons."""
    if k < 1:
        raise PartitionError("p_k needs k >= 1")
    row = _yx_row(k)
    n = len(row)
    ys = [i for i, c in enumerate(row) if c == "y"]
    blocks = [tuple(ys + [n + i for i in ys])]
    blocks += [(i,) for i, c in enumerate(row) if c == "x"]
    blocks += [(n + i,) for i, c in enumerate(row) if c == "x"]
    return Partition.make(row, row, blocks)


def q_k(k: int) -> Partition:
    """As :func:`p_k` but the upper and lower y's form two separate blocks."""
    if k < 1:
        raise PartitionError("q_k needs k >= 1")
    row = _yx_row(k)
    n = len(row)
    ys = [i for i, c in enumerate(row) if c == "y"]
    blocks = [tuple(ys), tuple(n + i for i in ys)]
    blocks += [(i,) for i, c in enumerate(row) if c == "x"]
    blocks += [(n + i,) for i, c in enumerate(row) if c == "x"]
    return Partition.make(row, row, blocks)
