"""Bounded closure of a generator set under the category operations.

A category of partitions is closed under rotation, so every member is
determined by its one-line form and the engine stores one canonical key per
class of one-line partitions up to rotation and reflection.  The closure is
the least set of classes (at most ``point_budget`` points) that contains the
generators and the colour identities and is stable under

* capping two neighbouring points with inverse colours (composition with a
  rotated identity),
* composing a member with a partner along ``j`` points, where ``j`` is the
  smallest junction keeping the result inside the budget (``j = 0`` is the
  tensor product),
* composing a member, cut into two rows at any point, with its own involution.

The partners are the generators and identities under the default ``seeds``
pair rule, and every member under the ``members`` rule.  The latter is the
least fixpoint of the raw operations within the budget; the former is a
subset of it that is much cheaper and, on the generator sets tested, agrees
with it below the budget once the budget is raised by two.

Every member carries a derivation that expands into a line-oriented trace of
two-row operations; :func:`replay_trace` re-executes such a trace.
"""

from __future__ import annotations

import multiprocessing
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernel
from . import _oneline as ol
from .partition import (
    XY,
    ColourSet,
    Partition,
    PartitionError,
    compose,
    conjugate,
    format_partition,
    from_one_line,
    identity,
    involute,
    is_noncrossing,
    is_projective,
    parse_colours,
    parse_partition,
    rotate,
    tensor,
    through_block_count,
    to_one_line,
)

YES = "YES"
NO = "NO"
NO_UP_TO_BOUND = "NO_UP_TO_BOUND"


class CategoryError(ValueError):
    pass


@dataclass(frozen=True)
class ClosureConfig:
    point_budget: int = 12
    iteration_cap: int = 64
    identity_words: tuple[str, ...] | None = None
    workers: int = 1
    chunk_size: int = 256
    engine: str = "auto"
    pair_rule: str = "seeds"

    def __post_init__(self) -> None:
        if self.iteration_cap < 1:
            raise CategoryError("iteration_cap must be >= 1")
        if self.workers < 1:
            raise CategoryError("workers must be >= 1")
        if self.pair_rule not in ("seeds", "members"):
            raise CategoryError(f"unknown pair rule {self.pair_rule!r}")
        if self.engine not in ("auto", "python", "compiled"):
            raise CategoryError(f"unknown engine {self.engine!r}")
        if self.engine == "compiled" and not _kernel.HAVE_NUMBA:
            raise CategoryError("the compiled engine needs numba")
        if not 0 <= self.point_budget <= ol.MAX_POINTS:
            raise CategoryError(f"point_budget must lie in [0, {ol.MAX_POINTS}]")


@dataclass(frozen=True)
class Membership:
    verdict: str
    witness: tuple[str, ...] | None
    bound: int

    @property
    def yes(self) -> bool:
        return self.verdict == YES


@dataclass(frozen=True)
class ProjectiveInfo:
    p: Partition
    t: int
    half: Partition


# ------------------------------------------------------------------ helpers


def _key_to_partition(key: bytes, colours: Sequence[str]) -> Partition:
    cols, labels = ol.decode(key)
    groups: dict[int, list[int]] = {}
    for i, b in enumerate(labels):
        groups.setdefault(b, []).append(i)
    return Partition.make("".join(colours[c] for c in cols), "", groups.values())


def _partition_key(p: Partition, index: dict[str, int]) -> bytes:
    """Raw (non-canonical) key of a one-line partition."""
    if p.l:
        raise CategoryError("expected a one-line partition")
    labels = [0] * p.k
    for bi, b in enumerate(p.blocks):
        for pt in b:
            labels[pt] = bi
    return ol.encode([index[c] for c in p.upper], labels)


# Worker state for parallel expansion; set in the parent before forking.
_STATE: dict = {}


def _expand_chunk(keys: list[bytes]) -> dict[bytes, tuple]:
    st = _STATE
    return _expand_many(keys, st["members"], st["seeds"], st["cinv"], st["budget"])


SeedVariant = tuple  # (flip, shift, key bytes, mirrored key bytes, cols, labels)


def seed_variants(key: bytes, cinv: list[int]) -> list[SeedVariant]:
    """Distinct rotations and reflections of a seed, with their mirror images."""
    n = len(key)
    out = []
    seen: set[bytes] = set()
    mk = ol.mirror(key, cinv)
    for flip, base in ((False, key), (True, mk)):
        d = base + base
        for t in range(max(n, 1)):
            v = d[t : t + n]
            if v in seen:
                continue
            seen.add(v)
            cols, labels = ol.decode(v)
            out.append((flip, t, v, ol.mirror(v, cinv), cols, labels))
    return out


def _expand_many(
    keys: Iterable[bytes],
    members: dict[bytes, tuple] | set[bytes],
    seeds: list[tuple[bytes, list[SeedVariant]]],
    cinv: list[int],
    budget: int,
) -> dict[bytes, tuple]:
    found: dict[bytes, tuple] = {}
    canon = ol.canonical
    widen = ol.widen

    def offer_key(c: bytes, deriv: tuple) -> None:
        if c in members:
            return
        old = found.get(c)
        if old is None or deriv < old:
            found[c] = deriv

    for key in keys:
        n = len(key)
        cols, labels = ol.decode(key)
        for i in range(n):
            if n >= 2 and cinv[cols[i]] == cols[(i + 1) % n]:
                offer_key(canon(ol.cap(cols, labels, i), cinv), ("cap", key, i))
        d = key + key
        rots = [d[t : t + n] for t in range(n)] or [key]
        mk = ol.mirror(key, cinv)
        e = mk + mk
        mrots = [e[t : t + n] for t in range(n)] or [mk]
        rot_lists = [ol.rotate_lists(cols, labels, t) for t in range(max(n, 1))]
        for t in range(n):
            acols, alabels = rot_lists[t]
            for length in range(1, n):
                if 2 * length <= budget:
                    offer_key(
                        canon(ol.extract(acols, alabels, length, cinv), cinv),
                        ("extract", key, t, length),
                    )
        for skey, gvars in seeds:
            for wflip, wshift, gkey, gmir, gcols, glabels in gvars:
                m = len(gkey)
                j = max(0, (n + m - budget + 1) // 2)
                if j > min(n, m):
                    continue
                if j == 0:
                    N = n + m
                    g_w = widen(gkey, n)
                    g_m = widen(gmir, n)
                    for t in range(max(n, 1)):
                        raw = widen(rots[t], m) + g_w
                        mir = g_m + widen(mrots[(n - t) % n] if n else mk, m)
                        dd = raw + raw
                        ee = mir + mir
                        c = min(
                            min(dd[i : i + N] for i in range(N)),
                            min(ee[i : i + N] for i in range(N)),
                        )
                        offer_key(c, ("fuse", key, False, t, skey, wflip, wshift, 0))
                    continue
                for flip in (False, True):
                    for t in range(n):
                        if flip:
                            acols, alabels = ol.decode(mrots[t])
                        else:
                            acols, alabels = rot_lists[t]
                        if all(cinv[acols[n - 1 - s]] == gcols[s] for s in range(j)):
                            offer_key(
                                canon(ol.fuse(acols, alabels, gcols, glabels, j), cinv),
                                ("fuse", key, flip, t, skey, wflip, wshift, j),
                            )
    return found


# ------------------------------------------------------------------ category


class Category:
    """A generated closure together with its derivations."""

    def __init__(self, cs: ColourSet, generators: Sequence[Partition], cfg: ClosureConfig):
        self.cs = cs
        self.cfg = cfg
        self.generators = tuple(generators)
        self.colours = tuple(sorted(cs.colours))
        self.index = {c: i for i, c in enumerate(self.colours)}
        self.cinv = [self.index[cs.inv(c)] for c in self.colours]
        self.members: dict[bytes, tuple] = {}
        self.rounds = 0
        self.saturated = False
        self.implied: dict[Partition, tuple[str, ...]] = {}
        self._by_size: dict[int, list[bytes]] | None = None
        self._seed_list: list[tuple[bytes, list[SeedVariant]]] = []

    # -- basic conversions
    def key_of(self, p: Partition) -> bytes:
        """Canonical class key of any partition (through its one-line form)."""
        return ol.canonical(_partition_key(to_one_line(p, self.cs), self.index), self.cinv)

    def rep(self, key: bytes) -> Partition:
        return _key_to_partition(key, self.colours)

    @property
    def budget(self) -> int:
        return self.cfg.point_budget

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p: Partition) -> bool:
        return contains(self, p).yes

    # -- generation
    def _generate(self) -> None:
        cfg = self.cfg
        for g in self.generators:
            for c in g.upper + g.lower:
                if c not in self.index:
                    raise CategoryError(f"generator uses unknown colour {c!r}")
            if not is_noncrossing(g):
                raise CategoryError(f"generator is crossing: {format_partition(g)}")
            if g.size > cfg.point_budget:
                raise CategoryError(
                    f"budget {cfg.point_budget} smaller than generator with {g.size} points"
                )
        start: dict[bytes, tuple] = {}

        def add_start(key: bytes, deriv: tuple) -> None:
            if key not in start or deriv < start[key]:
                start[key] = deriv

        words = cfg.identity_words if cfg.identity_words is not None else self.colours
        for c in sorted(set(words)):
            if c not in self.index:
                raise CategoryError(f"unknown identity colour {c!r}")
            if cfg.point_budget >= 2:
                add_start(self.key_of(identity(c)), ("id", c))
        for gi, g in enumerate(self.generators):
            add_start(self.key_of(g), ("gen", gi))
        seeds = sorted(start)
        self._seed_list = [(k, seed_variants(k, self.cinv)) for k in seeds]
        self.members.update(start)
        if self.uses_kernel:
            self._generate_compiled(sorted(start))
            return
        frontier = sorted(start)
        while frontier and self.rounds < cfg.iteration_cap:
            self.rounds += 1
            found = self._expand_round(frontier)
            for key in sorted(found):
                self.members[key] = found[key]
            frontier = sorted(found)
            self._grow_seeds(frontier)
        self.saturated = not frontier
        self._by_size = None

    def _grow_seeds(self, keys: list[bytes]) -> None:
        """Under the ``members`` pair rule every member becomes a fusion partner."""
        if self.cfg.pair_rule == "members":
            # tensoring with the empty partition adds nothing
            self._seed_list.extend((k, seed_variants(k, self.cinv)) for k in keys if k)

    @property
    def uses_kernel(self) -> bool:
        engine = self.cfg.engine
        if engine == "python":
            return False
        fits = self.cfg.point_budget <= _kernel.MAX_KERNEL_POINTS
        if engine == "compiled":
            if not fits:
                raise CategoryError(
                    f"the compiled engine supports budgets up to {_kernel.MAX_KERNEL_POINTS}"
                )
            return True
        return _kernel.HAVE_NUMBA and fits

    def _generate_compiled(self, frontier: list[bytes]) -> None:
        cfg = self.cfg
        width = 32
        ids: list[bytes] = []
        seen = _kernel.new_member_dict()

        def admit(keys: list[bytes]) -> np.ndarray:
            base = len(ids)
            for key in keys:
                seen[_kernel.pack_py(key)] = len(ids)
                ids.append(key)
            return np.arange(base, len(ids), dtype=np.int64)

        def seed_arrays():
            rows = []
            meta = []
            for si, (_k, gvars) in enumerate(self._seed_list):
                for wflip, wshift, gkey, _gm, _gc, _gl in gvars:
                    rows.append(gkey)
                    meta.append((si, int(wflip), wshift))
            return (
                _rows_to_array(rows, width),
                np.array([len(r) for r in rows], dtype=np.int64),
                np.array(meta, dtype=np.int64).reshape(-1, 3),
            )

        s_codes, s_len, s_meta = seed_arrays()
        seed_keys = [k for k, _ in self._seed_list]
        cinv = np.array(self.cinv, dtype=np.int64)
        budget = cfg.point_budget
        f_ids = admit(frontier)
        while frontier and self.rounds < cfg.iteration_cap:
            self.rounds += 1
            f_codes = _rows_to_array(frontier, width)
            f_len = np.array([len(k) for k in frontier], dtype=np.int64)
            step = cfg.chunk_size if cfg.workers > 1 else len(frontier)
            spans = [(i, min(i + step, len(frontier))) for i in range(0, len(frontier), step)]

            def run(span: tuple[int, int]) -> list[tuple]:
                lo, hi = span
                out = []
                while lo < hi:
                    codes, lens, derivs, done = _kernel.expand(
                        f_codes[lo:hi], f_len[lo:hi], f_ids[lo:hi], seen,
                        s_codes, s_len, s_meta, cinv, budget, 1 << 16,
                    )
                    # copies release the kernel's full-capacity buffers
                    out.append((codes.copy(), lens.copy(), derivs.copy()))
                    lo += done
                return out

            if cfg.workers > 1 and len(spans) > 1:
                with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
                    parts = [p for chunk in pool.map(run, spans) for p in chunk]
            else:
                parts = [p for span in spans for p in run(span)]
            merged: dict[bytes, tuple] = {}
            for codes, lens, derivs in parts:
                raw = codes.astype(np.uint8)
                for r in range(len(lens)):
                    key = raw[r, : lens[r]].tobytes()
                    d = tuple(int(x) for x in derivs[r])
                    old = merged.get(key)
                    if old is None or d < old:
                        merged[key] = d
            frontier = sorted(merged)
            for key in frontier:
                self.members[key] = self._kernel_deriv(merged[key], ids, seed_keys)
            f_ids = admit(frontier)
            if self.cfg.pair_rule == "members" and frontier:
                self._grow_seeds(frontier)
                s_codes, s_len, s_meta = seed_arrays()
                seed_keys = [k for k, _ in self._seed_list]
        self.saturated = not frontier
        self._by_size = None

    @staticmethod
    def _kernel_deriv(d: tuple, ids: list[bytes], seed_keys: list[bytes]) -> tuple:
        kind, parent = d[0], ids[d[1]]
        if kind == 0:
            return ("cap", parent, d[2])
        if kind == 1:
            return ("extract", parent, d[2], d[3])
        skey = seed_keys[d[4]]
        return ("fuse", parent, bool(d[2]), d[3], skey, bool(d[5] // 1000), d[5] % 1000, d[6])

    def _expand_round(self, frontier: list[bytes]) -> dict[bytes, tuple]:
        cfg = self.cfg
        budget = cfg.point_budget
        if cfg.workers <= 1 or len(frontier) < 2 * cfg.chunk_size:
            return _expand_many(frontier, self.members, self._seed_list, self.cinv, budget)
        chunks = [frontier[i : i + cfg.chunk_size] for i in range(0, len(frontier), cfg.chunk_size)]
        _STATE.update(members=self.members, seeds=self._seed_list, cinv=self.cinv, budget=budget)
        merged: dict[bytes, tuple] = {}
        try:
            ctx = multiprocessing.get_context("fork")
            with ProcessPoolExecutor(max_workers=cfg.workers, mp_context=ctx) as pool:
                for part in pool.map(_expand_chunk, chunks):
                    for key, deriv in part.items():
                        old = merged.get(key)
                        if old is None or deriv < old:
                            merged[key] = deriv
        finally:
            _STATE.clear()
        return merged

    # -- indexes
    def keys_of_size(self, n: int) -> list[bytes]:
        if self._by_size is None:
            by: dict[int, list[bytes]] = {}
            for key in sorted(self.members):
                by.setdefault(len(key), []).append(key)
            self._by_size = by
        return self._by_size.get(n, [])

    def one_line_members(self, n: int) -> list[Partition]:
        """Every one-line member on ``n`` points (all rotations and reflections)."""
        out = []
        for key in self.keys_of_size(n):
            for v in ol.variants(key, self.cinv):
                out.append(self.rep(v))
        return sorted(out, key=_sort_key)

    # -- registration of members proved outside the budget
    def register(self, p: Partition, trace: Sequence[str]) -> Membership:
        """Record ``p`` as a member after replaying ``trace`` against the generators."""
        result = replay_trace(trace, self.cs, self.generators)
        if result != p:
            raise CategoryError("trace does not reproduce the registered partition")
        self.implied[p] = tuple(trace)
        return Membership(YES, tuple(trace), self.budget)

    # -- traces
    def trace(self, p: Partition) -> tuple[str, ...]:
        """Replayable derivation of ``p``; ``p`` must be a member."""
        if p in self.implied:
            return self.implied[p]
        key = self.key_of(p)
        if key not in self.members:
            raise CategoryError(f"not a member: {format_partition(p)}")
        tb = _TraceBuilder(self)
        var = tb.build(key)
        raw = _partition_key(to_one_line(p, self.cs), self.index)
        _canon, flip, shift = ol.canonical_transform(raw, self.cinv)
        n = len(raw)
        if n:
            var = tb.shift(var, (n - shift) % n)
            if flip:
                var = tb.mirror(var)
        for _ in range(p.l):
            var = tb.emit("rotate", var, "right", "down")
        if tb.values[var] != p:
            raise CategoryError("internal error: trace does not reproduce the partition")
        tb.lines.append(f"result {var}")
        return tuple(tb.lines)

    def dump(self) -> str:
        """Sorted one-line representatives, one literal per line."""
        lines = sorted(format_partition(self.rep(k)) for k in self.members)
        return "".join(line + "\n" for line in lines)


def _sort_key(p: Partition) -> tuple:
    return (p.upper, p.lower, p.blocks)


def _rows_to_array(rows: Sequence[bytes], width: int) -> np.ndarray:
    out = np.zeros((len(rows), width), dtype=np.int64)
    for i, r in enumerate(rows):
        out[i, : len(r)] = np.frombuffer(r, dtype=np.uint8)
    return out


class TraceWriter:
    """Builds a trace line by line while executing every operation."""

    def __init__(self, cs: ColourSet = XY):
        self.cs = cs
        self.lines: list[str] = []
        self.values: dict[str, Partition] = {}

    def emit(self, op: str, *args: str) -> str:
        name = f"%{len(self.lines) + 1}"
        vals = self.values
        if op == "gen":
            value = parse_partition(args[0], self.cs)
        elif op == "id":
            value = identity(args[0])
        elif op == "rotate":
            value = rotate(vals[args[0]], args[1], args[2], self.cs)
        elif op == "involute":
            value = involute(vals[args[0]])
        elif op == "conjugate":
            value = conjugate(vals[args[0]], self.cs)
        elif op == "tensor":
            value = tensor(vals[args[0]], vals[args[1]])
        elif op == "compose":
            value = compose(vals[args[0]], vals[args[1]])[0]
        else:
            raise CategoryError(f"unknown trace op {op!r}")
        self.lines.append(f"{name} = {op} {' '.join(args)}")
        vals[name] = value
        return name

    def include(self, trace: Sequence[str]) -> str:
        """Append a complete trace, renaming its values; return its result."""
        rename: dict[str, str] = {}
        for raw in trace:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("result "):
                return rename[line.split()[1]]
            name, _, rhs = line.partition(" = ")
            op, *args = rhs.split()
            if op in ("rotate", "involute", "conjugate", "tensor", "compose"):
                n_refs = {"rotate": 1, "involute": 1, "conjugate": 1}.get(op, 2)
                args = [rename[a] for a in args[:n_refs]] + args[n_refs:]
            rename[name] = self.emit(op, *args)
        raise CategoryError("included trace has no result line")

    def tensor_all(self, names: Sequence[str]) -> str:
        var = names[0]
        for other in names[1:]:
            var = self.emit("tensor", var, other)
        return var

    def finish(self, var: str) -> tuple[str, ...]:
        return tuple(self.lines) + (f"result {var}",)


class _TraceBuilder(TraceWriter):
    """Expands engine derivations into two-row operations while executing them."""

    def __init__(self, cat: Category):
        super().__init__(cat.cs)
        self.cat = cat
        self.memo: dict[bytes, str] = {}

    def shift(self, var: str, t: int) -> str:
        """Cyclically move the first ``t`` points of a one-line value to its end."""
        n = self.values[var].k
        if n == 0:
            return var
        t %= n
        if t <= n - t:
            for _ in range(t):
                var = self.emit("rotate", var, "left", "down")
                var = self.emit("rotate", var, "right", "up")
        else:
            for _ in range(n - t):
                var = self.emit("rotate", var, "right", "down")
                var = self.emit("rotate", var, "left", "up")
        return var

    def mirror(self, var: str) -> str:
        var = self.emit("involute", var)
        for _ in range(self.values[var].l):
            var = self.emit("rotate", var, "right", "up")
        return var

    def to_line(self, var: str) -> str:
        for _ in range(self.values[var].l):
            var = self.emit("rotate", var, "right", "up")
        return var

    def canonicalize(self, var: str, key: bytes) -> str:
        cat = self.cat
        raw = _partition_key(self.values[var], cat.index)
        canon, flip, shift = ol.canonical_transform(raw, cat.cinv)
        if canon != key:
            raise CategoryError("internal error: derivation does not reach its class")
        if flip:
            var = self.mirror(var)
        return self.shift(var, shift)

    def variant(self, var: str, flip: bool, shift: int) -> str:
        if flip:
            var = self.mirror(var)
        return self.shift(var, shift)

    def build(self, key: bytes) -> str:
        if key in self.memo:
            return self.memo[key]
        cat = self.cat
        deriv = cat.members[key]
        kind = deriv[0]
        if kind == "gen":
            var = self.emit("gen", format_partition(cat.generators[deriv[1]]))
            var = self.to_line(var)
        elif kind == "id":
            var = self.emit("id", deriv[1])
            var = self.to_line(var)
        elif kind == "cap":
            parent, i = deriv[1], deriv[2]
            pvar = self.build(parent)
            n = len(parent)
            var = self.shift(pvar, (i + 2) % n)
            for _ in range(2):
                var = self.emit("rotate", var, "right", "down")
            low = self.values[var].lower
            d = self.emit("id", low[0])
            d = self.emit("rotate", d, "right", "up")
            var = self.emit("compose", d, var)
        elif kind == "fuse":
            _, parent, aflip, ashift, skey, wflip, wshift, j = deriv
            avar = self.variant(self.build(parent), aflip, ashift)
            gvar = self.variant(self.build(skey), wflip, wshift)
            if j == 0:
                var = self.emit("tensor", avar, gvar)
            else:
                m = self.values[gvar].k
                for _ in range(j):
                    avar = self.emit("rotate", avar, "right", "down")
                for _ in range(m - j):
                    gvar = self.emit("rotate", gvar, "right", "down")
                var = self.emit("compose", gvar, avar)
                var = self.to_line(var)
        elif kind == "extract":
            _, parent, shift, length = deriv
            var = self.variant(self.build(parent), False, shift)
            for _ in range(len(parent) - length):
                var = self.emit("rotate", var, "right", "down")
            inv = self.emit("involute", var)
            var = self.emit("compose", inv, var)
            var = self.to_line(var)
        else:  # pragma: no cover
            raise CategoryError(f"unknown derivation {kind}")
        var = self.canonicalize(var, key)
        self.memo[key] = var
        return var


# ------------------------------------------------------------------ traces


def replay_trace(
    lines: Sequence[str], cs: ColourSet = XY, generators: Sequence[Partition] | None = None
) -> Partition:
    """Execute a trace and return the partition named by its ``result`` line.

    When ``generators`` is given, every ``gen`` line must name one of them.
    """
    vals: dict[str, Partition] = {}
    allowed = set(generators) if generators is not None else None
    result: Partition | None = None
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("result "):
            result = vals[line.split()[1]]
            continue
        name, _, rhs = line.partition(" = ")
        parts = rhs.split()
        if not parts:
            raise CategoryError(f"bad trace line {raw!r}")
        op, args = parts[0], parts[1:]
        try:
            if op == "gen":
                value = parse_partition(args[0], cs)
                if allowed is not None and value not in allowed:
                    raise CategoryError(f"trace uses a non-generator {args[0]}")
            elif op == "id":
                value = identity(args[0])
            elif op == "rotate":
                value = rotate(vals[args[0]], args[1], args[2], cs)
            elif op == "involute":
                value = involute(vals[args[0]])
            elif op == "conjugate":
                value = conjugate(vals[args[0]], cs)
            elif op == "tensor":
                value = tensor(vals[args[0]], vals[args[1]])
            elif op == "compose":
                value = compose(vals[args[0]], vals[args[1]])[0]
            else:
                raise CategoryError(f"unknown trace op {op!r}")
        except KeyError as exc:
            raise CategoryError(f"undefined value in trace line {raw!r}") from exc
        vals[name] = value
    if result is None:
        raise CategoryError("trace has no result line")
    return result


# ------------------------------------------------------------------ public API


def closure_generate(
    gens: Iterable[Partition], cfg: ClosureConfig | None = None, cs: ColourSet = XY
) -> Category:
    cat = Category(cs, sorted(set(gens), key=_sort_key), cfg or ClosureConfig())
    cat._generate()
    return cat


def contains(cat: Category, p: Partition) -> Membership:
    if p in cat.implied:
        return Membership(YES, cat.implied[p], cat.budget)
    if p.size > cat.budget or not is_noncrossing(p):
        return Membership(NO_UP_TO_BOUND, None, cat.budget)
    for c in p.upper + p.lower:
        if c not in cat.index:
            return Membership(NO_UP_TO_BOUND, None, cat.budget)
    if cat.key_of(p) in cat.members:
        return Membership(YES, cat.trace(p), cat.budget)
    return Membership(NO_UP_TO_BOUND, None, cat.budget)


def is_member(cat: Category, p: Partition) -> bool:
    """Membership without building a witness."""
    if p in cat.implied:
        return True
    if p.size > cat.budget or not is_noncrossing(p):
        return False
    if any(c not in cat.index for c in p.upper + p.lower):
        return False
    return cat.key_of(p) in cat.members


def enumerate_members(cat: Category, w: str, w2: str) -> list[Partition]:
    """All members with upper word ``w`` and lower word ``w2``, sorted."""
    n = len(w) + len(w2)
    if n > cat.budget:
        raise CategoryError("word pair exceeds the point budget")
    target = [cat.index[c] for c in w + cat.cs.bar(w2)]
    out = set()
    for key in cat.keys_of_size(n):
        for v in ol.variants(key, cat.cinv):
            if [c >> 5 for c in v] == target:
                out.add(from_one_line(cat.rep(v), len(w2), cat.cs))
    return sorted(out, key=_sort_key)


def half_cut(p: Partition, cut_colour: str = "x") -> Partition:
    """Upper row of ``p`` plus one lower point per through-block, coloured ``cut_colour``."""
    k = p.k
    through = [b for b in p.blocks if b[0] < k <= b[-1]]
    t = len(through)
    blocks = []
    cut = 0
    for b in p.blocks:
        ups = [x for x in b if x < k]
        if not ups:
            continue
        if b[-1] >= k:
            ups = ups + [k + cut]
            cut += 1
        blocks.append(ups)
    return Partition.make(p.upper, cut_colour * t, blocks)


def projective_info(p: Partition) -> ProjectiveInfo:
    return ProjectiveInfo(p, through_block_count(p), half_cut(p))


def projectives(cat: Category, w: str) -> list[ProjectiveInfo]:
    return [projective_info(p) for p in enumerate_members(cat, w, w) if is_projective(p)]


def _check_equivalence(r: Partition, p: Partition, q: Partition) -> bool:
    if (r.upper, r.lower) != (p.upper, q.upper):
        return False
    return compose(involute(r), r)[0] == p and compose(r, involute(r))[0] == q


def is_equivalent(cat: Category, p: ProjectiveInfo, q: ProjectiveInfo) -> Membership:
    """Search for ``r`` in the category with ``r* r = p`` and ``r r* = q``."""
    for info in (p, q):
        if not is_projective(info.p):
            raise CategoryError(f"not projective: {format_partition(info.p)}")
        if not is_member(cat, info.p):
            raise CategoryError(f"not in the category: {format_partition(info.p)}")
    if p.t != q.t:
        return Membership(NO, None, cat.budget)
    if p.p == q.p:
        return Membership(YES, cat.trace(p.p), cat.budget)
    candidates = []
    if p.t == 0 and p.p.upper == q.p.upper:
        candidates.append(("shortcut", compose(q.p, p.p)[0]))
    if p.half.lower == q.half.lower:
        candidates.append(("half", compose(involute(q.half), p.half)[0]))
    for tag, r in candidates:
        if _check_equivalence(r, p.p, q.p) and is_member(cat, r):
            return Membership(YES, cat.trace(r), cat.budget)
    if len(p.p.upper) + len(q.p.upper) <= cat.budget:
        for r in enumerate_members(cat, p.p.upper, q.p.upper):
            if _check_equivalence(r, p.p, q.p):
                return Membership(YES, cat.trace(r), cat.budget)
    return Membership(NO_UP_TO_BOUND, None, cat.budget)


def one_line_arcs(p: Partition) -> list[tuple[int, int]]:
    """``(start, length)`` of every cyclic arc of the one-line order that is a union of blocks."""
    order = [0] * p.size
    labels = [0] * p.size
    k = p.k
    bo = list(range(k)) + [k + j for j in range(p.l - 1, -1, -1)]
    for bi, b in enumerate(p.blocks):
        for pt in b:
            labels[pt] = bi
    order = [labels[pt] for pt in bo]
    n = len(order)
    sizes: dict[int, int] = {}
    for b in order:
        sizes[b] = sizes.get(b, 0) + 1
    arcs = []
    if n:
        arcs.append((0, n))
    for start in range(n):
        count: dict[int, int] = {}
        for length in range(1, n):
            b = order[(start + length - 1) % n]
            count[b] = count.get(b, 0) + 1
            if all(count[x] == sizes[x] for x in count):
                arcs.append((start, length))
    return arcs


def full_subpartitions(p: Partition, cs: ColourSet = XY) -> list[tuple[Partition, Partition]]:
    """Every full arc ``q`` of ``p`` (as a one-line partition) with its projective ``q* q``."""
    line = to_one_line(p, cs)
    n = line.k
    out = []
    seen = set()
    for start, length in one_line_arcs(p):
        q = line
        for _ in range(start):
            q = rotate(rotate(q, "left", "down", cs), "right", "up", cs)
        for _ in range(n - length):
            q = rotate(q, "right", "down", cs)
        # q now has the arc on top and the rest (all separate blocks) below
        top = Partition.make(q.upper, "", [b for b in q.blocks if b[0] < q.k])
        if top in seen:
            continue
        seen.add(top)
        out.append((top, compose(involute(top), top)[0]))
    return out


def reduce_alternating(word: str) -> str:
    """Delete adjacent equal letters until none remain."""
    stack: list[str] = []
    for c in word:
        if stack and stack[-1] == c:
            stack.pop()
        else:
            stack.append(c)
    return "".join(stack)


# ------------------------------------------------------------------ files


def parse_category_file(text: str) -> tuple[ColourSet, list[Partition]]:
    """Header line with the colour set, then one generator literal per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CategoryError("empty category file")
    cs = parse_colours(lines[0])
    gens = []
    for ln in lines[1:]:
        try:
            gens.append(parse_partition(ln, cs))
        except PartitionError as exc:
            raise CategoryError(str(exc)) from exc
    return cs, gens


def format_category_file(cs: ColourSet, gens: Iterable[Partition]) -> str:
    return cs.to_literal() + "\n" + "".join(format_partition(g) + "\n" for g in gens)


def load_category_file(path: str) -> tuple[ColourSet, list[Partition]]:
    with open(path, encoding="utf-8") as fh:
        return parse_category_file(fh.read())
