"""Decision tree naming the quantum-group family of a two-colour category.

Every decision is a membership query against a bounded closure.  Positive
answers carry a replayable trace; negative answers only hold up to the point
budget, and any claim resting on one is reported as ``UP_TO_BOUND``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from . import _oneline as ol
from .category import (
    Category,
    CategoryError,
    ClosureConfig,
    Membership,
    NO_UP_TO_BOUND,
    ProjectiveInfo,
    TraceWriter,
    YES,
    closure_generate,
    contains,
    is_member,
    projective_info,
    reduce_alternating,
)
from .grouplike import (
    grouplike_group,
    minimal_d,
    minimal_n,
)
from .partition import (
    XY,
    ColourSet,
    Partition,
    beta,
    compose,
    conjugate,
    d_pair,
    format_partition,
    identity,
    identity_word,
    involute,
    is_noncrossing,
    p_k,
    pi,
    q_k,
    singleton_word,
    tensor_all,
)

EXACT = "EXACT"
UP_TO_BOUND = "UP_TO_BOUND"

SINGLE_COLOUR = "SINGLE_COLOUR"
FREE_PRODUCT = "FREE_PRODUCT"
O_PLUS_PLUS = "O_PLUS_PLUS"
B_PLUS_PLUS = "B_PLUS_PLUS"
BO_SHARP = "BO_SHARP"
BISTOCHASTIC_QUOTIENT = "BISTOCHASTIC_QUOTIENT"
EVEN_WREATH = "EVEN_WREATH"
ODD_WREATH = "ODD_WREATH"
SYMMETRIC_BISTOCHASTIC_QUOTIENT = "SYMMETRIC_BISTOCHASTIC_QUOTIENT"
SYMMETRIC_HYPEROCTAHEDRAL_QUOTIENT = "SYMMETRIC_HYPEROCTAHEDRAL_QUOTIENT"
SYMMETRIC_QUOTIENT = "SYMMETRIC_QUOTIENT"
UNKNOWN = "UNKNOWN"

O_PLUS = "O+"
B_PLUS = "B+"
B_PLUS_SHARP = "B+#"
B_PLUS_PRIME = "B+'"
H_PLUS = "H+"
S_PLUS = "S+"
S_PLUS_PRIME = "S+'"
PAIR_FACTORS = (O_PLUS, B_PLUS, B_PLUS_SHARP, B_PLUS_PRIME)
SYMMETRIC_FACTORS = (S_PLUS, S_PLUS_PRIME)
ODD_FACTORS = (B_PLUS, B_PLUS_SHARP, B_PLUS_PRIME, S_PLUS, S_PLUS_PRIME)

_SWAP = str.maketrans("xy", "yx")


# ------------------------------------------------------------------ profiles


@dataclass(frozen=True)
class ColourProfile:
    """Block sizes seen in members using only one colour."""

    colour: str
    sizes: frozenset[int]

    @property
    def max_block_size(self) -> int:
        return max(self.sizes, default=0)

    @property
    def has_singleton(self) -> bool:
        return 1 in self.sizes

    @property
    def has_odd_ge3(self) -> bool:
        return any(s % 2 and s >= 3 for s in self.sizes)

    @property
    def all_even(self) -> bool:
        return all(s % 2 == 0 for s in self.sizes)


@dataclass(frozen=True)
class BlockProfile:
    all_pairs: bool
    max_block_size: int
    has_singleton: bool
    has_odd_ge3: bool
    all_even: bool
    two_coloured_block_present: bool
    d_xy_block_present: bool
    colour_profiles: dict[str, ColourProfile]
    singleton_colours: frozenset[str] = frozenset()

    def to_json(self) -> dict:
        return {
            "all_pairs": self.all_pairs,
            "max_block_size": self.max_block_size,
            "has_singleton": self.has_singleton,
            "has_odd_ge3": self.has_odd_ge3,
            "all_even": self.all_even,
            "two_coloured_block_present": self.two_coloured_block_present,
            "d_xy_block_present": self.d_xy_block_present,
            "colour_profiles": {
                c: sorted(p.sizes) for c, p in sorted(self.colour_profiles.items())
            },
        }


def _key_blocks(key: bytes) -> list[list[int]]:
    """Colour indices of every block of a one-line key."""
    cols, labels = ol.decode(key)
    blocks: dict[int, list[int]] = {}
    for c, lab in zip(cols, labels):
        blocks.setdefault(lab, []).append(c)
    return list(blocks.values())


def block_profile(cat: Category) -> BlockProfile:
    """Scan the blocks of every closure member."""
    sizes: set[int] = set()
    mono_line: dict[int, set[int]] = {i: set() for i in range(len(cat.colours))}
    singleton_cols: set[int] = set()
    two_coloured = False
    d_xy = False
    for key in cat.members:
        blocks = _key_blocks(key)
        one_colour = len({c for b in blocks for c in b}) == 1
        for b in blocks:
            n = len(b)
            sizes.add(n)
            if len(set(b)) > 1:
                two_coloured = True
                if n == 2:
                    d_xy = True
            elif n == 1:
                singleton_cols.add(b[0])
            if one_colour:
                mono_line[b[0]].add(n)
    names = cat.colours
    profiles = {names[i]: ColourProfile(names[i], frozenset(s)) for i, s in mono_line.items()}
    return BlockProfile(
        all_pairs=sizes <= {2},
        max_block_size=max(sizes, default=0),
        has_singleton=1 in sizes,
        has_odd_ge3=any(s % 2 and s >= 3 for s in sizes),
        all_even=all(s % 2 == 0 for s in sizes),
        two_coloured_block_present=two_coloured,
        d_xy_block_present=d_xy,
        colour_profiles=profiles,
        singleton_colours=frozenset(names[i] for i in singleton_cols),
    )


# ------------------------------------------------------------------ probes


def swap_colours(p: Partition) -> Partition:
    return Partition(p.upper.translate(_SWAP), p.lower.translate(_SWAP), p.blocks)


class _Probe:
    """Membership queries through an optional colour swap, recording evidence."""

    def __init__(self, cat: Category, swap: bool = False):
        self.cat = cat
        self.swap = swap
        self.witnesses: list[dict] = []
        self.confidence: dict[str, str] = {}
        self.negative_used = False

    def view(self, p: Partition) -> Partition:
        return swap_colours(p) if self.swap else p

    def colour(self, c: str) -> str:
        return c.translate(_SWAP) if self.swap else c

    def has(self, claim: str, p: Partition, record: bool = True) -> bool:
        m = contains(self.cat, self.view(p))
        if record:
            self.note(claim, m)
        return m.yes

    def note(self, claim: str, m: Membership) -> None:
        if m.yes:
            self.confidence[claim] = EXACT
            self.witnesses.append({"claim": claim, "trace": list(m.witness or ())})
        else:
            self.confidence[claim] = UP_TO_BOUND
            self.negative_used = True

    def bounded(self, claim: str) -> None:
        """Record a claim that rests on the absence of something up to the budget."""
        self.confidence[claim] = UP_TO_BOUND
        self.negative_used = True


def _orthogonal_easy(probe: _Probe, c: str) -> str:
    """Name of the one-colour category on colour ``c`` (after the probe's swap)."""
    pc = probe.has(f"P_{c} in C", singleton_word(c))
    pcc = probe.has(f"P_{c}{c} in C", singleton_word(c + c))
    four = probe.has(f"pi({c * 4}) in C", pi(c * 4, ""))
    odd3 = probe.has(f"pi({c * 3}) in C", pi(c * 3, ""))
    if four:
        if pc:
            return S_PLUS
        if pcc:
            return S_PLUS_PRIME
        return UNKNOWN if odd3 else H_PLUS
    if odd3:
        return UNKNOWN
    if pc:
        return B_PLUS
    positioner = Partition.make(c * 4, "", [[0], [1, 3], [2]])
    if probe.has(f"positioner on {c} in C", positioner):
        return B_PLUS_PRIME if pcc else UNKNOWN
    if pcc:
        return B_PLUS_SHARP
    return O_PLUS


def classify_orthogonal_easy(cat: Category, colour: str = "x") -> str:
    """One of the seven noncrossing one-colour families, or UNKNOWN."""
    return _orthogonal_easy(_Probe(cat), colour)


# ------------------------------------------------------------------ commutation


def _noncrossing_on(word: str, cs: ColourSet) -> list[Partition]:
    """Every noncrossing partition with upper word ``word`` and empty lower row."""
    n = len(word)
    out = []

    def rec(i: int, labels: list[int], nb: int) -> None:
        if i == n:
            blocks: dict[int, list[int]] = {}
            for pt, lab in enumerate(labels):
                blocks.setdefault(lab, []).append(pt)
            p = Partition.make(word, "", blocks.values())
            if is_noncrossing(p):
                out.append(p)
            return
        for lab in range(nb + 1):
            labels.append(lab)
            rec(i + 1, labels, max(nb, lab + 1))
            labels.pop()

    rec(0, [], 0)
    return out


def commutation_witness(
    cat: Category, t_class: str, rep_projective: ProjectiveInfo
) -> Membership:
    """Search ``b (x) p (x) conj(b)`` in the category for some ``b`` with ``b* b`` a member.

    ``b`` ranges over the one-row partitions on the word ``t_class`` whose
    projective ``b* b`` lies in the category; presence of the tensor product
    encodes that the group-like element commutes with ``u_p``.
    """
    p = rep_projective.p
    n = 2 * len(t_class) + p.size
    if n > cat.budget:
        return Membership(NO_UP_TO_BOUND, None, cat.budget)
    for b in _noncrossing_on(t_class, cat.cs):
        bb = compose(involute(b), b)[0]
        if not is_member(cat, bb):
            continue
        r = tensor_all([b, p, conjugate(b, cat.cs)])
        m = contains(cat, r)
        if m.yes:
            return m
    return Membership(NO_UP_TO_BOUND, None, cat.budget)


def _alternating_words(max_len: int, letters: str = "xy") -> list[str]:
    out = [""]
    for n in range(1, max_len + 1):
        for first in letters:
            other = letters[1] if first == letters[0] else letters[0]
            out.append("".join(first if i % 2 == 0 else other for i in range(n)))
    return out


def _commuting_words(probe: _Probe, c: str) -> list[str]:
    """Alternating words ``t`` (in the probe's orientation) with a commutation witness for ``u^{cc}``."""
    cat = probe.cat
    rep = projective_info(identity_word(probe.colour(c + c)))
    found = []
    for t in _alternating_words((cat.budget - 4) // 2):
        if not t:
            continue
        m = commutation_witness(cat, probe.colour(t), rep)
        probe.note(f"s_{t} commutes with u^{c}{c}", m)
        if m.yes:
            found.append(t)
    return found


# ------------------------------------------------------------------ q_k


@dataclass(frozen=True)
class QkDetection:
    members: tuple[int, ...]
    k0: int
    law_holds: bool
    k_max: int
    bound: int
    registered: tuple[int, ...] = ()
    traces: dict[int, tuple[str, ...]] = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "members": list(self.members),
            "k0": self.k0,
            "law_holds": self.law_holds,
            "k_max": self.k_max,
            "bound": self.bound,
            "registered": list(self.registered),
        }


def _qk_law(k0: int, k_max: int) -> set[int]:
    return {n * k0 + n - 1 for n in range(1, k_max + 2) if n * k0 + n - 1 <= k_max}


_PX_PAIR = Partition.make("x", "x", [[0], [1]])


def _qk_product(
    cat: Category, k: int, k2: int, tr: dict[int, tuple[str, ...]], swap: bool = False
) -> tuple[str, ...]:
    """Trace of ``q_{k+k2+1}`` as ``r* r`` for the partition ``r`` joining ``q_k`` and ``q_{k2}``."""
    view = swap_colours if swap else (lambda p: p)
    cx, cy = ("y", "x") if swap else ("x", "y")
    tw = TraceWriter(cat.cs)
    a = tw.include(tr[k])
    b = tw.include(tr[k2])
    s = tw.include(cat.trace(view(_PX_PAIR)))
    top = tw.tensor_all([a, s, b])
    y, x = tw.emit("id", cy), tw.emit("id", cx)
    p1 = tw.include(cat.trace(view(p_k(1))))
    yx, xy = tw.emit("tensor", y, x), tw.emit("tensor", x, y)
    bot = tw.tensor_all([yx] * k + [p1] + [xy] * k2)
    r = tw.emit("compose", top, bot)
    rs = tw.emit("involute", r)
    return tw.finish(tw.emit("compose", rs, r))


def detect_qk(cat: Category, k_max: int | None = None, swap: bool = False) -> QkDetection:
    """Members ``q_k`` for ``k <= k_max``; found ones are closed under ``k, k' -> k + k' + 1``.

    Products beyond the point budget are proved by an explicit trace and
    registered as members of ``cat``.  ``swap`` exchanges the colours of
    every probed partition.
    """
    view = swap_colours if swap else (lambda p: p)
    if k_max is None:
        k_max = (cat.budget - 2) // 4
    traces: dict[int, tuple[str, ...]] = {}
    for k in range(1, k_max + 1):
        m = contains(cat, view(q_k(k)))
        if m.yes:
            traces[k] = m.witness or ()
    if not traces:
        return QkDetection((), 0, True, k_max, cat.budget)
    k0 = min(traces)
    registered = []
    can_extend = is_member(cat, view(p_k(1))) and is_member(cat, view(_PX_PAIR))
    changed = can_extend
    while changed:
        changed = False
        for k, k2 in combinations_with_replacement(sorted(traces), 2):
            target = k + k2 + 1
            if target > k_max or target in traces:
                continue
            trace = _qk_product(cat, k, k2, traces, swap)
            cat.register(view(q_k(target)), trace)
            traces[target] = trace
            registered.append(target)
            changed = True
            break
    found = tuple(sorted(traces))
    law = set(found) == _qk_law(k0, k_max)
    return QkDetection(found, k0, law, k_max, cat.budget, tuple(sorted(registered)), traces)


# ------------------------------------------------------------------ reports


@dataclass
class ClassificationReport:
    family: str
    parameters: dict
    witnesses: list[dict]
    confidence: dict[str, str]
    budget: int

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "parameters": self.parameters,
            "witnesses": self.witnesses,
            "confidence": self.confidence,
            "budget": self.budget,
        }

    def summary(self) -> str:
        params = " ".join(f"{k}={_fmt(v)}" for k, v in self.parameters.items())
        return f"family: {self.family}\nparameters: {params}\nbudget: {self.budget}\n"


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_fmt(x) if x != "" else "e" for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ",".join(f"{k}:{_fmt(x)}" for k, x in v.items()) + "}"
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def _is_free_product(probe: _Probe) -> bool:
    """Evidence that the closure equals the one generated by its one-colour members on at most four points."""
    cat = probe.cat
    gens = []
    for n in range(1, 5):
        for key in cat.keys_of_size(n):
            if len({c >> 5 for c in key}) == 1:
                gens.append(cat.rep(key))
    sub = closure_generate(gens, cat.cfg, cat.cs)
    free = all(key in sub.members for key in cat.members)
    probe.bounded("free product of the one-colour parts")
    if not free:
        missing = min((k for k in cat.members if k not in sub.members), key=lambda k: (len(k), k))
        probe.note(
            "member outside the free product",
            contains(cat, cat.rep(missing)),
        )
    return free


def _finish(
    probe: _Probe, family: str, params: dict, family_exact: bool = False
) -> ClassificationReport:
    params = dict(params)
    params["colour_swap"] = probe.swap
    conf = dict(probe.confidence)
    conf["family"] = EXACT if family_exact and not probe.negative_used else UP_TO_BOUND
    return ClassificationReport(family, params, probe.witnesses, conf, probe.cat.budget)


def _check_generators(gens, cs: ColourSet) -> None:
    if not cs.is_self_inverse_xy():
        raise CategoryError("classification needs the colours x, y, both self-inverse")
    for g in gens:
        if not is_noncrossing(g):
            raise CategoryError(f"crossing generator: {format_partition(g)}")


def classify(
    gens, cfg: ClosureConfig | None = None, cs: ColourSet = XY
) -> ClassificationReport:
    gens = list(gens)
    _check_generators(gens, cs)
    cat = closure_generate(gens, cfg or ClosureConfig(), cs)
    return classify_category(cat)


def classify_category(cat: Category) -> ClassificationReport:
    if not cat.cs.is_self_inverse_xy():
        raise CategoryError("classification needs the colours x, y, both self-inverse")
    prof = block_profile(cat)
    probe = _Probe(cat)
    base = {"profile": prof.to_json()}

    # (0) the two colours are identified
    if probe.has("pi(x,y) in C", pi("x", "y")):
        factor = _orthogonal_easy(probe, "x")
        return _finish(probe, SINGLE_COLOUR if factor != UNKNOWN else UNKNOWN, {**base, "factor": factor})

    # (1) pair partitions
    if prof.all_pairs:
        if not prof.two_coloured_block_present:
            probe.bounded("no two-coloured block")
            return _finish(probe, FREE_PRODUCT, {**base, "factors": [O_PLUS, O_PLUS]})
        probe.has("D_xy*D_xy in C", compose(involute(d_pair("x", "y")), d_pair("x", "y"))[0])
        pres = grouplike_group(cat, prof)
        for rel in pres.relations:
            probe.note(f"relation {rel.word}", Membership(YES, rel.trace, cat.budget))
        if pres.order == 0:
            probe.bounded("order of s")
        return _finish(probe, O_PLUS_PLUS, {**base, "k": pres.order, "grouplike": pres.to_json()})

    # (2) blocks of size at most two, with singletons
    if prof.max_block_size <= 2:
        return _classify_bistochastic(cat, prof, base)

    # (3) even blocks, one of size four or more
    if prof.all_even:
        if not prof.two_coloured_block_present:
            probe.bounded("no two-coloured block")
            fx, fy = _orthogonal_easy(probe, "x"), _orthogonal_easy(probe, "y")
            return _finish(probe, FREE_PRODUCT, {**base, "factors": [fx, fy]})
        d, n = minimal_d(cat), minimal_n(cat)
        _note_beta_probes(probe, d, n)
        divides = (d == 0 and n == 0) or (n > 0 and (d == 0 or d % n == 0))
        params = {**base, "d": d, "n": n, "n_divides_d": divides}
        if not divides:
            return _finish(probe, UNKNOWN, {**params, "reason": "n does not divide d"})
        return _finish(probe, EVEN_WREATH, params)

    # (4) odd blocks of size three or more
    if prof.two_coloured_block_present:
        for claim, p in (
            ("P_xx in C", singleton_word("xx")),
            ("P_yy in C", singleton_word("yy")),
            ("pi(xy,xy) in C", pi("xy", "xy")),
        ):
            probe.has(claim, p)
        d, n = minimal_d(cat), minimal_n(cat)
        _note_beta_probes(probe, d, n)
        m = _minimal_m(probe, n)
        return _finish(probe, ODD_WREATH, {**base, "d": d, "n": n, "m": m})
    return _classify_symmetric(cat, prof, base)


def _note_beta_probes(probe: _Probe, d: int, n: int) -> None:
    if d:
        probe.has(f"pi((xy)^{d}) in C", pi("xy" * d, ""))
    else:
        probe.bounded("d")
    if n:
        probe.has(f"beta((xy)^{n},(xy)^{n}) in C", beta("xy" * n, "xy" * n))
    else:
        probe.bounded("n")


def _minimal_m(probe: _Probe, n: int) -> int:
    """Smallest ``k >= 0`` with ``beta((xy)^k x, (xy)^k x)`` a member, reduced mod ``n``; -1 if none."""
    cat = probe.cat
    k = 0
    while 2 * (2 * k + 1) <= cat.budget:
        w = "xy" * k + "x"
        if probe.has(f"beta({w},{w}) in C", beta(w, w), record=False):
            probe.has(f"beta({w},{w}) in C", beta(w, w))
            return k % n if n else k
        k += 1
    probe.bounded("m")
    return -1


def _orient_singletons(prof: BlockProfile) -> bool:
    """Swap when only ``y`` carries singletons."""
    return "x" not in prof.singleton_colours and "y" in prof.singleton_colours


def _classify_bistochastic(cat: Category, prof: BlockProfile, base: dict) -> ClassificationReport:
    probe = _Probe(cat, swap=_orient_singletons(prof))
    probe.has("P_xx in C", singleton_word("xx"))
    pres = grouplike_group(cat, prof)
    grouplike = pres.to_json()
    if probe.swap:
        grouplike["sx2"], grouplike["sy2"] = grouplike["sy2"], grouplike["sx2"]
    if prof.two_coloured_block_present:
        pxy = pi("x", "y")
        coset = []
        for t in _alternating_words((cat.budget - 4) // 2):
            pt = singleton_word(t) if t else Partition("", "", ())
            r = tensor_all([pt, pxy, pxy, conjugate(pt, cat.cs)])
            if probe.has(f"P_{t or 'e'} pi(x,y) pi(x,y) P_{t or 'e'}* in C", r):
                coset.append(t)
        coset_ok = _coset_consistent(probe, coset)
        params = {**base, "K": coset, "coset_consistent": coset_ok, "grouplike": grouplike}
        return _finish(probe, B_PLUS_PLUS, params)
    has_pyy = probe.has("P_yy in C", singleton_word("yy"))
    fx = _orthogonal_easy(probe, "x")
    fy = _orthogonal_easy(probe, "y")
    params = {**base, "factors": [fx, fy], "grouplike": grouplike}
    if _is_free_product(probe):
        return _finish(probe, FREE_PRODUCT, params)
    params["commuting_xx"] = _commuting_words(probe, "x")
    params["commuting_yy"] = _commuting_words(probe, "y")
    if not has_pyy:
        probe.has("P_x pi(y,y) pi(y,y) P_x in C", tensor_all(
            [singleton_word("x"), identity("y"), identity("y"), conjugate(singleton_word("x"))]
        ))
        return _finish(probe, BO_SHARP, params)
    return _finish(probe, BISTOCHASTIC_QUOTIENT, params)


def _coset_consistent(probe: _Probe, words: list[str]) -> bool:
    """Any two coset words differ by an element commuting with ``u^{xx}``."""
    rep = projective_info(identity_word(probe.colour("xx")))
    ok = True
    for i, a in enumerate(words):
        for b in words[i + 1 :]:
            diff = reduce_alternating(a[::-1] + b)
            if not diff:
                continue
            m = commutation_witness(probe.cat, probe.colour(diff), rep)
            probe.note(f"s_{diff} commutes with u^xx", m)
            ok = ok and m.yes
    return ok


def _symmetric_orientation(fx: str, fy: str) -> bool | None:
    """Whether to swap so that ``x`` carries the odd blocks; None when no case applies."""
    odd = ODD_FACTORS
    if fy == H_PLUS and fx in odd or fx in SYMMETRIC_FACTORS and fy in PAIR_FACTORS:
        return False
    if fx == H_PLUS and fy in odd or fy in SYMMETRIC_FACTORS and fx in PAIR_FACTORS:
        return True
    if fx in SYMMETRIC_FACTORS and fy in SYMMETRIC_FACTORS:
        return False
    return None


def _classify_symmetric(cat: Category, prof: BlockProfile, base: dict) -> ClassificationReport:
    """One-colour blocks, an odd block, and a block of size at least three."""
    probe = _Probe(cat)
    fx = _orthogonal_easy(probe, "x")
    fy = _orthogonal_easy(probe, "y")
    swap = _symmetric_orientation(fx, fy)
    if swap:
        probe.swap = True
        fx, fy = fy, fx
    pres = grouplike_group(cat, prof)
    grouplike = pres.to_json()
    if swap:
        grouplike["sx2"], grouplike["sy2"] = grouplike["sy2"], grouplike["sx2"]
    params = {**base, "factors": [fx, fy], "grouplike": grouplike}
    if swap is None:
        return _finish(probe, UNKNOWN, {**params, "reason": f"unexpected factor pair {fx}, {fy}"})
    if _is_free_product(probe):
        return _finish(probe, FREE_PRODUCT, params)
    params["commuting_xx"] = _commuting_words(probe, "x")
    if fy in PAIR_FACTORS:
        params["commuting_yy"] = _commuting_words(probe, "y")
        return _finish(probe, SYMMETRIC_BISTOCHASTIC_QUOTIENT, params)
    if fy == H_PLUS:
        probe.has("P_x pi(yy,yy) P_x* in C", tensor_all(
            [singleton_word("x"), pi("yy", "yy"), involute(singleton_word("x"))]
        ))
        qk = detect_qk(cat, swap=probe.swap)
        for k in qk.members:
            probe.note(f"q_{k} in C", Membership(YES, qk.traces[k], cat.budget))
        if not qk.members:
            probe.bounded("q_k in C for some k")
        params["qk"] = qk.to_json()
        return _finish(probe, SYMMETRIC_HYPEROCTAHEDRAL_QUOTIENT, params)
    params["commuting_yy"] = _commuting_words(probe, "y")
    return _finish(probe, SYMMETRIC_QUOTIENT, params)


# ------------------------------------------------------------------ estimator facade


class CategoryClassifier:
    """Thin fit/predict wrapper: fit closes a generator set, predict names its family."""

    def __init__(self, point_budget: int = 12, workers: int = 1):
        self.point_budget = point_budget
        self.workers = workers

    def get_params(self, deep: bool = True) -> dict:
        return {"point_budget": self.point_budget, "workers": self.workers}

    def fit(self, gens, cs: ColourSet = XY) -> "CategoryClassifier":
        gens = list(gens)
        _check_generators(gens, cs)
        cfg = ClosureConfig(point_budget=self.point_budget, workers=self.workers)
        self.category_ = closure_generate(gens, cfg, cs)
        self.report_ = classify_category(self.category_)
        return self

    def predict(self) -> str:
        return self.report_.family
