"""Acceptance criteria; each test prints one PASS/FAIL line in the terminal summary."""

import glob
import os

import pytest
from hypothesis import HealthCheck, given, settings

from ncpart.category import (
    ClosureConfig,
    closure_generate,
    is_member,
    load_category_file,
    replay_trace,
)
from ncpart.classifier import (
    B_PLUS_PLUS,
    EVEN_WREATH,
    FREE_PRODUCT,
    O_PLUS,
    O_PLUS_PLUS,
    ODD_WREATH,
    block_profile,
    classify_category,
    detect_qk,
)
from ncpart.grouplike import CYCLIC, grouplike_group
from ncpart.linmap import audit_compositions, exact_rank, mor_dimension, tp_matrix
from ncpart.partition import (
    XY,
    Partition,
    compose,
    conjugate,
    d_pair,
    involute,
    p_k,
    parse_colours,
    pi,
    q_k,
    rotate,
    singleton_word,
    tensor,
    tensor_all,
)
from scipy import sparse

import oracles
from strategies import composable_pair, composable_triple, partitions

from conftest import GENS, closure_of

X_ONLY = parse_colours("colours=x:x")
D_XY = d_pair("x", "y")
DXY_PROJ = compose(involute(D_XY), D_XY)[0]
GAMMA2 = [pi("xx", "xx"), pi("xy", "xy"), pi("xyxy", "")]
INSTANCES = 10_000


def criterion(n, title):
    return pytest.mark.criterion(n, title)


# ------------------------------------------------------------------ 1


@criterion(1, "composition law on the closures of D_xx, D_xy*D_xy and Gamma_2 at budget 8")
@pytest.mark.parametrize(
    "gens,cs",
    [([d_pair("x", "x")], X_ONLY), ([DXY_PROJ], XY), (GAMMA2, XY)],
    ids=["dxx", "opp", "gamma2"],
)
def test_criterion_1_composition_law(gens, cs):
    cat = closure_generate(gens, ClosureConfig(point_budget=8), cs)
    audit = audit_compositions(cat, ns=(3, 4, 5))
    assert audit.shape_pairs > 0 and audit.checks == 3 * audit.shape_pairs
    assert audit.ok, audit.failures[:3]


# ------------------------------------------------------------------ 2


@criterion(2, "linear independence of noncrossing maps at N=4,5; dependence at N=2")
def test_criterion_2_linear_independence():
    cs, gens = load_category_file(os.path.join(GENS, "nc.gens"))
    nc = closure_generate(gens, ClosureConfig(point_budget=6), cs)
    for total in range(7):
        expected = sum(1 for _ in oracles.noncrossing_partitions(total))
        assert expected == oracles.catalan(total)
        for upper in range(total + 1):
            w, w2 = "x" * upper, "x" * (total - upper)
            for n in (4, 5):
                assert mor_dimension(nc, w, w2, n) == (expected, expected)
    assert [oracles.catalan(n) for n in (4, 5, 6)] == [14, 42, 132]

    # N=2: pairings on six points, crossing ones included, are dependent
    pairings = [p for p in oracles.set_partitions(6) if all(len(b) == 2 for b in p)]
    rows = sparse.vstack(
        [tp_matrix(Partition.make("x" * 6, "", p), 2).to_sparse() for p in pairings]
    )
    assert len(pairings) == 15 and exact_rank(rows) < 15
    # the noncrossing pairings alone stay independent at N=2
    onc = closure_generate([pi("xx", "")], ClosureConfig(point_budget=6), X_ONLY)
    assert mor_dimension(onc, "x" * 6, "", 2) == (5, 5)
    # all noncrossing partitions on six points cannot be independent in 2^6 dimensions
    count, rank = mor_dimension(nc, "x" * 6, "", 2)
    assert count == 132 and rank < count


# ------------------------------------------------------------------ 3

ROUND_TRIPS = [
    ("oo", FREE_PRODUCT, {"factors": [O_PLUS, O_PLUS]}),
    ("opp", O_PLUS_PLUS, {"k": 0}),
    ("opp_k2", O_PLUS_PLUS, {"k": 2}),
    ("bpp", B_PLUS_PLUS, {"K": [""]}),
    ("ew21", EVEN_WREATH, {"d": 2, "n": 1}),
    ("ew22", EVEN_WREATH, {"d": 2, "n": 2}),
    ("ew42", EVEN_WREATH, {"d": 4, "n": 2}),
    ("ow221", ODD_WREATH, {"d": 2, "n": 2, "m": 1}),
]


@criterion(3, "classifier round-trips at budget 12")
@pytest.mark.parametrize("name,family,params", ROUND_TRIPS, ids=[r[0] for r in ROUND_TRIPS])
def test_criterion_3_round_trip(name, family, params):
    report = classify_category(closure_of(name, 12))
    assert report.family == family
    for key, value in params.items():
        assert report.parameters[key] == value, key
    if family == EVEN_WREATH:
        d, n = report.parameters["d"], report.parameters["n"]
        assert report.parameters["n_divides_d"] and d % n == 0


# --------------------------------------------------------------- 4, 5


def qk_closure(k):
    gens = [q_k(k), singleton_word("xx"), pi("yy", "yy")]
    return closure_generate(gens, ClosureConfig(point_budget=12))


@criterion(4, "q_k spectrum {1,3,5} from q_1 and {2,5,8} from q_2")
@pytest.mark.parametrize("k,k_max,expected", [(1, 5, (1, 3, 5)), (2, 8, (2, 5, 8))])
def test_criterion_4_qk_spectrum(k, k_max, expected):
    cat = qk_closure(k)
    det = detect_qk(cat, k_max)
    assert det.members == expected and det.k0 == k and det.law_holds
    for j in det.members:
        assert replay_trace(det.traces[j], XY, cat.generators) == q_k(j)


@criterion(5, "closures containing q_k contain p_1 and P_x (x) pi(yy,yy) (x) P_x*")
@pytest.mark.parametrize("k", [1, 2])
def test_criterion_5_qk_chain(k):
    cat = qk_closure(k)
    px = singleton_word("x")
    assert is_member(cat, p_k(1))
    assert is_member(cat, tensor_all([px, pi("yy", "yy"), involute(px)]))


# ------------------------------------------------------------------ 6


@criterion(6, "group-like structure of the bistochastic pair and of O++")
def test_criterion_6_grouplike():
    bb = closure_of("bb", 8)
    pres = grouplike_group(bb, block_profile(bb))
    assert pres.sx2 and pres.sy2
    words = {r.word: r for r in pres.relations}
    for word, p in (("xx", singleton_word("xx")), ("yy", singleton_word("yy"))):
        assert replay_trace(words[word].trace, XY, bb.generators) == p
    assert "sx2=true sy2=true" in pres.serialize()

    opp = closure_generate([DXY_PROJ], ClosureConfig(point_budget=12))
    pres = grouplike_group(opp, block_profile(opp))
    assert pres.shape == CYCLIC and pres.order == 0 and pres.relations == ()
    assert pres.serialize() == "group: cyclic k=0\n"


# ------------------------------------------------------------------ 7

PROPERTY = settings(
    max_examples=INSTANCES,
    deadline=None,
    database=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)


def noncrossing(p):
    return not oracles.has_crossing(p.k, p.l, p.blocks)


@criterion(7, "engine invariants over 10^4 instances each")
def test_criterion_7_engine_invariants():
    counts = dict.fromkeys(("noncrossing", "associativity", "involution", "rotation"), 0)

    @PROPERTY
    @given(composable_pair(), partitions())
    def closed(pair, s):
        q, p = pair
        outs = [compose(q, p)[0], tensor(p, s), involute(s), conjugate(s)]
        if s.k:
            outs += [rotate(s, "left", "down"), rotate(s, "right", "down")]
        if s.l:
            outs += [rotate(s, "left", "up"), rotate(s, "right", "up")]
        assert all(noncrossing(o) for o in outs)
        counts["noncrossing"] += 1

    @PROPERTY
    @given(composable_triple())
    def associative(triple):
        r, q, p = triple
        qp, a = compose(q, p)
        left, b = compose(r, qp)
        rq, c = compose(r, q)
        right, d = compose(rq, p)
        assert left == right and a + b == c + d
        counts["associativity"] += 1

    @PROPERTY
    @given(composable_pair(), partitions())
    def involution(pair, s):
        q, p = pair
        r, loops = compose(q, p)
        assert compose(involute(p), involute(q)) == (involute(r), loops)
        assert involute(tensor(p, s)) == tensor(involute(p), involute(s))
        assert involute(involute(s)) == s
        counts["involution"] += 1

    @PROPERTY
    @given(partitions())
    def rotation(s):
        if s.k:
            assert rotate(rotate(s, "left", "down"), "left", "up") == s
            assert rotate(rotate(s, "right", "down"), "right", "up") == s
        if s.l:
            assert rotate(rotate(s, "left", "up"), "left", "down") == s
            assert rotate(rotate(s, "right", "up"), "right", "down") == s
        assert conjugate(conjugate(s)) == s
        counts["rotation"] += 1

    for prop in (closed, associative, involution, rotation):
        prop()
    assert all(c >= INSTANCES for c in counts.values()), counts


# ------------------------------------------------------------------ 8

GEN_FILES = sorted(glob.glob(os.path.join(GENS, "*.gens")))


@criterion(8, "closure dumps identical under different parallel schedules")
@pytest.mark.parametrize("path", GEN_FILES, ids=[os.path.basename(p) for p in GEN_FILES])
def test_criterion_8_determinism(path):
    cs, gens = load_category_file(path)
    budget = max([10] + [g.size for g in gens])
    serial = closure_generate(gens, ClosureConfig(point_budget=budget), cs).dump()
    parallel = closure_generate(
        gens, ClosureConfig(point_budget=budget, workers=3, chunk_size=17), cs
    ).dump()
    assert serial == parallel and serial
