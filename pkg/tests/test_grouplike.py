import pytest

from ncpart.category import (
    NO_UP_TO_BOUND,
    CategoryError,
    ClosureConfig,
    closure_generate,
    is_member,
    projective_info,
    reduce_alternating,
    replay_trace,
)
from ncpart.classifier import block_profile
from ncpart.grouplike import (
    CYCLIC,
    DIHEDRAL_QUOTIENT,
    cyclic_core,
    grouplike_group,
    is_trivial_onedim,
    minimal_d,
    minimal_n,
    one_dim_class,
    order_of_s,
)
from ncpart.partition import (
    EMPTY,
    compose,
    d_pair,
    identity,
    involute,
    parse_colours,
    pi,
    singleton_word,
)

from conftest import closure_of


def star(p):
    return compose(involute(p), p)[0]


DXY = star(d_pair("x", "y"))


def test_one_dim_class_examples():
    cat = closure_of("opp", 8)
    assert one_dim_class(cat, projective_info(DXY)) == "xy"
    assert one_dim_class(cat, projective_info(EMPTY)) == ""
    bb = closure_of("bb", 8)
    assert one_dim_class(bb, projective_info(star(singleton_word("x")))) == "x"
    with pytest.raises(CategoryError):
        one_dim_class(cat, projective_info(identity("x")))


def test_is_trivial_onedim_examples():
    cat = closure_of("opp", 8)
    assert is_trivial_onedim(cat, projective_info(EMPTY)).yes
    assert is_trivial_onedim(cat, projective_info(DXY)).verdict == NO_UP_TO_BOUND
    with_px = closure_generate([singleton_word("x")], ClosureConfig(point_budget=6))
    assert is_trivial_onedim(with_px, projective_info(star(singleton_word("x")))).yes


def test_order_of_s_examples():
    assert order_of_s(closure_of("opp", 8)) == 0
    assert order_of_s(closure_of("opp_k2", 8)) == 2
    s_trivial = closure_generate([pi("xy", "")], ClosureConfig(point_budget=6))
    assert order_of_s(s_trivial) == 1


def test_minimal_d_examples():
    assert minimal_d(closure_of("gamma2", 10)) == 2
    no_d = closure_generate([pi("xx", "xx"), pi("xy", "xy")], ClosureConfig(point_budget=10))
    assert minimal_d(no_d) == 0
    assert minimal_d(closure_generate([d_pair("x", "y")], ClosureConfig(point_budget=6))) == 1


def test_minimal_n_examples():
    assert minimal_n(closure_of("ew21", 8)) == 1
    # beta((xy)^2, (xy)^2) follows from the one-block generator by tensor and cap
    assert minimal_n(closure_of("gamma2", 8)) == 2
    assert minimal_n(closure_of("oo", 8)) == 0


def test_grouplike_group_examples():
    opp = closure_of("opp", 8)
    g = grouplike_group(opp, block_profile(opp))
    assert (g.shape, g.order) == (CYCLIC, 0)
    assert g.serialize().startswith("group: cyclic k=0\n")
    ew = closure_of("ew42", 10)
    g = grouplike_group(ew, block_profile(ew))
    assert (g.shape, g.d, g.order) == (CYCLIC, 4, 2)
    bb = closure_of("bb", 8)
    g = grouplike_group(bb, block_profile(bb))
    assert g.shape == DIHEDRAL_QUOTIENT and g.sx2 and g.sy2 and g.d == 0
    assert g.serialize().splitlines()[0] == "group: dihedral d=0 sx2=true sy2=true"


@pytest.mark.parametrize("name,budget", [("ew21", 10), ("ew22", 10), ("ew42", 10), ("gamma2", 10)])
def test_n_divides_d(name, budget):
    cat = closure_of(name, budget)
    d, n = minimal_d(cat), minimal_n(cat)
    assert d and n and d % n == 0


@pytest.mark.parametrize("name", ["opp", "opp_k2", "bb", "bpp", "ew42", "bosharp"])
def test_relation_witnesses_are_sound(name):
    cat = closure_of(name, 8)
    g = grouplike_group(cat, block_profile(cat))
    for rel in g.relations:
        assert is_member(cat, rel.witness)
        assert replay_trace(rel.trace, cat.cs, cat.generators) == rel.witness
        assert rel.word in (rel.witness.upper, reduce_alternating(rel.witness.upper))


@pytest.mark.parametrize("name", ["opp_k2", "bpp", "bosharp"])
def test_class_words_are_normal_forms(name):
    cat = closure_of(name, 8)
    singletons = block_profile(cat).has_singleton
    for key in cat.members:
        word = "".join(cat.colours[c >> 5] for c in key)
        w = reduce_alternating(word)
        assert all(a != b for a, b in zip(w, w[1:]))
        if not singletons:
            assert len(w) % 2 == 0


def test_cyclic_core():
    assert cyclic_core("xyx") == "y"
    assert cyclic_core("xyxy") == "xyxy"
    assert cyclic_core("xxyy") == ""


def test_requires_two_self_inverse_colours():
    cat = closure_generate([d_pair("x", "x")], ClosureConfig(point_budget=4), parse_colours("colours=x:x"))
    with pytest.raises(CategoryError):
        grouplike_group(cat, block_profile(cat))
