"""Group of one-dimensional representations of a two-colour category.

A projective partition without through-blocks is ``b* b`` for its upper row
``b``; its one-dimensional representation is labelled by the colouring of
``b`` reduced by cancelling neighbouring equal letters, and it is trivial
exactly when ``b`` itself lies in the category.  For two self-inverse colours
the resulting group is a quotient of the infinite dihedral group, so every
relation is either a single letter or a power of ``xy``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from . import _oneline as ol
from .category import (
    Category,
    CategoryError,
    Membership,
    ProjectiveInfo,
    contains,
    is_member,
    reduce_alternating,
)
from .partition import Partition, beta, format_partition, pi, singleton_word, upper_row

if TYPE_CHECKING:  # pragma: no cover
    from .classifier import BlockProfile

CYCLIC = "CYCLIC"
DIHEDRAL_QUOTIENT = "DIHEDRAL_QUOTIENT"


@dataclass(frozen=True)
class Relation:
    """A relation ``word = 1`` witnessed by a member whose upper row is coloured ``word``."""

    word: str
    witness: Partition
    trace: tuple[str, ...]


@dataclass(frozen=True)
class GroupLikePresentation:
    shape: str
    generators: tuple[str, ...]
    bound: int
    order: int = 0
    d: int = 0
    sx2: bool = False
    sy2: bool = False
    relations: tuple[Relation, ...] = field(default=())

    def serialize(self) -> str:
        if self.shape == CYCLIC:
            head = f"group: cyclic k={self.order}"
        else:
            head = (
                f"group: dihedral d={self.d} sx2={str(self.sx2).lower()} "
                f"sy2={str(self.sy2).lower()}"
            )
        lines = [head]
        for rel in self.relations:
            lines.append(f"witness {rel.word or '1'} {format_partition(rel.witness)}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "shape": self.shape,
            "generators": list(self.generators),
            "order": self.order,
            "d": self.d,
            "sx2": self.sx2,
            "sy2": self.sy2,
            "bound": self.bound,
            "relations": [
                {"word": r.word, "witness": format_partition(r.witness)} for r in self.relations
            ],
        }


def _require_t0(p: ProjectiveInfo) -> None:
    if p.t != 0:
        raise CategoryError("one-dimensional class needs a projective without through-blocks")


def one_dim_class(cat: Category, p: ProjectiveInfo) -> str:
    """Reduced colouring of the upper row of a projective with ``t = 0``."""
    _require_t0(p)
    return reduce_alternating(p.p.upper)


def is_trivial_onedim(cat: Category, p: ProjectiveInfo) -> Membership:
    _require_t0(p)
    return contains(cat, upper_row(p.p))


def cyclic_core(word: str) -> str:
    """Reduced form of a word up to conjugation (cancel, then strip equal ends)."""
    w = reduce_alternating(word)
    while len(w) >= 2 and w[0] == w[-1]:
        w = w[1:-1]
    return w


def relation_cores(cat: Category) -> dict[str, bytes]:
    """Every conjugation-reduced relation word found, with the smallest member key."""
    out: dict[str, bytes] = {}
    colours = cat.colours
    for key in sorted(cat.members, key=lambda k: (len(k), k)):
        word = "".join(colours[c >> 5] for c in key)
        core = cyclic_core(word)
        if core not in out:
            out[core] = key
    return out


def _relation(cat: Category, key: bytes, core: str) -> Relation:
    """A rotation of the member ``key`` whose upper row reduces exactly to ``core``."""
    best = None
    for v in ol.variants(key, cat.cinv):
        p = cat.rep(v)
        red = reduce_alternating(p.upper)
        if red == core:
            best = p
            break
        if best is None and cyclic_core(red) == core:
            best = p
    assert best is not None
    return Relation(reduce_alternating(best.upper), best, cat.trace(best))


def _alternating_power(core: str) -> int:
    """``j`` when ``core`` is ``(xy)^j`` or ``(yx)^j``; 0 otherwise."""
    if len(core) >= 2 and len(core) % 2 == 0 and core in (core[:2] * (len(core) // 2),):
        if core[0] != core[1]:
            return len(core) // 2
    return 0


def order_of_s(cat: Category) -> int:
    """Smallest ``k`` with a member whose colouring reduces to ``(xy)^k``; 0 if none."""
    return _order_and_witness(cat)[0]


def _order_and_witness(cat: Category) -> tuple[int, Relation | None]:
    best = 0
    best_key = None
    best_core = ""
    for core, key in relation_cores(cat).items():
        j = _alternating_power(core)
        if j and (best == 0 or j < best):
            best, best_key, best_core = j, key, core
    if best_key is None:
        return 0, None
    return best, _relation(cat, best_key, best_core)


def minimal_d(cat: Category) -> int:
    """Smallest ``k`` with the one-block ``pi((xy)^k, empty)`` a member; 0 if none."""
    k = 1
    while 2 * k <= cat.budget:
        if is_member(cat, pi("xy" * k, "")):
            return k
        k += 1
    return 0


def minimal_n(cat: Category) -> int:
    """Smallest ``k >= 1`` with ``beta((xy)^k, (xy)^k)`` a member; 0 if none."""
    k = 1
    while 4 * k <= cat.budget:
        if is_member(cat, beta("xy" * k, "xy" * k)):
            return k
        k += 1
    return 0


def _member_relation(cat: Category, p: Partition, word: str) -> Relation:
    return Relation(word, p, cat.trace(p))


def grouplike_group(cat: Category, profile: "BlockProfile") -> GroupLikePresentation:
    """Cyclic or dihedral presentation of the group-like elements, with witnesses."""
    if not cat.cs.is_self_inverse_xy():
        raise CategoryError("group-like analysis needs the colours x, y, both self-inverse")
    bound = cat.budget
    if profile.all_pairs:
        k, rel = _order_and_witness(cat)
        return GroupLikePresentation(CYCLIC, ("s",), bound, order=k, relations=(rel,) if rel else ())
    if profile.all_even:
        d, n = minimal_d(cat), minimal_n(cat)
        rels = []
        if d:
            rels.append(_member_relation(cat, pi("xy" * d, ""), "xy" * d))
        if n:
            rels.append(_member_relation(cat, beta("xy" * n, "xy" * n), "xy" * n))
        order = d // n if d and n and d % n == 0 else 0
        return GroupLikePresentation(CYCLIC, ("s",), bound, order=order, d=d, relations=tuple(rels))
    sx2 = is_member(cat, singleton_word("xx"))
    sy2 = is_member(cat, singleton_word("yy"))
    rels = []
    if sx2:
        rels.append(_member_relation(cat, singleton_word("xx"), "xx"))
    if sy2:
        rels.append(_member_relation(cat, singleton_word("yy"), "yy"))
    d, rel = _order_and_witness(cat)
    if rel is not None:
        rels.append(rel)
    gens = ("s_x", "s_y") if sy2 or not sx2 else ("s_x", "s_#")
    return GroupLikePresentation(
        DIHEDRAL_QUOTIENT, gens, bound, d=d, sx2=sx2, sy2=sy2, relations=tuple(rels)
    )
