"""Total functions between closure spaces and the four morphism predicates.

Each predicate is evaluated by its definition over all subsets of the
relevant carrier (O(4**n) pairs in the worst case), never via the
implications between them, so those implications stay independently
checkable.  Quantifiers include the empty and full subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import ElementOutOfRange, MaskOutOfRange, Space, are_separated


@dataclass(frozen=True)
class SpaceMap:
    """Total function between carriers: assignment[i] is the index of f(i)."""

    domain: Space
    codomain: Space
    assignment: tuple[int, ...]


@dataclass(frozen=True)
class MapProfile:
    closure_preserving: bool
    continuous: bool
    nonseparating: bool
    preimage_separating: bool


def make_map(domain: Space, codomain: Space, assignment: Sequence[int]) -> SpaceMap:
    entries = tuple(int(v) for v in assignment)
    if len(entries) != domain.ground.n:
        raise ElementOutOfRange(
            f"assignment must cover all {domain.ground.n} domain elements, got {len(entries)}"
        )
    for i, v in enumerate(entries):
        if not 0 <= v < codomain.ground.n:
            raise ElementOutOfRange(f"assignment for element {i} is out of range: {v}")
    return SpaceMap(domain, codomain, entries)


def image(mp: SpaceMap, a: int) -> int:
    """f(A) as a codomain mask."""
    if not 0 <= a <= mp.domain.ground.full:
        raise MaskOutOfRange(f"subset mask out of range: {a}")
    m = 0
    for i in range(mp.domain.ground.n):
        if (a >> i) & 1:
            m |= 1 << mp.assignment[i]
    return m


def preimage(mp: SpaceMap, b: int) -> int:
    """f⁻¹(B) as a domain mask."""
    if not 0 <= b <= mp.codomain.ground.full:
        raise MaskOutOfRange(f"subset mask out of range: {b}")
    m = 0
    for i in range(mp.domain.ground.n):
        if (b >> mp.assignment[i]) & 1:
            m |= 1 << i
    return m


def is_closure_preserving(mp: SpaceMap) -> bool:
    """f(cl(A)) ⊆ cl(f(A)) for every domain subset A."""
    tx = mp.domain.table
    ty = mp.codomain.table
    for a in range(mp.domain.ground.size):
        if image(mp, tx[a]) & ~ty[image(mp, a)]:
            return False
    return True


def is_continuous(mp: SpaceMap) -> bool:
    """cl(f⁻¹(B)) ⊆ f⁻¹(cl(B)) for every codomain subset B."""
    tx = mp.domain.table
    ty = mp.codomain.table
    for b in range(mp.codomain.ground.size):
        if tx[preimage(mp, b)] & ~preimage(mp, ty[b]):
            return False
    return True


def is_nonseparating(mp: SpaceMap) -> bool:
    """Pairs with separated images were already separated in the domain."""
    size = mp.domain.ground.size
    for a in range(size):
        for b in range(a, size):
            if are_separated(mp.codomain, image(mp, a), image(mp, b)) and not are_separated(
                mp.domain, a, b
            ):
                return False
    return True


def preimage_separation(mp: SpaceMap) -> bool:
    """Preimages of separated codomain pairs are separated in the domain."""
    size = mp.codomain.ground.size
    for c in range(size):
        for d in range(c, size):
            if are_separated(mp.codomain, c, d) and not are_separated(
                mp.domain, preimage(mp, c), preimage(mp, d)
            ):
                return False
    return True


def map_profile(mp: SpaceMap) -> MapProfile:
    return MapProfile(
        is_closure_preserving(mp),
        is_continuous(mp),
        is_nonseparating(mp),
        preimage_separation(mp),
    )
