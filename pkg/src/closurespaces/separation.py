"""Separation relations and reconstruction of closure tables from them.

A separation relation is a set of unordered pairs of subsets.  Pairs are
stored canonically as (lo, hi) with lo <= hi numerically; a pair may relate
a subset to itself (the pair {∅, ∅} in particular is forced whenever the
reconstruction conditions hold).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    ClosureSpaceError,
    GroundSet,
    MaskOutOfRange,
    Space,
    are_separated,
    make_space,
)


class ConditionsViolated(ClosureSpaceError):
    """Relation fails the reconstruction conditions; carries the report."""

    def __init__(self, report: "ConditionReport") -> None:
        super().__init__(f"relation violates reconstruction conditions: {report}")
        self.report = report


@dataclass(frozen=True)
class SeparationRelation:
    ground: GroundSet
    pairs: frozenset[tuple[int, int]]

    def contains(self, a: int, b: int) -> bool:
        return (a, b) in self.pairs if a <= b else (b, a) in self.pairs


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the two reconstruction conditions.

    witness1 is a triple (A, B, C) with A ⊆ B, {B, C} related but {A, C}
    not; witness2 is a pair (A, B) whose singleton hypotheses hold while
    {A, B} is missing.  Witnesses are the first found in ascending numeric
    order, so failures are reproducible.
    """

    condition1: bool
    condition2: bool
    witness1: tuple[int, int, int] | None = None
    witness2: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.condition1 and self.condition2


def make_relation(gset: GroundSet, pairs: Iterable[tuple[int, int]]) -> SeparationRelation:
    """Build a relation, canonicalizing each pair to (min, max)."""
    canon = set()
    for a, b in pairs:
        if not 0 <= a <= gset.full or not 0 <= b <= gset.full:
            raise MaskOutOfRange(f"relation pair out of range: ({a}, {b})")
        canon.add((a, b) if a <= b else (b, a))
    return SeparationRelation(gset, frozenset(canon))


def separated_pairs(space: Space) -> SeparationRelation:
    """The relation of all separated pairs of the space, pairs with A = B
    included."""
    size = space.ground.size
    pairs = set()
    for a in range(size):
        for b in range(a, size):
            if are_separated(space, a, b):
                pairs.add((a, b))
    return SeparationRelation(space.ground, frozenset(pairs))


def check_relation_conditions(rel: SeparationRelation) -> ConditionReport:
    """Check the two conditions a relation must satisfy to define a closure.

    Condition 1: shrinking either member of a related pair keeps it related.
    Condition 2: if every singleton of A is related to B and every singleton
    of B is related to A, then {A, B} is related.  Both quantifiers include
    the empty set, whose singleton hypotheses hold vacuously.
    """
    size = rel.ground.size
    n = rel.ground.n

    witness1 = None
    for a in range(size):
        for b in range(size):
            if a & ~b:
                continue
            for c in range(size):
                if rel.contains(b, c) and not rel.contains(a, c):
                    witness1 = (a, b, c)
                    break
            if witness1 is not None:
                break
        if witness1 is not None:
            break

    witness2 = None
    for a in range(size):
        for b in range(a, size):
            if rel.contains(a, b):
                continue
            hyp = all(
                rel.contains(1 << x, b) for x in range(n) if (a >> x) & 1
            ) and all(rel.contains(1 << y, a) for y in range(n) if (b >> y) & 1)
            if hyp:
                witness2 = (a, b)
                break
        if witness2 is not None:
            break

    return ConditionReport(witness1 is None, witness2 is None, witness1, witness2)


def closure_from_relation(rel: SeparationRelation) -> Space:
    """Reconstruct the closure table: cl(A) = {x : {{x}, A} not related}.

    Requires both reconstruction conditions; the result is always isotonic
    and pointwise-symmetric, and its separated pairs are exactly ``rel``.
    """
    report = check_relation_conditions(rel)
    if not report.ok:
        raise ConditionsViolated(report)
    n = rel.ground.n
    table = []
    for a in range(rel.ground.size):
        m = 0
        for x in range(n):
            if not rel.contains(1 << x, a):
                m |= 1 << x
        table.append(m)
    return make_space(rel.ground, table)


@dataclass(frozen=True)
class RelationCriteria:
    """Relation-level counterparts of the closure axioms."""

    grounded_crit: bool
    enlarging_crit: bool
    sublinear_crit: bool
    idempotent_sufficient: bool


def relation_axiom_criteria(rel: SeparationRelation) -> RelationCriteria:
    """Evaluate the axiom criteria directly on the relation."""
    size = rel.ground.size
    n = rel.ground.n

    grounded_crit = all(rel.contains(1 << x, 0) for x in range(n))

    enlarging_crit = all(a & b == 0 for a, b in rel.pairs)

    sublinear_crit = True
    for a in range(size):
        for b in range(size):
            if not rel.contains(a, b):
                continue
            for c in range(b, size):
                if rel.contains(a, c) and not rel.contains(a, b | c):
                    sublinear_crit = False
                    break
            if not sublinear_crit:
                break
        if not sublinear_crit:
            break

    idempotent_sufficient = True
    for x in range(n):
        sx = 1 << x
        for b in range(size):
            if rel.contains(sx, b):
                continue
            for a in range(size):
                if not rel.contains(sx, a):
                    continue
                if all(
                    not rel.contains(1 << y, a) for y in range(n) if (b >> y) & 1
                ):
                    idempotent_sufficient = False
                    break
            if not idempotent_sufficient:
                break
        if not idempotent_sufficient:
            break

    return RelationCriteria(grounded_crit, enlarging_crit, sublinear_crit, idempotent_sufficient)


def roundtrip_ok(space: Space) -> bool:
    """True iff reconstructing from the space's separated pairs reproduces
    its table exactly."""
    rel = separated_pairs(space)
    try:
        rebuilt = closure_from_relation(rel)
    except ConditionsViolated:
        return False
    return rebuilt.table == space.table
