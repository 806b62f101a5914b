"""Finite generalized closure spaces.

Closure tables over carriers of up to 16 labeled elements, the derived
interior/exterior/neighborhood operators, axiom and separation predicates,
separation relations with reconstruction, total maps with the four morphism
predicates, desk-scale enumeration, and a claim catalog swept exhaustively
for counterexamples.
"""

from .core import (
    AxiomProfile,
    ClosureSpaceError,
    ElementOutOfRange,
    GroundSet,
    LengthMismatch,
    MaskOutOfRange,
    Space,
    SymmetryProfile,
    are_separated,
    axiom_profile,
    axiom_profile_by_definition,
    closure,
    exterior,
    ground,
    interior,
    is_neighborhood,
    make_space,
    symmetry_profile,
)
from .separation import (
    ConditionReport,
    ConditionsViolated,
    RelationCriteria,
    SeparationRelation,
    check_relation_conditions,
    closure_from_relation,
    make_relation,
    relation_axiom_criteria,
    roundtrip_ok,
    separated_pairs,
)
from .maps import (
    MapProfile,
    SpaceMap,
    image,
    is_closure_preserving,
    is_continuous,
    is_nonseparating,
    make_map,
    map_profile,
    preimage,
    preimage_separation,
)
from .enumeration import (
    CLASSES,
    UniverseTooLarge,
    class_size,
    enumerate_maps,
    enumerate_spaces,
    sample_spaces,
)
from .claims import (
    CATALOG,
    NEGATIVE_CATALOG,
    UnknownClaim,
    VerificationReport,
    hunt_counterexample,
    merge_reports,
    verify_claim,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomProfile",
    "CATALOG",
    "CLASSES",
    "ClosureSpaceError",
    "ConditionReport",
    "ConditionsViolated",
    "ElementOutOfRange",
    "GroundSet",
    "LengthMismatch",
    "MapProfile",
    "MaskOutOfRange",
    "NEGATIVE_CATALOG",
    "RelationCriteria",
    "SeparationRelation",
    "Space",
    "SpaceMap",
    "SymmetryProfile",
    "UniverseTooLarge",
    "UnknownClaim",
    "VerificationReport",
    "are_separated",
    "axiom_profile",
    "axiom_profile_by_definition",
    "check_relation_conditions",
    "class_size",
    "closure",
    "closure_from_relation",
    "enumerate_maps",
    "enumerate_spaces",
    "exterior",
    "ground",
    "hunt_counterexample",
    "image",
    "interior",
    "is_closure_preserving",
    "is_continuous",
    "is_neighborhood",
    "is_nonseparating",
    "make_map",
    "make_relation",
    "make_space",
    "map_profile",
    "merge_reports",
    "preimage",
    "preimage_separation",
    "relation_axiom_criteria",
    "roundtrip_ok",
    "sample_spaces",
    "separated_pairs",
    "symmetry_profile",
    "verify_claim",
]
