"""Exact computations with 2-crossed modules, their homotopies and path spaces."""

from .groups import (
    CyclicGroup,
    FreeGroup,
    Group,
    GroupError,
    Homomorphism,
    IntegerGroup,
    PullbackGroup,
    QuotientGroup,
    SemidirectProduct,
    Subgroup,
    TableGroup,
    free_reduce,
    semidirect,
    symmetric_group,
)
from .xmod import (
    CrossedModule,
    HomotopyGroups,
    PreCrossedModule,
    TwoCrossedModule,
    VerificationReport,
    XModMorphism,
    homotopy_groups,
    identity_morphism,
    verify_two_crossed,
    xmod_map_verify,
)
from .corpus import fixtures
from .pathspace import double_faces, path_space, path_space_checks, path_space_map
from .homotopy import (
    Homotopy,
    Quadratic2Derivation,
    build_hom2groupoid,
    concat_homotopies,
    invert_homotopy,
    is_quadratic_derivation,
    make_homotopy,
    omega,
    twofold_target,
)
from .lax import (
    LaxHomotopy,
    LaxTwoFold,
    counterexample_report,
    is_lax_equivalence,
    lax_concat,
    lax_invert,
    lax_target,
    lax_to_strict,
    lax_validate,
    q1,
    strict_to_lax,
)
from .modelfile import ModelError, ModelFile, corpus, load, loads

__all__ = [name for name in dir() if not name.startswith("_")]
