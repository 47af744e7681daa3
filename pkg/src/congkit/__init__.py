"""Congruence lattices of finite semigroups, ideal lattices of F_p[S], and the map J ↦ ρ_J between them."""

from .algebra import (
    Ideal,
    SemigroupAlgebra,
    algebra_congruence_permutability_check,
    enumerate_ideals,
    ideal_closure,
    ideal_lattice,
    is_ideal,
    multiply,
)
from .correspondence import (
    PhiContext,
    build_phi_context,
    check_circ_homomorphism,
    check_join_compatible_kernel,
    check_meet_homomorphism,
    f_of_alpha,
    kernel_classes,
    rho,
)
from .errors import CongkitError, GuardExceeded, InputError
from .gf import PrimeField, Subspace, enumerate_subspaces, intersect, member, rref, sum_spaces
from .relations import (
    BinaryRelation,
    Partition,
    as_relation,
    classify,
    compose,
    enumerate_congruences,
    is_congruence,
    is_permutable,
    join,
    meet,
)
from .reports import CheckReport
from .semigroup import (
    CayleyTable,
    Custom,
    CyclicGroup,
    LeftZero,
    RectangularBand,
    RightZero,
    SemilatticeChain,
    TwoElementSemilattice,
    build,
    quotient,
    validate_associativity,
)

__version__ = "0.1.0"
