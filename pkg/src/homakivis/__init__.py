"""Workbench for finite-dimensional Hom-algebras and Hom-Akivis algebras
over exact rational scalars: construction, twisting, and identity
classification on structure constants."""

__version__ = "0.1.0"

from .linear import (
    BilinearMap,
    DimensionMismatch,
    LinearMap,
    NotInvertible,
    Scalar,
    TrilinearMap,
    Vector,
    compose,
    eval_bilinear,
    eval_trilinear,
    invert,
    nullspace,
)
from .report import CheckReport, PipelineReport, PreconditionFailed, Witness
from .algebra import (
    HomAlgebra,
    NoUnit,
    NotInNucleus,
    NotInvertibleElement,
    NotMorphism,
    associator,
    associator_tensor,
    check_hom_algebra_morphism,
    commutator,
    commutator_tensor,
    hom_associator,
    hom_associator_tensor,
    inner_twist,
    is_associative,
    is_hom_alternative,
    is_hom_associative,
    is_hom_flexible,
    is_multiplicative,
    nucleus_basis,
    untwist,
    yau_twist,
)
from .akivis import (
    HomAkivisAlgebra,
    HomBracketAlgebra,
    NotSkewSymmetric,
    alternative_sixfold_relation,
    alternative_to_malcev_pipeline,
    associated_hom_akivis,
    associator_commutator_identity,
    check_akivis_morphism,
    cyclic_sum,
    flexible_hom_lie_criterion,
    hom_akivis_defect,
    hom_jacobi_report,
    hom_malcev_defect,
    hom_malcev_report,
    is_akivis,
    is_hom_akivis,
    is_hom_alternative_akivis,
    is_hom_flexible_akivis,
    is_hom_jacobi,
    is_hom_lie,
    is_hom_malcev,
    is_left_alternative_akivis,
    is_multiplicative_akivis,
    is_right_alternative_akivis,
    twist_by_morphism,
)
from .genesis import (
    GenConfig,
    InfeasibleOrder,
    SplitMix64,
    equivariant_average,
    random_bilinear,
    random_finite_order_map,
    random_multiplicative_hom_algebra,
    random_scalar,
    random_vector,
)
from .catalog import (
    CATALOG,
    CatalogEntry,
    ZeroParameter,
    build_kuzmin5,
    build_mat2,
    build_myung5,
    build_myung5_twisted,
    build_octonions,
    build_octonions_twisted,
    build_param3,
    build_sl2,
    octonion_automorphism,
)
