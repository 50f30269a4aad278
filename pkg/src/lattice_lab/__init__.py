"""Lattice Lab - exact invariants of definite unimodular lattices and the ζ relations."""

from .budget import BudgetExceeded, EnumerationBudget, EnumerationIncomplete
from .census import CensusReport, e7_squared_census
from .codes import BinaryCode, golay24, shortened_golay22
from .config import RunConfig
from .constructions import (
    CATALOG,
    GlueSpec,
    construction_a,
    gamma,
    glue_lattice,
    lattice_from_generators,
    named,
    orthogonal_complement,
    root_lattice,
    sublattice_by_conditions,
)
from .discriminant import DiscriminantGroup, discriminant_group, index2_overlattices
from .enumeration import (
    characteristic_coset,
    coset_minima,
    coset_table,
    count_by_norm,
    find_vector_of_norm,
    is_extremal,
    min_characteristic_norm,
    scan_cosets,
    shortest_vectors,
)
from .invariants import (
    InvariantReport,
    InvariantSearch,
    SymMonomial,
    Witness,
    e0,
    ep,
    eta,
    f2,
    f4,
    l_form,
    m_invariant,
    verify_certificate,
)
from .lattice import (
    AmbientBasis,
    ConstructionError,
    CosetClass,
    Lattice,
    LatticeError,
    MinimaResult,
    NotPositiveDefinite,
    NotSymmetric,
    PreconditionError,
    direct_sum,
    validate,
)
from .reports import ElkiesReport, elkies_report
from .roots import RootDecomposition, reduced_part, root_decomposition
from .specfile import LatticeSpec, canonical_json, load_lattice, parse_spec
from .zeta import (
    CertifiedRelation,
    ZetaPolynomial,
    conjecture_check,
    conjecture_poly,
    scaled_zeta_table,
    substitute_epsilon,
    verify_range,
    xi_check,
    zeta,
    zeta_prime,
)

__all__ = [
    # Lattices and errors
    "Lattice",
    "AmbientBasis",
    "CosetClass",
    "MinimaResult",
    "LatticeError",
    "NotSymmetric",
    "NotPositiveDefinite",
    "ConstructionError",
    "PreconditionError",
    "validate",
    "direct_sum",
    "discriminant_group",
    "DiscriminantGroup",
    "index2_overlattices",
    # Budgets
    "EnumerationBudget",
    "BudgetExceeded",
    "EnumerationIncomplete",
    # Enumeration
    "shortest_vectors",
    "count_by_norm",
    "find_vector_of_norm",
    "coset_minima",
    "is_extremal",
    "characteristic_coset",
    "min_characteristic_norm",
    "scan_cosets",
    "coset_table",
    # Constructions
    "BinaryCode",
    "golay24",
    "shortened_golay22",
    "GlueSpec",
    "lattice_from_generators",
    "glue_lattice",
    "sublattice_by_conditions",
    "orthogonal_complement",
    "root_lattice",
    "gamma",
    "construction_a",
    "named",
    "CATALOG",
    "RootDecomposition",
    "root_decomposition",
    "reduced_part",
    # Invariants
    "SymMonomial",
    "Witness",
    "InvariantReport",
    "InvariantSearch",
    "l_form",
    "eta",
    "m_invariant",
    "f2",
    "f4",
    "e0",
    "ep",
    "verify_certificate",
    "CensusReport",
    "e7_squared_census",
    "ElkiesReport",
    "elkies_report",
    # Zeta ring
    "ZetaPolynomial",
    "CertifiedRelation",
    "zeta",
    "zeta_prime",
    "substitute_epsilon",
    "conjecture_poly",
    "conjecture_check",
    "xi_check",
    "scaled_zeta_table",
    "verify_range",
    # Configuration and spec files
    "RunConfig",
    "LatticeSpec",
    "parse_spec",
    "load_lattice",
    "canonical_json",
]
