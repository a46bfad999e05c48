"""Exact branching, spectra and operator relations for hidden-symmetry pairs.

A pure-Python, exact-arithmetic engine: classical root systems and Weyl
orbits, Freudenthal weight multiplicities, Klimyk branching with an
independent restriction oracle, the catalog of spherical quadruples with its
double fibration, eigenvalue-level operator relations, and the Weyl-orbit
matching that derives the rank-one noncompact branching law.
"""

from .catalog import (
    CATALOG_VERSION,
    GroupInfo,
    QuadrupleRecord,
    RealFormRow,
    bundled_catalog,
    discrete_decomposability_flag,
    find_record,
    gl_variant,
    group_dimension,
    load_catalog,
    resolve_embedding,
    verify_dimension_identity,
)
from .characters import (
    EmbeddingSpec,
    IrrepMultiset,
    WeightMultiplicityMap,
    branch,
    identity_embedding,
    invariant_multiplicity,
    restriction_oracle,
    weight_multiplicities,
)
from .errors import (
    CatalogParseError,
    CatalogValidationError,
    ConfigurationError,
    DimensionMismatchError,
    DomainError,
    HsbError,
    InvariantViolationError,
    ResourceLimitError,
    UnsupportedRecordError,
)
from .fibration import (
    FibrationRow,
    FibrationTable,
    double_fibration,
    fiber_dimension_check,
    kappa1,
    kappa2,
    verify_fibration,
)
from .infchar import (
    HCParamRule,
    RelationReport,
    discover_affine_relation,
    hc_rule_for,
    nu_tau_gl,
    nu_tau_so16,
    powersum_scalar,
    relation_samples,
    verify_gl_relations,
    verify_theorem_C,
)
from .lattice import (
    InfCharClass,
    RootSystem,
    Weight,
    build_root_system,
    casimir_eigenvalue,
    dominant_representative,
    format_weight,
    infchar_class,
    infchar_equal,
    infinitesimal_character,
    parse_system,
    product_system,
    weyl_dimension,
    weyl_orbit,
)
from .noncompact import (
    DiscreteSeriesParam,
    XiSet,
    contains_tau_k,
    hc_parameter,
    ktype_set_Z,
    pi_lambda_ktypes,
    solve_branching_so88,
    theta_kl,
    xi_set,
)
from .spectra import (
    DiscSpectrum,
    check_multiplicity_free,
    disc_series,
    harmonic_dim,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
