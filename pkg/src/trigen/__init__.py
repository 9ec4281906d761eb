"""trigen: exact three-generator sets for special linear and special
unitary groups over number fields, certified at desk scale by symbolic
word identities and surjectivity onto congruence quotients."""

from .numberfield import (
    INFINITE,
    FieldAutomorphism,
    FieldElement,
    NumberField,
    SubfieldEmbedding,
    elem_arith,
    field_new,
    is_cm_field,
    minimal_polynomial,
    subring_index,
    totally_positive,
    unit_rank,
)
from .units import (
    NoThetaError,
    ThetaCertificate,
    UnitSource,
    check_eq_card,
    fundamental_unit_real_quadratic,
    pell_min_solution,
    select_theta,
)
from .matgroup import (
    BruhatFactors,
    HermitianData,
    MatN,
    Word,
    bruhat_decompose,
    commutator,
    lower_elementary,
    sl2_to_su21,
    su21_check,
    su21_uplus_generator,
    torus_diag,
    u2alpha_parameter,
    upper_elementary,
    word_eval,
)
from .construct import (
    CMRedirect,
    ConstructionError,
    ElementaryCertificate,
    GeneratorTriple,
    Provenance,
    WedgeReport,
    build_cm,
    build_noncm,
    build_sln_multone,
    cmprime_g_element,
    column_unipotent,
    diagonal_levi_from_unit,
    elementary_words,
    lattice_contains_multiple,
    levi_embed,
    relative_trace_norm,
)
from .verify import (
    Certificate,
    ClosureResult,
    ResidueMat,
    ResidueRing,
    ResourceCapError,
    ambient_order,
    certify,
    closure,
    reduce_mod,
)

__version__ = "0.1.0"
