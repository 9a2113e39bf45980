"""Exact symbolic engine for quantum matrix, SL, and GL function algebras,
their integer forms over Z[q,q^-1], the quantized enveloping algebra of
gl(n+1), and the classical enveloping-algebra limits."""

from .laurent import (
    LAURENT,
    LaurentPoly,
    NotDivisible,
    POLE_AT_ONE,
    PoleAtOne,
    RATFUNC,
    RatFunc,
    divide_by_q_minus_1,
    evaluate_at_one,
    lp_arith,
    rf_arith,
    rf_regular_at_one,
)
from .freealg import (
    AlgebraMismatch,
    AlgebraSpec,
    DimensionOverflow,
    GenSym,
    NCElement,
    NonTerminating,
    RewriteRule,
    confluence_check,
    graded_component_basis,
    nc_multiply,
    normal_form,
)
from .qmatrix import (
    BadIndexLists,
    InadmissibleOrder,
    MatrixAlgebra,
    OrderMismatch,
    TensorElement,
    make_matrix_algebra,
)
from .qsl import (
    BorelAlgebra,
    GLElement,
    NotInBorel,
    SLAlgebra,
    antipode_convention_report,
    borel_antipode,
    borel_quotient,
    gl_antipode,
    gl_inverse_det,
    pi_project,
    sl_reduce,
)
from .classical import (
    BasisSym,
    C_SYM,
    ClassicalTensor,
    JacobiFailure,
    LieStructure,
    PBWElement,
    build_h,
    build_h_prime,
    reference_cobracket,
    ue_normal_form,
)
from .intform import (
    IntContext,
    IntExpr,
    IntFormGen,
    OutOfForm,
    RelationRecord,
    check_span_identities,
    lift,
    poisson_cobracket,
    q_minus_1_divisibility,
    relation_catalog,
    specialize_phi,
    verify_hopf_catalog,
    verify_relation_catalog,
)
from .uq import (
    ConvexOrder,
    MuMap,
    NotInSlForm,
    PoleAtOneError,
    ThetaMap,
    UqAlgebra,
    UqElement,
    braid_T,
    collapse_at_one,
    convex_order,
    make_uq,
    q_bracket,
    root_vector_iterated,
    root_vector_lusztig,
    theta_map,
    triangular_nf,
    mu_P,
    uq_coproduct,
)

__version__ = "0.1.0"
