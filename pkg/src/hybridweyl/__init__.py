"""hybridweyl: exact dominant-weight multiplicities and hybrid characters for
the simple Lie algebras B_n, C_n, F_4 and G_2.

Everything upstream of numeric evaluation is computed in exact integer and
rational arithmetic, and every character expansion can be certified by an
exact group-algebra identity.
"""

from .rootsystem import (
    AlgebraLabel,
    RootSystemData,
    build_root_system,
    from_e_basis,
    inner_product,
    is_dominant,
    to_e_basis,
)
from .weyl import (
    DegenerateSeedError,
    OrbitSet,
    SignedWeight,
    dominant_representative,
    orbit,
    reflect_simple,
    sign_of_simple,
    signed_orbit,
    weyl_order,
)
from .expsum import ExpSum, c_function, evaluate, multiply, s_function, weighted_c_sum
from .multiplicity import (
    MultiplicityTable,
    certify_table,
    dominant_multiplicities,
    weyl_dimension,
)
from .subsystem import (
    SubsystemEmbedding,
    build_embedding,
    convert_weight,
    parent_preimage,
    transversal_group_order,
    transversal_orbit,
)
from .hybrid import (
    HybridExpansion,
    character_expansion,
    evaluate_expansion,
    evaluate_hybrid,
    hybrid_dimension,
    hybrid_expansion,
    verify_expansion,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraLabel",
    "RootSystemData",
    "build_root_system",
    "from_e_basis",
    "inner_product",
    "is_dominant",
    "to_e_basis",
    "DegenerateSeedError",
    "OrbitSet",
    "SignedWeight",
    "dominant_representative",
    "orbit",
    "reflect_simple",
    "sign_of_simple",
    "signed_orbit",
    "weyl_order",
    "ExpSum",
    "c_function",
    "evaluate",
    "multiply",
    "s_function",
    "weighted_c_sum",
    "MultiplicityTable",
    "certify_table",
    "dominant_multiplicities",
    "weyl_dimension",
    "SubsystemEmbedding",
    "build_embedding",
    "convert_weight",
    "parent_preimage",
    "transversal_group_order",
    "transversal_orbit",
    "HybridExpansion",
    "character_expansion",
    "evaluate_expansion",
    "evaluate_hybrid",
    "hybrid_dimension",
    "hybrid_expansion",
    "verify_expansion",
]
