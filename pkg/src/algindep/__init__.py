"""Deciders for subalgebra and congruence independence of finite structures.

The library represents finite first-order structures over a shared signature,
computes generated subuniverses, congruence lattices, and homomorphism
streams, and decides whether two subalgebras are independent: either in the
joint-endomorphism-extension sense or in the congruence-extension sense.
Builders for the standard concrete categories (sets, graphs, groups, Boolean
algebras, vector spaces) and their finite coproducts live in ``zoo``, and a
JSON-based CLI lives in ``cli``.
"""

from .core import (
    Congruence,
    FiniteStructure,
    InputError,
    Signature,
    SizeLimitExceeded,
    SubUniverse,
    direct_product,
    induced_substructure,
    is_congruence,
    is_subuniverse,
    quotient,
    validate,
)
from .generation import (
    WitnessDag,
    all_congruences,
    all_subuniverses,
    cg,
    close,
    generated_subuniverse_of_square,
    join,
)
from .independence import (
    CongruenceWitness,
    GroupDiagnostics,
    SubalgebraWitness,
    Verdict,
    boole_independent,
    check_word_condition,
    decide_congruence_independence,
    decide_subalgebra_independence,
    group_diagnostics,
)
from .morphisms import (
    ExtensionRefusal,
    HOM_CLASS_ALL,
    HOM_CLASS_AUTO,
    Homomorphism,
    enumerate_endos,
    enumerate_homs,
    find_isomorphism,
    is_homomorphism,
    joint_extension,
    kernel,
)
from .zoo import CategoryTag, build, canonical_quotient, coproduct, verify_coproduct_property

__all__ = [
    "CategoryTag",
    "Congruence",
    "CongruenceWitness",
    "ExtensionRefusal",
    "FiniteStructure",
    "GroupDiagnostics",
    "HOM_CLASS_ALL",
    "HOM_CLASS_AUTO",
    "Homomorphism",
    "InputError",
    "Signature",
    "SizeLimitExceeded",
    "SubUniverse",
    "SubalgebraWitness",
    "Verdict",
    "WitnessDag",
    "all_congruences",
    "all_subuniverses",
    "boole_independent",
    "build",
    "canonical_quotient",
    "cg",
    "check_word_condition",
    "close",
    "coproduct",
    "decide_congruence_independence",
    "decide_subalgebra_independence",
    "direct_product",
    "enumerate_endos",
    "enumerate_homs",
    "find_isomorphism",
    "generated_subuniverse_of_square",
    "group_diagnostics",
    "induced_substructure",
    "is_congruence",
    "is_homomorphism",
    "is_subuniverse",
    "join",
    "joint_extension",
    "kernel",
    "quotient",
    "validate",
    "verify_coproduct_property",
]
