"""Decision procedures for nilpotents, units, zero-divisors and idempotents in monoid rings."""
from .idempotents import (
    ComponentwiseResult,
    componentwise_nilpotent_product,
    idempotent_support_in_torsion,
    is_idempotent,
)
from .nilpotence import is_nilpotent, is_nilpotent_bruteforce, nilpotency_search_bound
from .radicals import (
    FiniteRing,
    JacobsonReport,
    NilradicalCheck,
    finite_instance_jacobson_equals_nilradical,
    nilradical_graded_check,
)
from .search import enumerate_window, windowed_inverse
from .units import (
    UnitCertificate,
    check_unit_characterization,
    evaluate_unit_conditions,
    inverse,
    invert_group_ring,
    is_unit_monoid_ring,
)
from .zerodivisors import (
    GradednessCheck,
    ShrinkStep,
    ZeroDivisorVerdict,
    annihilator_in_window,
    annihilator_is_graded_in_window,
    is_zero_divisor,
    iter_shrink,
    shrink_to_homogeneous_annihilator,
    shrink_trace,
)

__all__ = [
    "ComponentwiseResult",
    "FiniteRing",
    "GradednessCheck",
    "JacobsonReport",
    "NilradicalCheck",
    "ShrinkStep",
    "UnitCertificate",
    "ZeroDivisorVerdict",
    "annihilator_in_window",
    "annihilator_is_graded_in_window",
    "check_unit_characterization",
    "componentwise_nilpotent_product",
    "enumerate_window",
    "evaluate_unit_conditions",
    "finite_instance_jacobson_equals_nilradical",
    "idempotent_support_in_torsion",
    "inverse",
    "invert_group_ring",
    "is_idempotent",
    "is_nilpotent",
    "is_nilpotent_bruteforce",
    "is_unit_monoid_ring",
    "is_zero_divisor",
    "iter_shrink",
    "nilpotency_search_bound",
    "nilradical_graded_check",
    "shrink_to_homogeneous_annihilator",
    "shrink_trace",
    "windowed_inverse",
]
