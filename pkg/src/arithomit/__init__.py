"""Length sets and Frobenius numbers of numerical monoids, and the effect of
omitting generators from arithmetical numerical monoids."""

from .errors import (
    EmptyInput,
    GcdNotOne,
    IndexOutOfRange,
    InvalidParameters,
    MonoidError,
    NotAMember,
    OracleTooLarge,
    WTooSmall,
)
from .monoid import (
    LengthTable,
    NumericalMonoid,
    apery_set,
    build_length_table,
    contains,
    factorizations,
    frobenius,
    length_set,
    make_monoid,
)
from .arithmetical import (
    ArithmeticalMonoid,
    CanonicalCoords,
    canonical_coords,
    congruence_equivalence,
    contains_closed,
    expand,
    frobenius_closed,
    length_set_closed,
    omit,
    sr_length_set,
    sr_removed_elements,
)
from .omission import (
    OmissionVerdict,
    Shortcut,
    check_boundary_lenset_match,
    classify_single_omission,
    decide_frobenius_equal,
    decide_length_sets_equal,
    tightness_scan,
)
from .complex import (
    OmissionComplex,
    build_complex,
    complex_survey,
    downward_closure_violations,
)

__version__ = "0.1.0"
