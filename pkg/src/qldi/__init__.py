"""qldi: local-dimension-invariant forms of qudit stabilizer codes.

Exact-arithmetic tools to put a stabilizer code over prime local dimension q
into a form whose generators commute over the integers, evaluate the cutoff
bounds above which the code distance is preserved at every larger prime, and
verify distances below the cutoff by exact search.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .bounds import (
    BoundsReport,
    NotApplicableError,
    compute_bounds,
    hamming_bound_holds,
    p_d_star,
    p_double_star,
    p_star_alternative,
    p_star_alternative_reduced_q2,
    p_star_original,
)
from .codefile import (
    CodeFileError,
    emit_report,
    parse_code,
    parse_report,
    parse_script,
    serialize_code,
    serialize_script,
)
from .distance import (
    Classification,
    DistanceReport,
    ErrorWitness,
    classify,
    distance_search,
    enumeration_oracle,
    scan_primes,
    support_logical_dims,
    syndrome,
)
from .ldi import (
    LdiForm,
    LVariant,
    build_L,
    is_ldi,
    ldi_transform,
    max_entry,
    working_ldi_tableau,
)
from .linalg import (
    CanonicalForm,
    CodeValidationError,
    HadamardSwap,
    RegisterSwap,
    RowAdd,
    RowScale,
    RowSwap,
    StabilizerCode,
    apply_script,
    canonical_form,
    in_rowspace,
    kernel_mod,
    rref_mod,
)
from .pauli import (
    GramMatrix,
    PauliWord,
    Tableau,
    gram,
    phi_decode,
    phi_encode,
    symplectic_product,
    weight,
)
from .primes import is_prime, next_prime_above

__version__ = "0.1.0"
