"""Exact DFT machinery over finite fields, with a desk-scale verifier for the
existence of monic irreducible polynomials with one prescribed coefficient.
"""

from .cyclic import (
    CyclicFn,
    SupportSet,
    compose_perm,
    conv_power,
    convolve,
    dft,
    dft_period_by_support,
    idft,
    is_periodic,
    kronecker,
    least_period,
    least_period_of_sequence,
    pointwise_mul,
    reversal,
    shift,
)
from .cyclo import CycloValue, cyclotomic_data, cyclotomic_value, divisibility_check, threshold
from .gf import (
    Embedding,
    FieldCtx,
    FieldElement,
    PolyFq,
    char_poly,
    element_degree,
    make_field,
    poly_gcd,
    primitive_element,
    sigma_eval,
    subfield_embedding,
)
from .harness import (
    PeriodReport,
    SweepConfig,
    SweepResult,
    classify_case,
    find_witness,
    sweep,
    verify_period_claims,
)
from .spectral import (
    RootIndicator,
    SupportDegreeReport,
    Verdict,
    build_root_indicator,
    coprime_divisor_test,
    degree_n_factor_test,
    irreducible_sufficient_test,
    oracle_factor_degrees,
    oracle_irreducible,
    support_degree_test,
)
from .symfun import (
    DigitVector,
    OmegaSet,
    delta,
    delta_mask,
    digit_sum,
    digits,
    is_q_symmetric,
    omega,
    phi_rho,
)

__version__ = "0.1.0"
