"""Braid words, Garside normal forms, the Dehornoy order and the amplification construction."""

from .alternating import AltDecomposition, alt_decompose, alt_length, fast_compare, parabolic_drop
from .amplifier import (
    AmplifyResult,
    ConjugateProduct,
    PipelineResult,
    ReceiptError,
    amplify,
    commutator_candidate,
    main_pipeline,
    purify,
)
from .dehornoy import (
    NotAKnotError,
    OrderCertificate,
    ReductionLimitError,
    Verdict,
    compare,
    dehornoy_floor,
    genus_certificate,
    handle_reduce,
    sigma_sign,
    step_limit,
)
from .garside import (
    CanonicalForm,
    brute_force_right_divisors,
    canonical_form,
    equals,
    is_positive,
    lives_in_parabolic,
    min_central_power_to_positive,
    parabolic_max_right_divisor,
    right_divides,
)
from .words import BraidError, BraidWord, delta_power, half_twist, named_constant, parse_word, word

__version__ = "0.1.0"
