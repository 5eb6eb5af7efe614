"""Few-Lee-weight trace codes over F_p + uF_p: construction, enumeration and verification."""

from .analysis import (
    AccessStructure,
    Analyzer,
    TheoremReport,
    WeightEnumerator,
    ashikhmin_barg,
    dual_lee_distance_upto,
    enumerate_weights,
    massey_access_structure,
    minimal_codewords,
    sss_classify,
    verify_theorem,
)
from .charsums import (
    CharacterSpec,
    PredictedDistribution,
    additive_character,
    char_eval,
    gauss_sum,
    griesmer_check,
    lee_weight_via_theta,
    multiplicative_character,
    N_b_via_charsum,
    predict_CD_distribution,
    predict_distribution,
    semiprimitive_witness,
    theta,
)
from .construction import (
    CodeSpec,
    RingCode,
    build_CD,
    build_code,
    count_N_b,
    derive_spec,
    eval_arrays,
    eval_codeword,
    verify_group_action,
)
from .field import FieldCtx, build_field, field_arith
from .ring import RingElem, gray, gray_vec, lee_weight, ring_trace

__version__ = "0.1.0"
