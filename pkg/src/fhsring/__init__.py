"""Optimal frequency-hopping sequence families over polynomial residue class rings."""
from .bounds import lemma3_bound, lg_corollary1, lg_lemma1, peng_fan
from .corr import auto_max, cross_max, family_stats, hamming_at, pair_max
from .equiv import coset_count, proj_equiv_search
from .ff import find_irreducible, find_primitive, get_tower, is_irreducible
from .fhs import (
    FhsParams,
    ParamError,
    build_family,
    build_sequence,
    enumerate_gammas,
    predicted_parameters,
    validate_params,
)
from .report import verify_family
from .ring import gen_trace, get_ring, quotient_oracle, rank_kappa

__version__ = "0.1.0"
