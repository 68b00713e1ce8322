"""Characteristic-p engine on the projective line over F_p."""

from app.services.frobcurve.classes import (
    OMEGA_DEGREE,
    FrobeniusDecomposition,
    ProjLineBundle,
    SummandComparison,
)
from app.services.frobcurve.service import (
    arr_sides,
    bucket_oracle,
    check_gr_identity,
    compare_summands,
    frobenius_pullback,
    frobenius_pushforward,
    gr_identity_sides,
    h0,
    h1,
    pullback_of_pushforward,
    symbolic_arr,
    validated_pushforward,
    verify_arr,
)

__all__ = [
    "OMEGA_DEGREE",
    "FrobeniusDecomposition",
    "ProjLineBundle",
    "SummandComparison",
    "arr_sides",
    "bucket_oracle",
    "check_gr_identity",
    "compare_summands",
    "frobenius_pullback",
    "frobenius_pushforward",
    "gr_identity_sides",
    "h0",
    "h1",
    "pullback_of_pushforward",
    "symbolic_arr",
    "validated_pushforward",
    "verify_arr",
]
