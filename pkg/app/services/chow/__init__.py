"""Symbolic intersection and determinant-of-cohomology degree calculus."""

from app.services.chow.classes import (
    FIBER_DEGREE,
    GENUS,
    LAMBDA,
    LL,
    LW,
    OMEGA,
    WW,
    DivisorClass,
    GradedLine,
    IntersectionForm,
    L,
    O,
    VirtualCombo,
)
from app.services.chow.service import (
    cube_triviality,
    det_degree,
    det_line,
    euler_characteristic,
    graded_dual,
    graded_power,
    graded_tensor,
    pairing_degree,
    power_expansion,
    power_triviality,
    self_pairing_sign,
    serre_dual,
    virtual_det_degree,
    virtual_pairing_degree,
    virtual_pairing_identity,
)

__all__ = [
    "FIBER_DEGREE",
    "GENUS",
    "LAMBDA",
    "LL",
    "LW",
    "OMEGA",
    "WW",
    "DivisorClass",
    "GradedLine",
    "IntersectionForm",
    "L",
    "O",
    "VirtualCombo",
    "cube_triviality",
    "det_degree",
    "det_line",
    "euler_characteristic",
    "graded_dual",
    "graded_power",
    "graded_tensor",
    "pairing_degree",
    "power_expansion",
    "power_triviality",
    "self_pairing_sign",
    "serre_dual",
    "virtual_det_degree",
    "virtual_pairing_degree",
    "virtual_pairing_identity",
]
