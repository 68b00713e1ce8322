"""Lambda-ring style operations on split classes of the projective line."""

from app.services.kcore.classes import CondensedClass, KClass, LineClass
from app.services.kcore.service import (
    adams,
    bott,
    condense,
    condensed_inverse,
    condensed_multiply,
    euler_char,
    tau_of_omega,
    tau_rank,
)

__all__ = [
    "CondensedClass",
    "KClass",
    "LineClass",
    "adams",
    "bott",
    "condense",
    "condensed_inverse",
    "condensed_multiply",
    "euler_char",
    "tau_of_omega",
    "tau_rank",
]
