"""Variants of Deligne's isomorphism checked at degree level."""

from enum import StrEnum


class DeligneForm(StrEnum):
    """Forms of Deligne's functorial Riemann-Roch isomorphism."""

    PAIRING_SQUARE = "pairing-square"  # (det Rf_*(L-O))^2 = <L, L - w>
    EXPONENT_SIX = "exponent-six"  # det^12 = <w,w> (x) <L, L - w>^6
    AS_PRINTED = "as-printed"  # det^12 = <w,w> (x) <L, L - w>, negative control
    EIGHTEEN = "eighteen"  # det^18 form via three determinant factors
