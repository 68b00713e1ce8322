"""Exact multivariate rational polynomial arithmetic."""

from app.services.polyring.poly import (
    ONE,
    Monomial,
    Poly,
    Scalar,
    add,
    is_zero,
    monomial,
    mul,
    substitute,
    symbols,
)

__all__ = [
    "ONE",
    "Monomial",
    "Poly",
    "Scalar",
    "add",
    "is_zero",
    "monomial",
    "mul",
    "substitute",
    "symbols",
]
