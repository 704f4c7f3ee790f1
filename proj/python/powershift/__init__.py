"""Exact arithmetic for a x^2 + k = (a + k) y^2 and related equations."""

from ._core import (
    IngestionError,
    MismatchedD,
    PowerShiftError,
    SquareD,
    SquareInput,
    __version__,
    continued_fraction_sqrt,
    divisors,
    enumerate_square_products,
    find_geometric_pairs,
    fundamental_solution,
    gcd,
    gcd_obstruction,
    is_perfect_square,
    is_square_product,
    isqrt,
    norm_form_solutions,
    patil_witness,
    pell_solutions,
    search_solutions,
    squarefree_decompose,
    survey,
    verify_hitting,
    verify_witness,
    witness_family,
    witness_from_pell,
)

__all__ = [name for name in dir() if not name.startswith("_")]
