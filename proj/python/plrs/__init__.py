"""Completeness of positive linear recurrence sequences.

Thin wrapper over the compiled ``_plrs`` extension. Coefficient vectors are
plain lists of ints; terms and gaps come back as Python ints of any size.
"""

from ._plrs import (
    CapError,
    ConjectureViolation,
    PlrsError,
    __version__,
    brown_gap,
    brown_scan,
    census,
    check_fail_at_2l_minus_1,
    classify,
    corollary_shift_bound,
    distinct_decompose,
    empirical_max_n,
    enumerate_legal,
    fib,
    figure_table,
    is_complete_up_to,
    is_legal,
    legal_decompose,
    max_n_double_one,
    max_n_g_ones,
    max_n_single_one,
    term,
    terms,
    validate_coefficients,
    value_of,
    weak_window_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
