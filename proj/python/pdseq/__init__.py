"""Generalized period-doubling sequences P_k = s_k^inf(0).

Words are passed and returned in text form: digits for k <= 10,
comma-separated letters above that, "-" for the empty word.
"""

from ._pdseq import (
    CapExceeded,
    DomainError,
    FalsificationError,
    congruence_check,
    factor_gaps,
    factorize,
    iterate,
    kernel_gap,
    kernel_gap_lengths,
    kernel_numbers,
    kernel_word,
    letter_at,
    mirror_substitute,
    palindromic_prefix,
    prefix,
    substitute,
    verify_all,
)

__all__ = [
    "CapExceeded",
    "DomainError",
    "FalsificationError",
    "congruence_check",
    "factor_gaps",
    "factorize",
    "iterate",
    "kernel_gap",
    "kernel_gap_lengths",
    "kernel_numbers",
    "kernel_word",
    "letter_at",
    "mirror_substitute",
    "palindromic_prefix",
    "prefix",
    "substitute",
    "verify_all",
]
