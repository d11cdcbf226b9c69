"""Rigorous q-multiple zeta values and decomposition identity checks.

Rational values are exchanged with the extension as "p/q" strings; the helpers
here convert enclosures to :class:`fractions.Fraction` pairs.
"""

from fractions import Fraction

from ._qzeta import (
    DomainError,
    TruncationLimitError,
    identity_terms,
    lemma_text,
    phi_q,
    q_integer,
    run_cli,
    tool_version,
    verify,
    verify_lemma,
    verify_operator,
    verify_parfrac,
    verify_proof_sums,
    verify_q1_reduction,
    zeta_classical,
    zeta_q,
    zeta_q_bruteforce,
)

__version__ = tool_version


def enclosure(result):
    """(lo, hi) of an evaluation or enclosure dict as Fractions."""
    return Fraction(result["lo"]), Fraction(result["hi"])


__all__ = [
    "DomainError",
    "TruncationLimitError",
    "enclosure",
    "identity_terms",
    "lemma_text",
    "phi_q",
    "q_integer",
    "run_cli",
    "verify",
    "verify_lemma",
    "verify_operator",
    "verify_parfrac",
    "verify_proof_sums",
    "verify_q1_reduction",
    "zeta_classical",
    "zeta_q",
    "zeta_q_bruteforce",
]
