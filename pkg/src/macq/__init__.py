"""macq: exact queue-inversion tableau sums for modified Macdonald
polynomials, with an executable verification suite (symmetry, dominance
triangularity, sign-reversing involutions, word identities) and an exact
TAZRP stationary cross-check."""

from macq.algebra import MPoly, qbinom, qmultinom

__version__ = "0.1.0"

__all__ = ["MPoly", "qbinom", "qmultinom", "__version__"]
