"""Exact linear algebra for N-complexes and NDG modules over F_p and Q(zeta_N)."""
__version__ = "0.1.0"
