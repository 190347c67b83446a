"""Exact verification of Nekrasov–Okounkov-type identities via the topological vertex."""

__version__ = "0.1.0"
