"""Majorana-mode toolkit: Clifford algebra, BdG chains, braiding, hybrid gates."""

__version__ = "0.1.0"
