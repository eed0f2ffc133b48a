"""
hyposharp: the hypoplactic monoid with Schützenberger involution.

Quasi-ribbon tableaux, faithful tropical representations and polynomial-time
word identity checking, cross-checked against finite witness monoids.
"""

__version__ = "0.1.0"
