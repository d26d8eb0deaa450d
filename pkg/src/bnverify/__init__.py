"""Numerical verification of sharp Lp inequalities for B_n-operators."""

__version__ = "0.1.0"
