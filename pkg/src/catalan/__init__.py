"""Executable companion to the elementary and computational steps of the
Catalan equation x^m - y^n = 1: exact arithmetic, Pell equations, Gaussian
and cyclotomic integers, bounded searches and the Mihailescu criteria."""

__version__ = "0.1.0"
