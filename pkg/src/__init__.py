"""Zeta Linear Forms: exact construction and verification of small linear forms
in odd zeta values and polylogarithms."""

__version__ = "1.0.0"
__author__ = "Zeta Linear Forms Team"
__license__ = "MIT"
