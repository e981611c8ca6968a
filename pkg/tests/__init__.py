"""Tests for the zeta linear forms toolkit."""
