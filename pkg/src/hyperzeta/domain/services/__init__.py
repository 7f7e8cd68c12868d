"""Numerical services of the hyperzeta context."""
