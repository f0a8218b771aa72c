"""Gröbner cones of finite-type cluster algebras, computed exactly."""

__version__ = "0.1.0"
