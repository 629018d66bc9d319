"""Exact algebraic kinematics of the 3-RUU parallel manipulator."""

__version__ = "0.1.0"
