"""Exact-arithmetic workbench for a functorial Riemann-Roch theorem in characteristic p.

Contains the algebra services, the verification layer and the command-line entry point.
"""
