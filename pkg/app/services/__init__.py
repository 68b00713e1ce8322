"""Services package with the algebra and verification layers.

Each subpackage implements one area (polynomials, K-classes, Deligne pairings,
the projective line in characteristic p, identity checks, sweeps).
"""
