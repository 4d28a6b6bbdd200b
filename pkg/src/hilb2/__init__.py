"""Exact computations on multigraded Hilbert schemes of points in the plane.

Modules: ``grading`` (abelian group gradings), ``staircase`` (monomial
ideals and Hilbert functions), ``arrows``, ``edge`` (binomial edge ideals),
``poset``, ``tangent`` (tangent space systems and ranks), ``chart`` and
``cli``.
"""

__version__ = "0.1.0"
