"""Exact centres of finite monoidal categories.

Three independent routes to the same invariant: direct enumeration of
half-braidings, a descent-object limit built from strict 2-categorical
pieces, and a cyclotomic linear-algebra backend for categories of
group-graded vector spaces.
"""

__version__ = "0.1.0"
