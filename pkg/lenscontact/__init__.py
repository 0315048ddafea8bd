"""
lenscontact — exact contact-topological invariants of lens spaces and the
reducible Legendrian surgery obstructions built on them.
"""

__version__ = "1.0.0"
