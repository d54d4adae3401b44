"""
Linking Numbers
Exact linking numbers in rational homology spheres, branched and infinite
cyclic covers, Alexander and Conway polynomials, signatures and crossing changes.
"""

__version__ = "1.0.0"
