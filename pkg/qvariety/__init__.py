"""
Quantum stabilizer codes from self-orthogonal J-affine variety codes.

Builds evaluation codes on products of roots of unity and zero over finite fields, checks their
Euclidean or Hermitian self-orthogonality exactly and derives CSS and enlarged stabilizer code
parameters from them.
"""

__version__ = "0.1.0"
