"""Exact computer algebra for linear free divisors.

A hypersurface in C^n is a linear free divisor when its logarithmic vector
fields admit a global basis of n fields with linear coefficients; its
equation is then the degree-n determinant of the basis coefficient matrix.
This package constructs and verifies such divisors over Q: Saito's
criterion, Chevalley-Eilenberg Lie algebra cohomology of the symmetry
algebra, discriminants of quiver representation spaces and of minor
collections, and Fitting-ideal tests for strong Euler homogeneity.

All arithmetic is exact (arbitrary-precision rationals); randomised
routines take an explicit seed and are reproducible.
"""

__version__ = "0.1.0"

DEFAULT_SEED = 314159
DEFAULT_TRIALS = 8

# Random integer coordinates for evaluation points and restriction lines are
# drawn uniformly from [-SAMPLE_BOUND, SAMPLE_BOUND].
SAMPLE_BOUND = 10_000
