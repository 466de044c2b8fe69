"""whsa: exact combinatorics of weighted stable hyperplane arrangements.

Matroid polytopes, weighted hypersimplices, weight-domain chambers, lc/klt
tests, torus-GIT stability, weighted matroid tilings, strata posets and
polytope reconstruction from divisor incidence — all in exact rational
arithmetic.
"""

__version__ = "0.1.0"

from ._core import IMPL as kernel_impl  # noqa: F401
