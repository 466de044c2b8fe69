"""Exact integer kernel, with a compiled core and a pure-Python fallback.

The compiled extension ``_ccore`` (Cython) is preferred when it imported
successfully at build time; otherwise the pure-Python reference kernel
``_pycore`` backs the same four entry points.  Setting the environment
variable ``WHSA_PURE_PYTHON=1`` forces the fallback, which is what the
kernel parity tests and the benchmark use to compare the two.

Both kernels are algorithmically identical (same pivoting and the same
Bland tie-breaking), so results are bit-for-bit equal either way.
"""

import os

from . import _pycore

if os.environ.get("WHSA_PURE_PYTHON"):
    _impl = _pycore
else:
    try:
        from . import _ccore as _impl
    except ImportError:
        _impl = _pycore

IMPL = _impl.IMPL
OPTIMAL = _pycore.OPTIMAL
INFEASIBLE = _pycore.INFEASIBLE
UNBOUNDED = _pycore.UNBOUNDED

mat_rank = _impl.mat_rank
mat_det = _impl.mat_det
solve_square = _impl.solve_square
lp_standard = _impl.lp_standard
vertex_enum = _impl.vertex_enum
