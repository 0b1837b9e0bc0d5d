"""Exact verification kernel for the Askey-Wilson algebra inside U_q(sl2)
and the little / big q-Jacobi polynomials it diagonalizes."""

__version__ = "0.1.0"

from .qcore import ParamPoint, qpoch, sample_point, screen_degeneracies  # noqa: E402
from .skewring import LaurentPoly, SkewOp, q_commutator  # noqa: E402

__all__ = ["LaurentPoly", "ParamPoint", "SkewOp", "q_commutator", "qpoch", "sample_point",
           "screen_degeneracies", "__version__"]
