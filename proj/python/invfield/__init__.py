"""Invariant random fields on spheres and SU(2)."""

import json as _json

from . import _core
from ._core import (
    Basis,
    InvalidArgument,
    SU2Element,
    bijoux_samples,
    clebsch_gordan_components,
    from_euler_zyz,
    haar_sample,
    matrix_coeff,
    p_poly,
    rep_matrix,
    rotate_coeffs,
    simulate,
    wedge_pairing,
)

__all__ = [
    "Basis", "InvalidArgument", "SU2Element", "bijoux_samples", "check_column_structure", "check_mixing",
    "clebsch_gordan_components", "from_euler_zyz", "gaussianity_test", "haar_sample", "invariance_test",
    "ks_two_sample", "matrix_coeff", "orbit_orthogonality", "p_poly", "phase_invariance_test", "rep_matrix",
    "rotate_coeffs", "s3_exact_mixing", "simulate", "wedge_pairing",
]


def _wrap(fn):
    def call(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))
    call.__name__ = fn.__name__
    call.__doc__ = fn.__doc__
    return call


check_mixing = _wrap(_core.check_mixing)
orbit_orthogonality = _wrap(_core.orbit_orthogonality)
s3_exact_mixing = _wrap(_core.s3_exact_mixing)
invariance_test = _wrap(_core.invariance_test)
gaussianity_test = _wrap(_core.gaussianity_test)
ks_two_sample = _wrap(_core.ks_two_sample)
phase_invariance_test = _wrap(_core.phase_invariance_test)
check_column_structure = _wrap(_core.check_column_structure)
