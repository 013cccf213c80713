"""Homogeneous ACM bundles on isotropic Grassmannians of types B, C and D.

Quick tour::

    >>> from acmbundles import FlagSpace, is_acm
    >>> X = FlagSpace("B", 5, 3)
    >>> is_acm(X, (4, 4, 0, 0, 0)).summary()
    'ACM: yes (M=14)'
"""

from .halfint import HalfInt
from .lie import (
    EpsilonWeight,
    FlagSpace,
    LieType,
    Root,
    ValidationError,
    dim_flag,
    from_epsilon,
    fundamental_weight,
    pairing,
    positive_roots,
    rho,
    to_epsilon,
)
from .step_matrix import StepMatrix, build, integer_entries, max_entry_closed_form, render
from .bbw import (
    Cohomology,
    Regular,
    Singular,
    acm_by_oracle,
    classify,
    cohomology,
    dominant_representative,
    twisted_weight,
    weyl_dimension,
)
from .acm import AcmVerdict, is_acm, normalize_initialized, verify_equivalence
from .enumerator import EnumerationResult, emit_atlas, enumerate_acm
from .corollaries import validate_corollaries

__version__ = "0.1.0"
