"""Quaternion involutions q -> -nu q nu, their composition laws, and
involution-based projection."""

from .core import (
    EPS_ALG,
    EPS_RECON,
    EPS_UNIT,
    EPS_ZERO,
    ONE,
    UNIT_I,
    UNIT_J,
    UNIT_K,
    NonInvertibleError,
    Quaternion,
    ScalarVectorForm,
    UnitVector3,
    Vector3,
    conjugate,
    cross,
    dot,
    from_scalar_vector,
    inverse,
    modulus,
    mul,
    norm,
    to_scalar_vector,
    vector_product_decomposition,
)
from .involutions import (
    CANONICAL_TRIAD,
    InvalidTriadError,
    InvolutionAxis,
    OrthonormalTriad,
    chernov_alpha,
    chernov_beta,
    chernov_gamma,
    complete_triad,
    compose_involutions,
    conjugate_via_involutions,
    involute,
    involute_about_triad_product,
    reflect_vector,
)
from .projection import (
    BasisDecomposition,
    ParallelPerpSplit,
    decompose,
    scalar_and_vector_parts,
    split,
    split_quaternion,
)

__version__ = "0.1.0"
