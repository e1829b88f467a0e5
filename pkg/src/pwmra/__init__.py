"""Exact construction and verification of C0 piecewise-polynomial
orthogonal multiresolution analyses."""

from .exactnum import (
    ExactScalar,
    QuadExt,
    RadicandMismatchError,
    pochhammer,
    quadext,
    scalar_str,
    sqrt_exact,
    squarefree_reduce,
)
from .errors import ConstructionError, InvalidParameterError
from .polykit import PiecewisePoly, Poly, SymmetryType
from .hyperjacobi import (
    HyperSpec,
    RampPair,
    chu_vandermonde,
    contiguous_residual,
    hyp1_closed,
    jacobi_monic,
    pfaff_saalschutz,
    pfq_eval,
    phi_basis,
    ramp_diag_product,
    ramp_pair,
    ultraspherical_monic,
)
from .mrabuild import (
    ScalingVector,
    UFunction,
    WFunction,
    alpha_coeff,
    alpha_generic,
    alpha_rational_4n1,
    assemble_phi,
    closed_inner_products,
    f_closed,
    mellin_f_closed,
    q_ramp,
    r0,
    l0,
    u_function,
    ubar,
    w_function,
)
from .refine import (
    RefinementSet,
    SymPattern,
    build_refinement,
    refinement_matrices,
    transform,
)
from .xform import FTResult, fourier_l0, fourier_phi, fourier_u, quadrature_oracle, series_hyper

__version__ = "0.1.0"
