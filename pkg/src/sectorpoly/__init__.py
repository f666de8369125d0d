"""Sector-constrained polynomial zero synthesis and P/P0-matrix spectra."""

from .errors import (
    AngleTooSmall,
    ComplexCharPoly,
    DegenerateInput,
    DegreeOne,
    DimensionCap,
    DomainError,
    FeasibleButUnwitnessed,
    NotAdmissible,
    NotConjugateClosed,
    PiOverAlphaInteger,
    PreconditionError,
    SectorPolyError,
    ZeroLambda,
    ZeroModulus,
)
from .pmatrix import (
    MatrixClass,
    MinorReport,
    SpectrumMultiset,
    aux_poly,
    char_poly,
    eigen_witness,
    eigenvalues,
    generate_p_matrix,
    kellogg_admissible,
    principal_minors,
    spectrum_feasible,
)
from .poly import (
    SignClass,
    canonical,
    classify_signs,
    from_polar,
    normalize_theta,
    poly_eval,
    poly_mul,
    principal_arg,
    to_polar,
)
from .roots import RootSet, find_roots, min_arg_defect
from .synthesis import (
    CotReport,
    SectorIndex,
    SynthesisResult,
    build_q_avg,
    build_qj,
    lift,
    sector_index,
    sign_lemma_check,
    synthesize,
    verify_cot,
)

__version__ = "0.1.0"
