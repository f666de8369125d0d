"""Principal-minor classification, characteristic polynomials, eigenvalue
region predicates and spectrum feasibility for P and P0 matrices.

A P (P0) matrix has every principal minor positive (nonnegative). Writing
E_k for the sum of the size-k principal minors, the characteristic
polynomial is p(t) = t^n + sum_k (-1)^(n-k) E_(n-k) t^k, and its reflection
q(t) = (-1)^n p(-t) = prod (t + lambda_k) has positive (nonnegative)
coefficients exactly when the eigenvalue multiset is a P (P0) spectrum.
That turns eigenvalue-region questions into coefficient-sign questions,
which the synthesis module answers constructively.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    ComplexCharPoly,
    DimensionCap,
    FeasibleButUnwitnessed,
    NotAdmissible,
    NotConjugateClosed,
    PreconditionError,
    ZeroLambda,
)
from .poly import (
    SignClass,
    classify_signs,
    is_conjugate_closed,
    principal_arg,
)
from .roots import find_roots
from .synthesis import snapped_ratio, synthesize

DEFAULT_DIM_CAP = 12
HARD_DIM_CAP = 20
MINOR_TOL = 1e-9
KELLOGG_ANGLE_TOL = 1e-12
SPECTRUM_IMAG_TOL = 1e-9


class MatrixClass(enum.Enum):
    P = "P"
    P0 = "P0"
    NEITHER = "Neither"


@dataclass(frozen=True)
class MinorReport:
    """Aggregate view of all 2^n - 1 principal minors."""

    e_sums: np.ndarray          # E_1 .. E_n (complex)
    min_real_minor: float
    max_abs_imag_minor: float
    matrix_class: MatrixClass


@dataclass(frozen=True)
class SpectrumMultiset:
    values: np.ndarray
    conjugate_closed: bool


def _as_square(a) -> np.ndarray:
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise PreconditionError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def _minor_tolerances(a: np.ndarray, tol: float) -> np.ndarray:
    """Per-size determinant tolerance: tol * (1 + max row norm)^k."""
    n = a.shape[0]
    row_norm = float(np.max(np.sum(np.abs(a), axis=1)))
    return tol * (1.0 + row_norm) ** np.arange(1, n + 1)


def principal_minors(a, cap: int = DEFAULT_DIM_CAP, tol: float = MINOR_TOL) -> MinorReport:
    """Enumerate every nonempty principal minor and classify the matrix.

    Each determinant comes from a partially pivoted LU of its principal
    submatrix. Minors are judged against a size-scaled tolerance
    tol * (1 + max row norm)^k; P needs every real part above it and every
    imaginary part within it, P0 relaxes the real parts to >= -tolerance.

    Raises DimensionCap beyond ``cap`` (hard limit 20): the enumeration is
    exponential by construction.
    """
    a = _as_square(a)
    n = a.shape[0]
    if n > min(cap, HARD_DIM_CAP):
        raise DimensionCap(f"n={n} exceeds minor-enumeration cap {min(cap, HARD_DIM_CAP)}")
    e_sums, min_re, max_im = kernels.minor_sums(a)
    tols = _minor_tolerances(a, tol)
    imag_ok = bool(np.all(max_im <= tols))
    if imag_ok and np.all(min_re > tols):
        cls = MatrixClass.P
    elif imag_ok and np.all(min_re >= -tols):
        cls = MatrixClass.P0
    else:
        cls = MatrixClass.NEITHER
    return MinorReport(
        e_sums=np.asarray(e_sums),
        min_real_minor=float(np.min(min_re)),
        max_abs_imag_minor=float(np.max(max_im)),
        matrix_class=cls,
    )


def _real_e_sums(a: np.ndarray, cap: int, tol: float) -> np.ndarray:
    report = principal_minors(a, cap=cap, tol=tol)
    tols = _minor_tolerances(a, tol)
    imag = np.abs(report.e_sums.imag)
    if np.any(imag > tols):
        raise ComplexCharPoly(
            f"minor sums are not real (max |imag| = {float(np.max(imag))!r})"
        )
    return report.e_sums.real


def char_poly(a, cap: int = DEFAULT_DIM_CAP, tol: float = MINOR_TOL) -> np.ndarray:
    """Monic characteristic polynomial det(tI - A), ascending coefficients.

    Raises ComplexCharPoly when the minor sums carry imaginary parts beyond
    tolerance (complex-entry matrix without a real characteristic polynomial).
    """
    a = _as_square(a)
    n = a.shape[0]
    e = _real_e_sums(a, cap, tol)
    coeffs = np.empty(n + 1)
    coeffs[n] = 1.0
    for k in range(n):
        coeffs[k] = (-1.0) ** (n - k) * e[n - k - 1] + 0.0
    return coeffs


def aux_poly(a, cap: int = DEFAULT_DIM_CAP, tol: float = MINOR_TOL) -> np.ndarray:
    """Sign-flipped reflection of char_poly: coefficient of t^k is E_(n-k).

    Equals (-1)^n * p(-t) = prod (t + lambda_k); its coefficient signs decide
    P / P0 membership of the spectrum.
    """
    a = _as_square(a)
    n = a.shape[0]
    e = _real_e_sums(a, cap, tol)
    coeffs = np.empty(n + 1)
    coeffs[n] = 1.0
    for k in range(n):
        coeffs[k] = e[n - k - 1]
    return coeffs


def eigenvalues(a, cap: int = DEFAULT_DIM_CAP):
    """Eigenvalues as roots of the characteristic polynomial."""
    return find_roots(char_poly(a, cap=cap))


def wedge_angle(lam: complex) -> float:
    """Argument of lambda mapped into (0, 2*pi] (positive reals at 2*pi)."""
    alpha = principal_arg(lam)
    return alpha if alpha > 0.0 else alpha + 2.0 * math.pi


def kellogg_admissible(lam: complex, n: int, mode: MatrixClass,
                       angle_tol: float = KELLOGG_ANGLE_TOL) -> bool:
    """Eigenvalue-region predicate: |theta - pi| > pi/n for P (>= for P0),
    with theta = arg(lambda) in (0, 2*pi].

    P0 excludes lambda = 0 outright (ZeroLambda); for P the zero eigenvalue
    is simply inadmissible, since a P matrix has positive determinant.
    """
    if mode not in (MatrixClass.P, MatrixClass.P0):
        raise PreconditionError(f"mode must be P or P0, not {mode}")
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    lam = complex(lam)
    if lam == 0:
        if mode is MatrixClass.P0:
            raise ZeroLambda("lambda = 0 is excluded from the P0 region test")
        return False
    defect = abs(wedge_angle(lam) - math.pi) - math.pi / n
    if mode is MatrixClass.P:
        return defect > angle_tol
    return defect >= -angle_tol


def spectrum_feasible(values, imag_tol: float = SPECTRUM_IMAG_TOL) -> MatrixClass:
    """Decide whether a multiset is a P spectrum, a P0 spectrum, or neither.

    Expands prod (t + lambda_k); coefficients must be real up to
    ``imag_tol`` (relative to the largest coefficient), else
    NotConjugateClosed. The sign class of the real parts gives the verdict.
    """
    vals = np.atleast_1d(np.asarray(values, dtype=np.complex128))
    if vals.size < 1:
        raise PreconditionError("spectrum must contain at least one value")
    q = np.array([1.0 + 0.0j])
    for lam in vals:
        q = np.convolve(q, np.array([lam, 1.0 + 0.0j]))
    scale = float(np.max(np.abs(q)))
    if float(np.max(np.abs(q.imag))) > imag_tol * scale:
        raise NotConjugateClosed(
            "product polynomial has complex coefficients; "
            "the multiset is not closed under conjugation"
        )
    sign = classify_signs(q.real)
    if sign is SignClass.POSITIVE:
        return MatrixClass.P
    if sign is SignClass.NONNEGATIVE:
        return MatrixClass.P0
    return MatrixClass.NEITHER


def eigen_witness(lam: complex, n: int, mode: MatrixClass) -> SpectrumMultiset:
    """Complete an admissible eigenvalue into a full n-point spectrum of the
    requested class.

    Negates lambda, synthesizes a degree-n polynomial in the matching sign
    class vanishing there, and negates its roots back. The result contains
    lambda, has exactly n values, and spectrum_feasible accepts it (a P0
    witness may classify as P when strictly positive).

    Raises NotAdmissible outside the region; FeasibleButUnwitnessed for
    P-mode boundary angles where pi/(theta - pi) is an integer, which the
    strict positive-coefficient construction does not cover.
    """
    lam = complex(lam)
    if not kellogg_admissible(lam, n, mode):
        raise NotAdmissible(f"lambda={lam!r} is not admissible for {mode.value}, n={n}")
    if mode is MatrixClass.P:
        alpha = wedge_angle(lam) - math.pi
        _, is_int = snapped_ratio(alpha)
        if is_int:
            raise FeasibleButUnwitnessed(
                f"pi/(theta-pi) is an integer at lambda={lam!r}; no strict "
                "positive-coefficient witness in scope"
            )
        result = synthesize(-lam, n, SignClass.POSITIVE)
    else:
        result = synthesize(-lam, n, SignClass.NONNEGATIVE)
    rs = find_roots(result.coeffs)
    values = -rs.roots
    return SpectrumMultiset(
        values=values,
        conjugate_closed=is_conjugate_closed(values),
    )


def generate_p_matrix(n: int, seed: int) -> np.ndarray:
    """Random strictly diagonally dominant matrix with positive diagonal.

    Off-diagonal entries are uniform on [-1, 1]; each diagonal entry is the
    row's absolute off-diagonal sum plus uniform(0.1, 1), which forces every
    principal minor positive. Verified post hoc; regenerates on the
    (unexpected) failure path, deterministically for a fixed seed.
    """
    if not 1 <= n <= DEFAULT_DIM_CAP:
        raise PreconditionError(f"n must be in [1, {DEFAULT_DIM_CAP}], got {n}")
    rng = np.random.default_rng(seed)
    while True:
        a = rng.uniform(-1.0, 1.0, (n, n))
        np.fill_diagonal(a, 0.0)
        dom = np.sum(np.abs(a), axis=1) + rng.uniform(0.1, 1.0, n)
        np.fill_diagonal(a, dom)
        if principal_minors(a).matrix_class is MatrixClass.P:
            return a
