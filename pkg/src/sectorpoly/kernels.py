"""Hot numeric kernels with numba-compiled and pure-numpy twins.

Two inner loops dominate the randomized campaigns: the simultaneous
(Aberth-Ehrlich) root iteration and the 2^n principal-minor enumeration.
Each has a pure-numpy implementation (always available) and an ``@njit``
twin compiled at import unless numba is missing or disabled by setting
``SECTORPOLY_DISABLE_NUMBA=1``. The dispatch names ``aberth_iterate`` and
``minor_sums`` point at the selected variant; both variants stay importable
so ``benchmarks/bench_kernels.py`` and the backend-equivalence tests can
compare them in one process.

Both twins implement the same update rule (simultaneous Jacobi-style sweep,
same guards), so they agree to rounding on every input.
"""

from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "SECTORPOLY_DISABLE_NUMBA"

# Extra sweeps after the residual tolerance trips. The stopping rule scales
# |p(z)| by sum|a| * max(1,|z|)^deg, which is generous near large-modulus
# roots; polishing pushes iterates to machine accuracy instead of leaving
# them at the stopping threshold. Reverted if they do not help.
POLISH_SWEEPS = 3


def numba_disabled_by_env() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() in ("1", "true", "yes", "on")


def initial_guesses(coeffs: np.ndarray) -> np.ndarray:
    """Starting points on a circle of radius 1 + max|a_i/a_n|.

    The rotation offset keeps the start away from the axes and from roots of
    unity, breaking the symmetry of binomials such as t^n + c.
    """
    deg = coeffs.size - 1
    radius = 1.0 + float(np.max(np.abs(coeffs[:-1] / coeffs[-1])))
    angles = 2.0 * np.pi * np.arange(deg) / deg + np.pi / (2.0 * deg) + 0.4
    return radius * np.exp(1j * angles)


# --------------------------------------------------------------------------
# pure-numpy path
# --------------------------------------------------------------------------

def aberth_iterate_numpy(coeffs, z0, max_iters, tol):
    """Simultaneous root iteration; returns (roots, residuals, iterations).

    ``coeffs`` are ascending complex128 coefficients with nonzero leading
    term; ``z0`` the initial guesses. Iterates full Jacobi sweeps until the
    worst relative residual |p(z)| / (sum|a| * max(1,|z|)^deg) drops to
    ``tol`` or ``max_iters`` sweeps have run.
    """
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    deg = coeffs.size - 1
    dcoeffs = coeffs[1:] * np.arange(1, deg + 1)
    coeff_sum = float(np.sum(np.abs(coeffs)))
    z = np.array(z0, dtype=np.complex128)

    def _eval(zz):
        p = np.zeros(deg, dtype=np.complex128)
        for c in coeffs[::-1]:
            p = p * zz + c
        dp = np.zeros(deg, dtype=np.complex128)
        for c in dcoeffs[::-1]:
            dp = dp * zz + c
        resid = np.abs(p) / (coeff_sum * np.maximum(1.0, np.abs(zz)) ** deg)
        return p, dp, resid

    def _sweep(zz, p, dp):
        diff = zz[:, None] - zz[None, :]
        np.fill_diagonal(diff, np.inf)
        diff[diff == 0] = np.inf
        s = np.sum(1.0 / diff, axis=1)
        bad_dp = dp == 0
        w = p / np.where(bad_dp, 1.0, dp)
        den = 1.0 - w * s
        den = np.where(den == 0, 1.0, den)
        # stalled iterate (p' vanished exactly): nudge deterministically
        return np.where(bad_dp, zz * (1.0 + 1e-8) + 1e-8, zz - w / den)

    p, dp, resid = _eval(z)
    iters = 0
    while iters < max_iters and float(np.max(resid)) > tol:
        z = _sweep(z, p, dp)
        iters += 1
        p, dp, resid = _eval(z)
    if float(np.max(resid)) <= tol:
        best_z, best_resid = z, resid
        for _ in range(POLISH_SWEEPS):
            z = _sweep(z, p, dp)
            p, dp, resid = _eval(z)
            if float(np.max(resid)) <= float(np.max(best_resid)):
                best_z, best_resid = z, resid
        z, resid = best_z, best_resid
    return z, resid, iters


def minor_sums_numpy(a):
    """Principal-minor aggregates of a complex square matrix.

    Returns ``(e_sums, min_re, max_im)`` where ``e_sums[k-1]`` is the sum of
    all size-k principal minors and ``min_re[k-1]`` / ``max_im[k-1]`` are the
    extreme real part and |imaginary part| among size-k minors. Determinants
    come from LAPACK's partially pivoted LU, batched per size (in chunks to
    bound memory for large n).
    """
    from itertools import combinations

    a = np.asarray(a, dtype=np.complex128)
    n = a.shape[0]
    e_sums = np.zeros(n, dtype=np.complex128)
    min_re = np.full(n, np.inf)
    max_im = np.zeros(n)
    chunk = 4096
    for k in range(1, n + 1):
        subs = list(combinations(range(n), k))
        for lo in range(0, len(subs), chunk):
            batch = subs[lo : lo + chunk]
            stack = np.empty((len(batch), k, k), dtype=np.complex128)
            for m, idx in enumerate(batch):
                ix = np.asarray(idx)
                stack[m] = a[np.ix_(ix, ix)]
            dets = np.linalg.det(stack)
            e_sums[k - 1] += dets.sum()
            min_re[k - 1] = min(min_re[k - 1], float(dets.real.min()))
            max_im[k - 1] = max(max_im[k - 1], float(np.abs(dets.imag).max()))
    return e_sums, min_re, max_im


# --------------------------------------------------------------------------
# numba path (same semantics, scalar loops)
# --------------------------------------------------------------------------

def _aberth_loops(coeffs, z0, max_iters, tol):
    deg = coeffs.size - 1
    ncoef = coeffs.size
    coeff_sum = 0.0
    for i in range(ncoef):
        coeff_sum += abs(coeffs[i])

    z = z0.copy()
    znew = np.empty(deg, dtype=np.complex128)
    p = np.empty(deg, dtype=np.complex128)
    dp = np.empty(deg, dtype=np.complex128)
    resid = np.empty(deg, dtype=np.float64)

    worst = 0.0
    for i in range(deg):
        pv = 0.0 + 0.0j
        dv = 0.0 + 0.0j
        for m in range(ncoef - 1, -1, -1):
            dv = dv * z[i] + pv
            pv = pv * z[i] + coeffs[m]
        p[i] = pv
        dp[i] = dv
        resid[i] = abs(pv) / (coeff_sum * max(1.0, abs(z[i])) ** deg)
        if resid[i] > worst:
            worst = resid[i]

    iters = 0
    while iters < max_iters and worst > tol:
        for i in range(deg):
            if dp[i] == 0:
                znew[i] = z[i] * (1.0 + 1e-8) + 1e-8
                continue
            s = 0.0 + 0.0j
            for j in range(deg):
                if j != i:
                    d = z[i] - z[j]
                    if d != 0:
                        s += 1.0 / d
            w = p[i] / dp[i]
            den = 1.0 - w * s
            if den == 0:
                den = 1.0 + 0.0j
            znew[i] = z[i] - w / den
        for i in range(deg):
            z[i] = znew[i]
        iters += 1
        worst = 0.0
        for i in range(deg):
            pv = 0.0 + 0.0j
            dv = 0.0 + 0.0j
            for m in range(ncoef - 1, -1, -1):
                dv = dv * z[i] + pv
                pv = pv * z[i] + coeffs[m]
            p[i] = pv
            dp[i] = dv
            resid[i] = abs(pv) / (coeff_sum * max(1.0, abs(z[i])) ** deg)
            if resid[i] > worst:
                worst = resid[i]

    if worst <= tol:
        best_z = z.copy()
        best_resid = resid.copy()
        best_worst = worst
        for _ in range(POLISH_SWEEPS):
            for i in range(deg):
                if dp[i] == 0:
                    znew[i] = z[i] * (1.0 + 1e-8) + 1e-8
                    continue
                s = 0.0 + 0.0j
                for j in range(deg):
                    if j != i:
                        d = z[i] - z[j]
                        if d != 0:
                            s += 1.0 / d
                w = p[i] / dp[i]
                den = 1.0 - w * s
                if den == 0:
                    den = 1.0 + 0.0j
                znew[i] = z[i] - w / den
            for i in range(deg):
                z[i] = znew[i]
            worst = 0.0
            for i in range(deg):
                pv = 0.0 + 0.0j
                dv = 0.0 + 0.0j
                for m in range(ncoef - 1, -1, -1):
                    dv = dv * z[i] + pv
                    pv = pv * z[i] + coeffs[m]
                p[i] = pv
                dp[i] = dv
                resid[i] = abs(pv) / (coeff_sum * max(1.0, abs(z[i])) ** deg)
                if resid[i] > worst:
                    worst = resid[i]
            if worst <= best_worst:
                for i in range(deg):
                    best_z[i] = z[i]
                    best_resid[i] = resid[i]
                best_worst = worst
        z = best_z
        resid = best_resid
    return z, resid, iters


def _minor_loops(a):
    n = a.shape[0]
    e_sums = np.zeros(n, dtype=np.complex128)
    min_re = np.full(n, np.inf)
    max_im = np.zeros(n)
    idx = np.empty(n, dtype=np.int64)
    lu = np.empty((n, n), dtype=np.complex128)
    for mask in range(1, 1 << n):
        k = 0
        for i in range(n):
            if mask & (1 << i):
                idx[k] = i
                k += 1
        for r in range(k):
            for c in range(k):
                lu[r, c] = a[idx[r], idx[c]]
        # in-place LU with partial pivoting; det = sign * prod(diag)
        det = 1.0 + 0.0j
        singular = False
        for col in range(k):
            piv = col
            big = abs(lu[col, col])
            for r in range(col + 1, k):
                mag = abs(lu[r, col])
                if mag > big:
                    big = mag
                    piv = r
            if big == 0.0:
                det = 0.0 + 0.0j
                singular = True
                break
            if piv != col:
                for c in range(col, k):
                    tmp = lu[col, c]
                    lu[col, c] = lu[piv, c]
                    lu[piv, c] = tmp
                det = -det
            det *= lu[col, col]
            for r in range(col + 1, k):
                factor = lu[r, col] / lu[col, col]
                for c in range(col + 1, k):
                    lu[r, c] -= factor * lu[col, c]
        if singular:
            det = 0.0 + 0.0j
        e_sums[k - 1] += det
        re = det.real
        im = abs(det.imag)
        if re < min_re[k - 1]:
            min_re[k - 1] = re
        if im > max_im[k - 1]:
            max_im[k - 1] = im
    return e_sums, min_re, max_im


aberth_iterate_numba = None
minor_sums_numba = None
USING_NUMBA = False

if not numba_disabled_by_env():
    try:
        from numba import njit
    except ImportError:
        njit = None
    if njit is not None:
        aberth_iterate_numba = njit(cache=True)(_aberth_loops)
        minor_sums_numba = njit(cache=True)(_minor_loops)
        USING_NUMBA = True

if USING_NUMBA:
    aberth_iterate = aberth_iterate_numba
    minor_sums = minor_sums_numba
else:
    aberth_iterate = aberth_iterate_numpy
    minor_sums = minor_sums_numpy


def backend_name() -> str:
    return "numba" if USING_NUMBA else "numpy"
