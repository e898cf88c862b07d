"""Cyclic Jacobi eigenvalue iteration for real symmetric matrices."""

from __future__ import annotations

import math

import numpy as np

from .errors import NotSymmetric


def symmetric_eigenvalues(m, tol: float = 1e-9, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a real symmetric matrix, descending.

    Sweeps every off-diagonal pair with a Jacobi rotation until the
    off-diagonal Frobenius norm is below ``tol`` scaled by max(1, ||m||);
    iteration continues three orders of magnitude past that point since the
    convergence is quadratic and the extra sweeps are cheap.
    """
    a = np.array(m, dtype=complex if np.iscomplexobj(m) else float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    if np.iscomplexobj(a):
        if np.max(np.abs(a.imag), initial=0.0) > tol:
            raise NotSymmetric("matrix has non-negligible imaginary part")
        a = a.real.copy()
    if np.max(np.abs(a - a.T), initial=0.0) > tol:
        raise NotSymmetric("matrix is not symmetric within tolerance")
    a = (a + a.T) / 2
    n = a.shape[0]
    scale = max(1.0, float(np.linalg.norm(a)))
    target = tol * scale * 1e-3

    def off_norm() -> float:
        off = a - np.diag(np.diag(a))
        return math.sqrt(float(np.sum(off * off)))

    for _ in range(max_sweeps):
        if off_norm() < target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # rotate rows/columns p and q
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    else:
        if off_norm() >= target:
            raise ArithmeticError("Jacobi iteration did not converge")
    return sorted((float(x) for x in np.diag(a)), reverse=True)
