"""NumPy fallback for the modular Faddeev-LeVerrier kernel.

Mirrors ``_kernels.pyx`` exactly; selected when the compiled extension is
missing or ``QWSPECTRA_PURE_PYTHON`` is set.  Residues are int64 in [0, p)
with p < 2**28, so each product is < 2**56 and blocks of 64 products can be
summed without overflow.
"""

from __future__ import annotations

import numpy as np

_BLOCK = 64


def _mulmod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[1]
    if n <= _BLOCK:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for lo in range(0, n, _BLOCK):
        hi = min(lo + _BLOCK, n)
        out = (out + (a[:, lo:hi] @ b[lo:hi, :]) % p) % p
    return out


def fl_charpoly_mod(re: np.ndarray, im: np.ndarray | None, p: int):
    """Charpoly coefficients of (re + i*im) mod p by Faddeev-LeVerrier.

    Returns ``(c_re, c_im, ok)`` where ``c[k]`` is the coefficient of
    lambda**(n-k) reduced into [0, p) and ``ok`` reports that the recursion's
    terminal matrix vanished.
    """
    n = re.shape[0]
    a_re = np.ascontiguousarray(re, dtype=np.int64) % p
    a_im = None if im is None else np.ascontiguousarray(im, dtype=np.int64) % p
    c_re = np.zeros(n + 1, dtype=np.int64)
    c_im = np.zeros(n + 1, dtype=np.int64)
    c_re[0] = 1
    m_re = np.eye(n, dtype=np.int64)
    m_im = np.zeros((n, n), dtype=np.int64) if a_im is not None else None
    diag = np.arange(n)
    for k in range(1, n + 1):
        if a_im is None:
            am_re = _mulmod(a_re, m_re, p)
            am_im = None
        else:
            am_re = (_mulmod(a_re, m_re, p) - _mulmod(a_im, m_im, p)) % p
            am_im = (_mulmod(a_re, m_im, p) + _mulmod(a_im, m_re, p)) % p
        inv_k = pow(k, -1, p)
        ck_re = (-int(am_re[diag, diag].sum() % p) * inv_k) % p
        c_re[k] = ck_re
        am_re[diag, diag] = (am_re[diag, diag] + ck_re) % p
        m_re = am_re
        if am_im is not None:
            ck_im = (-int(am_im[diag, diag].sum() % p) * inv_k) % p
            c_im[k] = ck_im
            am_im[diag, diag] = (am_im[diag, diag] + ck_im) % p
            m_im = am_im
    ok = not m_re.any() and (m_im is None or not m_im.any())
    return c_re, c_im, bool(ok)
