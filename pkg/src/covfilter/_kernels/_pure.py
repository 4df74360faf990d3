"""Pure-NumPy kernel implementations (fallback backend).

These mirror the compiled kernels in ``_cy.pyx`` bit-for-bit up to float
rounding; the recursions are expressed through ``scipy.signal.lfilter`` so
the fallback stays usable on long series.
"""

import numpy as np
from scipy.signal import lfilter

# rho^2 is clipped below this to keep the bivariate log-likelihood finite;
# the compiled backend uses the same constant.
_RHO2_CAP = 1.0 - 1e-12


def garch11_filter(r2, omega, a, b, s0):
    """Conditional variance path of a GARCH(1,1) recursion.

    sigma2[0] = s0, sigma2[t] = omega + a*r2[t-1] + b*sigma2[t-1].
    """
    r2 = np.asarray(r2, dtype=np.float64)
    T = r2.shape[0]
    out = np.empty(T)
    out[0] = s0
    if T > 1:
        forcing = omega + a * r2[:-1]
        out[1:] = lfilter([1.0], [1.0, -b], forcing, zi=np.array([b * s0]))[0]
    return out


def garch11_neg_loglike(r, omega, a, b, s0):
    """Gaussian quasi negative log-likelihood, constants dropped.

    0.5 * sum_t [ log(sigma2_t) + r_t^2 / sigma2_t ]
    """
    r = np.asarray(r, dtype=np.float64)
    sigma2 = garch11_filter(r * r, omega, a, b, s0)
    if np.any(sigma2 <= 0.0) or not np.all(np.isfinite(sigma2)):
        return np.inf
    return 0.5 * float(np.sum(np.log(sigma2) + r * r / sigma2))


def dcc_pair_neg_loglike(s, alpha, beta, target_offdiag):
    """Composite negative log-likelihood of the DCC recursion.

    Scores contiguous asset pairs (0,1),(1,2),... of devolatilized returns
    ``s`` (T x n).  The pseudo-correlation recursion per pair (i,j) is

        q_t = (1 - alpha - beta) * t + alpha * s_{t-1} s_{t-1}' + beta * q_{t-1}

    started at q_0 = t, with targets t_ii = t_jj = 1 and
    t_ij = target_offdiag[i].  Rows t = 1..T-1 contribute

        0.5 * [ log(1 - rho^2) + (si^2 + sj^2 - 2 rho si sj)/(1 - rho^2)
                - si^2 - sj^2 ].
    """
    s = np.asarray(s, dtype=np.float64)
    T, n = s.shape
    if T < 2 or n < 2:
        return 0.0
    si = s[:, :-1]
    sj = s[:, 1:]
    t_od = np.asarray(target_offdiag, dtype=np.float64)[np.newaxis, :]

    coef_b = [1.0, -beta]
    one_mab = 1.0 - alpha - beta
    # forcing rows t=1..T-1 use the lag-(t-1) products
    f12 = one_mab * t_od + alpha * (si[:-1] * sj[:-1])
    f11 = one_mab + alpha * si[:-1] ** 2
    f22 = one_mab + alpha * sj[:-1] ** 2
    q12 = lfilter([1.0], coef_b, f12, axis=0, zi=beta * t_od)[0]
    q11 = lfilter([1.0], coef_b, f11, axis=0,
                  zi=beta * np.ones((1, n - 1)))[0]
    q22 = lfilter([1.0], coef_b, f22, axis=0,
                  zi=beta * np.ones((1, n - 1)))[0]

    rho = q12 / np.sqrt(q11 * q22)
    rho2 = np.minimum(rho * rho, _RHO2_CAP)
    rho = np.sign(rho) * np.sqrt(rho2)
    x, y = si[1:], sj[1:]
    quad = (x * x + y * y - 2.0 * rho * x * y) / (1.0 - rho2)
    ll = 0.5 * (np.log1p(-rho2) + quad - x * x - y * y)
    if not np.all(np.isfinite(ll)):
        return np.inf
    return float(np.sum(ll))
