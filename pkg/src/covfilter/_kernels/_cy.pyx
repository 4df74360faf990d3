# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the volatility/correlation recursions.

Semantics match ``covfilter._kernels._pure`` exactly; see that module for
the formulas.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY, isfinite, log, log1p, sqrt

cnp.import_array()

cdef double _RHO2_CAP = 1.0 - 1e-12


def garch11_filter(r2, double omega, double a, double b, double s0):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] r2_arr = np.ascontiguousarray(r2, dtype=np.float64)
    cdef Py_ssize_t T = r2_arr.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(T, dtype=np.float64)
    cdef Py_ssize_t t
    cdef double prev = s0
    out[0] = s0
    for t in range(1, T):
        prev = omega + a * r2_arr[t - 1] + b * prev
        out[t] = prev
    return out


def garch11_neg_loglike(r, double omega, double a, double b, double s0):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] r_arr = np.ascontiguousarray(r, dtype=np.float64)
    cdef Py_ssize_t T = r_arr.shape[0]
    cdef Py_ssize_t t
    cdef double sigma2 = s0
    cdef double acc = 0.0
    cdef double rt
    if sigma2 <= 0.0 or not isfinite(sigma2):
        return INFINITY
    rt = r_arr[0]
    acc += log(sigma2) + rt * rt / sigma2
    for t in range(1, T):
        rt = r_arr[t - 1]
        sigma2 = omega + a * rt * rt + b * sigma2
        if sigma2 <= 0.0 or not isfinite(sigma2):
            return INFINITY
        rt = r_arr[t]
        acc += log(sigma2) + rt * rt / sigma2
    return 0.5 * acc


def dcc_pair_neg_loglike(s, double alpha, double beta, target_offdiag):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] s_arr = np.ascontiguousarray(s, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] t_od = np.ascontiguousarray(target_offdiag, dtype=np.float64)
    cdef Py_ssize_t T = s_arr.shape[0]
    cdef Py_ssize_t n = s_arr.shape[1]
    cdef Py_ssize_t p, t
    cdef double one_mab = 1.0 - alpha - beta
    cdef double q11, q22, q12, rho, rho2, x, y, quad, lag_i, lag_j
    cdef double acc = 0.0
    if T < 2 or n < 2:
        return 0.0
    for p in range(n - 1):
        q11 = 1.0
        q22 = 1.0
        q12 = t_od[p]
        for t in range(1, T):
            lag_i = s_arr[t - 1, p]
            lag_j = s_arr[t - 1, p + 1]
            q11 = one_mab + alpha * lag_i * lag_i + beta * q11
            q22 = one_mab + alpha * lag_j * lag_j + beta * q22
            q12 = one_mab * t_od[p] + alpha * lag_i * lag_j + beta * q12
            rho = q12 / sqrt(q11 * q22)
            rho2 = rho * rho
            if rho2 > _RHO2_CAP:
                rho2 = _RHO2_CAP
                rho = sqrt(rho2) if rho > 0.0 else -sqrt(rho2)
            x = s_arr[t, p]
            y = s_arr[t, p + 1]
            quad = (x * x + y * y - 2.0 * rho * x * y) / (1.0 - rho2)
            acc += 0.5 * (log1p(-rho2) + quad - x * x - y * y)
    if not isfinite(acc):
        return INFINITY
    return acc
