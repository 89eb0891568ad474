# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels (Cython twin of ``_pure``)."""

from libc.math cimport atan2, cos, fabs, floor, hypot, sin, INFINITY, M_PI

import numpy as np

cimport numpy as cnp

cnp.import_array()

NAME = "compiled"

cdef double TWO_PI = 2.0 * M_PI


cdef inline double _fold_mu(double mu) nogil:
    if mu > 0.5 * M_PI:
        return mu - M_PI
    if mu <= -0.5 * M_PI:
        return mu + M_PI
    return mu


def geometry_arrays(double p, double e, double a4, int n, psi):
    """Evaluate profile geometry on an array of raw rotation angles."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] psi_arr = np.ascontiguousarray(
        psi, dtype=np.float64
    )
    cdef Py_ssize_t size = psi_arr.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] u_c = np.empty(size)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] v_c = np.empty(size)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] u_p = np.empty(size)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] v_p = np.empty(size)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] kappa_p = np.empty(size)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rho_c = np.empty(size)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] mu = np.empty(size)

    cdef double lobe_span = TWO_PI / n
    cdef double c = n * p / TWO_PI
    cdef double g = e - c
    cdef double k, x, s, b3, sp, cp, upv, vpv, kp, m
    cdef Py_ssize_t i
    for i in range(size):
        k = floor(psi_arr[i] / lobe_span)
        if k < 0:
            k = 0
        elif k > n - 1:
            k = n - 1
        x = psi_arr[i] - k * lobe_span
        s = c * x - 0.5 * p
        b3 = hypot(g, s)
        sp = sin(psi_arr[i])
        cp = cos(psi_arr[i])
        upv = e * cp + s * sp
        vpv = -e * sp + s * cp
        u_p[i] = upv
        v_p[i] = vpv
        u_c[i] = upv - a4 * (g * cp + s * sp) / b3
        v_c[i] = vpv - a4 * (-g * sp + s * cp) / b3
        kp = (s * s + g * g - g * c) / (b3 * b3 * b3)
        kappa_p[i] = kp
        if kp == 0.0:
            rho_c[i] = INFINITY
        else:
            rho_c[i] = 1.0 / kp - a4
        mu[i] = _fold_mu(atan2(c - e, s))
    return u_c, v_c, u_p, v_p, kappa_p, rho_c, mu


def ext_arrays(double p, double e, double a4, int n, x):
    """(abs_mu, rho_c, q) on an array of lobe-extended coordinates."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] x_arr = np.ascontiguousarray(
        x, dtype=np.float64
    )
    cdef Py_ssize_t size = x_arr.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] abs_mu = np.empty(size)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rho_c = np.empty(size)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] q = np.empty(size)

    cdef double c = n * p / TWO_PI
    cdef double g = e - c
    cdef double s, b3, kp, rho, am, cm
    cdef Py_ssize_t i
    for i in range(size):
        s = c * x_arr[i] - 0.5 * p
        b3 = hypot(g, s)
        kp = (s * s + g * g - g * c) / (b3 * b3 * b3)
        if kp == 0.0:
            rho = INFINITY
        else:
            rho = 1.0 / kp - a4
        rho_c[i] = rho
        am = fabs(_fold_mu(atan2(c - e, s)))
        abs_mu[i] = am
        cm = cos(am)
        if rho > 0.0 and cm > 1e-15:
            q[i] = (1.0 / a4 + 1.0 / rho) / cm
        else:
            q[i] = INFINITY
    return abs_mu, rho_c, q


def ext_v_c(double p, double e, double a4, int n, double x):
    cdef double c = n * p / TWO_PI
    cdef double s = c * x - 0.5 * p
    cdef double g = e - c
    cdef double b3 = hypot(g, s)
    cdef double sx = sin(x)
    cdef double cx = cos(x)
    return (-e * sx + s * cx) - a4 * (-g * sx + s * cx) / b3


def ext_kappa_p(double p, double e, double a4, int n, double x):
    cdef double c = n * p / TWO_PI
    cdef double s = c * x - 0.5 * p
    cdef double g = e - c
    cdef double b3 = hypot(g, s)
    return (s * s + g * g - g * c) / (b3 * b3 * b3)


def ext_rho_c(double p, double e, double a4, int n, double x):
    cdef double kp = ext_kappa_p(p, e, a4, n, x)
    if kp == 0.0:
        return INFINITY
    return 1.0 / kp - a4


def ext_abs_mu(double p, double e, double a4, int n, double x):
    cdef double c = n * p / TWO_PI
    cdef double s = c * x - 0.5 * p
    return fabs(_fold_mu(atan2(c - e, s)))


def ext_q(double p, double e, double a4, int n, double x):
    cdef double rho = ext_rho_c(p, e, a4, n, x)
    if rho <= 0.0:
        return INFINITY
    cdef double cm = cos(ext_abs_mu(p, e, a4, n, x))
    if cm <= 1e-15:
        return INFINITY
    return (1.0 / a4 + 1.0 / rho) / cm
