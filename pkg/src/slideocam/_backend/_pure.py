"""Pure numpy implementation of the evaluation kernels.

Drop-in twin of the compiled ``_core`` module; selected automatically when
the extension is not built.  All functions treat the design as an n-lobe
constant-velocity cam:

* ``x`` is the lobe-extended rotation coordinate.  Within one lobe the
  follower travels one roller pitch ``p``; the coordinate may run past the
  nominal lobe span to cover the profile extension on both sides.
* raw ``psi`` values (full camshaft rotation) are mapped onto the lobes by
  a clamped floor so that the leading extension belongs to the first lobe
  and the trailing extension to the last one.
"""

from __future__ import annotations

import math

import numpy as np

NAME = "pure"

_TWO_PI = 2.0 * math.pi


def _lobe_split(psi: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Raw rotation -> (lobe index, lobe-extended coordinate)."""
    lobe_span = _TWO_PI / n
    k = np.clip(np.floor(psi / lobe_span), 0, n - 1)
    return k, psi - k * lobe_span


def geometry_arrays(p, e, a4, n, psi):
    """Evaluate profile geometry on an array of raw rotation angles.

    Returns ``(u_c, v_c, u_p, v_p, kappa_p, rho_c, mu)``.  ``rho_c`` is
    signed and becomes +/-inf where the pitch curve is locally straight.
    """
    psi = np.asarray(psi, dtype=float)
    _, x = _lobe_split(psi, n)
    c = n * p / _TWO_PI
    s = c * x - 0.5 * p
    g = e - c
    b3 = np.hypot(g, s)

    sin_psi = np.sin(psi)
    cos_psi = np.cos(psi)
    u_p = e * cos_psi + s * sin_psi
    v_p = -e * sin_psi + s * cos_psi
    nu = (g * cos_psi + s * sin_psi) / b3
    nv = (-g * sin_psi + s * cos_psi) / b3
    u_c = u_p - a4 * nu
    v_c = v_p - a4 * nv

    kappa_p = (s * s + g * g - g * c) / (b3 * b3 * b3)
    with np.errstate(divide="ignore"):
        rho_c = 1.0 / kappa_p - a4

    mu = np.arctan2(c - e, s)
    mu = np.where(mu > 0.5 * math.pi, mu - math.pi, mu)
    mu = np.where(mu <= -0.5 * math.pi, mu + math.pi, mu)
    return u_c, v_c, u_p, v_p, kappa_p, rho_c, mu


def ext_arrays(p, e, a4, n, x):
    """(abs_mu, rho_c, q) on an array of lobe-extended coordinates.

    ``q`` is the Hertz severity factor ``(1/R_eq) / cos|mu|`` per unit
    axial load; infinite where the contact cannot push (rho_c <= 0) or
    cannot transmit (|mu| at 90 degrees).
    """
    x = np.asarray(x, dtype=float)
    c = n * p / _TWO_PI
    s = c * x - 0.5 * p
    g = e - c
    b3 = np.hypot(g, s)
    kappa_p = (s * s + g * g - g * c) / (b3 * b3 * b3)
    with np.errstate(divide="ignore"):
        rho_c = 1.0 / kappa_p - a4

    mu = np.arctan2(c - e, s)
    mu = np.where(mu > 0.5 * math.pi, mu - math.pi, mu)
    mu = np.where(mu <= -0.5 * math.pi, mu + math.pi, mu)
    abs_mu = np.abs(mu)

    cos_mu = np.cos(abs_mu)
    q = np.full_like(x, np.inf)
    ok = (rho_c > 0.0) & (cos_mu > 1e-15)
    q[ok] = (1.0 / a4 + 1.0 / rho_c[ok]) / cos_mu[ok]
    return abs_mu, rho_c, q


def ext_v_c(p, e, a4, n, x: float) -> float:
    """Profile v-coordinate at a lobe-extended coordinate (first lobe)."""
    c = n * p / _TWO_PI
    s = c * x - 0.5 * p
    g = e - c
    b3 = math.hypot(g, s)
    sin_x = math.sin(x)
    cos_x = math.cos(x)
    return (-e * sin_x + s * cos_x) - a4 * (-g * sin_x + s * cos_x) / b3


def ext_kappa_p(p, e, a4, n, x: float) -> float:
    c = n * p / _TWO_PI
    s = c * x - 0.5 * p
    g = e - c
    b3 = math.hypot(g, s)
    return (s * s + g * g - g * c) / (b3 * b3 * b3)


def ext_rho_c(p, e, a4, n, x: float) -> float:
    kappa = ext_kappa_p(p, e, a4, n, x)
    if kappa == 0.0:
        return math.inf
    return 1.0 / kappa - a4


def ext_abs_mu(p, e, a4, n, x: float) -> float:
    c = n * p / _TWO_PI
    s = c * x - 0.5 * p
    mu = math.atan2(c - e, s)
    if mu > 0.5 * math.pi:
        mu -= math.pi
    elif mu <= -0.5 * math.pi:
        mu += math.pi
    return abs(mu)


def ext_q(p, e, a4, n, x: float) -> float:
    rho = ext_rho_c(p, e, a4, n, x)
    if rho <= 0.0:
        return math.inf
    cos_mu = math.cos(ext_abs_mu(p, e, a4, n, x))
    if cos_mu <= 1e-15:
        return math.inf
    return (1.0 / a4 + 1.0 / rho) / cos_mu
