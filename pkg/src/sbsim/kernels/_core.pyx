# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels for the SBS-distance objective.

One objective evaluation builds the candidate broadcast state from its
Bloch parameters, subtracts it from the 4x4 joint state and sums the
absolute eigenvalues of the Hermitian difference (LAPACK zheev).  The
multi-start optimizer calls this millions of times per parameter sweep,
which is why it lives in C instead of numpy.
"""
import numpy as np

from libc.math cimport cos, sin, exp, fabs, NAN
from scipy.linalg.cython_lapack cimport zheev

NAME = "cython"


cdef double _ptilde(double z, int pmap) noexcept nogil:
    # pmap 0: logistic map onto [0.5, 1]; pmap 1: onto [0, 1]
    cdef double s = 1.0 / (1.0 + exp(-z))
    if pmap == 0:
        return 0.5 + 0.5 * s
    return s


cdef double _objective(const double complex* rho, double xp, double yp,
                       double xc, double yc, double z, int pmap) noexcept nogil:
    cdef double complex psi[2]
    cdef double complex psp[2]
    cdef double complex chi[2]
    cdef double complex chp[2]
    cdef double complex d[16]
    cdef double complex work[32]
    cdef double ev[4]
    cdef double rwork[16]
    cdef double complex ph
    cdef double pt
    cdef int i, j, k, l, row, col
    cdef int n = 4, lda = 4, lwork = 32, info = 0
    cdef char jobz = b'N', uplo = b'U'

    ph = cos(yp) + 1j * sin(yp)
    psi[0] = cos(0.5 * xp)
    psi[1] = sin(0.5 * xp) * ph
    psp[0] = sin(0.5 * xp)
    psp[1] = -cos(0.5 * xp) * ph
    ph = cos(yc) + 1j * sin(yc)
    chi[0] = cos(0.5 * xc)
    chi[1] = sin(0.5 * xc) * ph
    chp[0] = sin(0.5 * xc)
    chp[1] = -cos(0.5 * xc) * ph
    pt = _ptilde(z, pmap)

    for i in range(2):
        for j in range(2):
            row = 2 * i + j
            for k in range(2):
                for l in range(2):
                    col = 2 * k + l
                    d[4 * row + col] = rho[4 * row + col] - (
                        pt * psi[i] * psi[k].conjugate() * chi[j] * chi[l].conjugate()
                        + (1.0 - pt) * psp[i] * psp[k].conjugate() * chp[j] * chp[l].conjugate()
                    )

    # zheev is column-major, but the transpose of a Hermitian matrix has
    # the same (real) spectrum, so the row-major buffer can go in as-is.
    zheev(&jobz, &uplo, &n, d, &lda, ev, work, &lwork, rwork, &info)
    if info != 0:
        return NAN
    return fabs(ev[0]) + fabs(ev[1]) + fabs(ev[2]) + fabs(ev[3])


def sbs_objective(double complex[:, ::1] rho, double xp, double yp,
                  double xc, double yc, double z, int pmap=0):
    """Trace-norm distance between rho (4x4) and the candidate SBS state."""
    return _objective(&rho[0, 0], xp, yp, xc, yc, z, pmap)


def sbs_objective_grad(double complex[:, ::1] rho, double[::1] params,
                       int pmap=0, double step=1e-6):
    """(value, central-difference gradient) at a 5-parameter point
    (x_psi, y_psi, x_chi, y_chi, z)."""
    cdef double p[5]
    cdef double g[5]
    cdef double f0, fp, fm, orig
    cdef int i
    for i in range(5):
        p[i] = params[i]
    with nogil:
        f0 = _objective(&rho[0, 0], p[0], p[1], p[2], p[3], p[4], pmap)
        for i in range(5):
            orig = p[i]
            p[i] = orig + step
            fp = _objective(&rho[0, 0], p[0], p[1], p[2], p[3], p[4], pmap)
            p[i] = orig - step
            fm = _objective(&rho[0, 0], p[0], p[1], p[2], p[3], p[4], pmap)
            p[i] = orig
            g[i] = (fp - fm) / (2.0 * step)
    grad = np.empty(5)
    for i in range(5):
        grad[i] = g[i]
    return f0, grad


def sbs_objective_batch(double complex[:, ::1] rho, double[:, ::1] params,
                        int pmap=0):
    """Objective at many parameter points; params has shape (n, 5)."""
    cdef Py_ssize_t n = params.shape[0], i
    out = np.empty(n)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _objective(&rho[0, 0], params[i, 0], params[i, 1],
                              params[i, 2], params[i, 3], params[i, 4], pmap)
    return out
