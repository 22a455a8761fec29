"""Dense complex linear algebra primitives for qubit registers.

Convention: qubit 0 is the leftmost (slowest) tensor factor everywhere,
i.e. kron(A, B) uses A's index as the outer index.  States and operators
are plain complex numpy arrays; the validators below enforce the
Hermiticity / trace / positivity contracts where they matter.
"""
import numpy as np

from .errors import NumericError

HERM_TOL = 1e-12
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
SV_CUTOFF = 1e-14


def kron(a, b):
    """Kronecker product with the first factor as the slow (outer) index."""
    return np.kron(np.asarray(a), np.asarray(b))


def kron_all(factors):
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def is_hermitian(a, tol=HERM_TOL):
    a = np.asarray(a)
    return a.shape[0] == a.shape[1] and np.max(np.abs(a - a.conj().T)) <= tol


def check_hermitian(a, tol=HERM_TOL):
    if not is_hermitian(a, tol):
        raise ValueError("matrix is not Hermitian within %g" % tol)
    return a


def check_density(rho, herm_tol=HERM_TOL, trace_tol=TRACE_TOL, psd_tol=PSD_TOL):
    """Validate a density matrix: Hermitian, unit trace, PSD (within tolerance)."""
    rho = np.asarray(rho, dtype=complex)
    check_hermitian(rho, herm_tol)
    if abs(np.trace(rho).real - 1.0) > trace_tol:
        raise ValueError("trace %r != 1 within %g" % (np.trace(rho), trace_tol))
    if np.linalg.eigvalsh(rho).min() < -psd_tol:
        raise ValueError("density matrix has eigenvalue below -%g" % psd_tol)
    return rho


def partial_trace(rho, n_qubits, keep):
    """Reduced state on the kept qubits (indices in register order).

    rho must be 2^n_qubits dimensional; the kept qubits stay in their
    original relative order.
    """
    rho = np.asarray(rho)
    dim = 2**n_qubits
    if rho.shape != (dim, dim):
        raise ValueError("state dim %s does not match %d qubits" % (rho.shape, n_qubits))
    keep = sorted(set(keep))
    if not keep or keep[0] < 0 or keep[-1] >= n_qubits:
        raise ValueError("invalid keep set %r for %d qubits" % (keep, n_qubits))
    traced = [q for q in range(n_qubits) if q not in keep]
    t = rho.reshape((2,) * (2 * n_qubits))
    m = n_qubits
    for q in sorted(traced, reverse=True):
        t = np.trace(t, axis1=q, axis2=q + m)
        m -= 1
    d = 2 ** len(keep)
    return t.reshape(d, d)


def expm_hermitian(h, scale=1.0):
    """exp(-i * scale * H) for Hermitian H, via eigendecomposition."""
    h = np.asarray(h, dtype=complex)
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * scale * w)) @ v.conj().T


def trace_norm(a):
    """Sum of singular values; values below SV_CUTOFF are treated as 0."""
    a = np.asarray(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError("trace norm requires a square matrix")
    s = np.linalg.svd(a, compute_uv=False)
    return float(np.sum(s[s > SV_CUTOFF]))


def sqrtm_psd(a, tol=PSD_TOL):
    """Matrix square root of a PSD Hermitian matrix.

    Eigenvalues in [-tol, 0) are clamped to 0; anything lower raises,
    so transcription bugs surface instead of being silently repaired.
    """
    a = np.asarray(a, dtype=complex)
    w, v = np.linalg.eigh(a)
    if w.min() < -tol:
        raise NumericError("matrix is not PSD: min eigenvalue %g" % w.min())
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def fidelity(rho0, rho1, tol=PSD_TOL):
    """Tr sqrt(sqrt(rho0) rho1 sqrt(rho0)), the Bhattacharyya overlap."""
    rho0 = np.asarray(rho0, dtype=complex)
    rho1 = np.asarray(rho1, dtype=complex)
    if rho0.shape != rho1.shape:
        raise ValueError("dimension mismatch %s vs %s" % (rho0.shape, rho1.shape))
    s = sqrtm_psd(rho0, tol)
    w = np.linalg.eigvalsh(s @ rho1 @ s)
    if w.min() < -tol:
        raise NumericError("inner matrix not PSD: min eigenvalue %g" % w.min())
    return float(np.sum(np.sqrt(np.clip(w, 0.0, None))))
