"""Pure-numpy fallback for the hot kernels; same API as the compiled core."""
import numpy as np

NAME = "pure"


def _ptilde(z, pmap):
    s = 1.0 / (1.0 + np.exp(-z))
    return 0.5 + 0.5 * s if pmap == 0 else s


def _candidates(params, pmap):
    """Candidate SBS states for a (n, 5) parameter block, shape (n, 4, 4)."""
    params = np.atleast_2d(params)
    xp, yp, xc, yc, z = (params[:, i] for i in range(5))
    pt = _ptilde(z, pmap)

    def pair(x, y):
        ph = np.exp(1j * y)
        ket = np.stack([np.cos(0.5 * x), np.sin(0.5 * x) * ph], axis=-1)
        perp = np.stack([np.sin(0.5 * x), -np.cos(0.5 * x) * ph], axis=-1)
        return ket, perp

    psi, psp = pair(xp, yp)
    chi, chp = pair(xc, yc)

    def proj(v):
        return np.einsum("ni,nj->nij", v, v.conj())

    sigma = np.einsum(
        "n,nik,njl->nijkl", pt, proj(psi), proj(chi)
    ) + np.einsum("n,nik,njl->nijkl", 1.0 - pt, proj(psp), proj(chp))
    return sigma.reshape(-1, 4, 4)


def sbs_objective(rho, xp, yp, xc, yc, z, pmap=0):
    sigma = _candidates(np.array([[xp, yp, xc, yc, z]]), pmap)[0]
    ev = np.linalg.eigvalsh(rho - sigma)
    return float(np.sum(np.abs(ev)))


def sbs_objective_batch(rho, params, pmap=0):
    sigma = _candidates(np.asarray(params, dtype=float), pmap)
    ev = np.linalg.eigvalsh(rho[None, :, :] - sigma)
    return np.sum(np.abs(ev), axis=1)


def sbs_objective_grad(rho, params, pmap=0, step=1e-6):
    params = np.asarray(params, dtype=float)
    block = np.empty((11, 5))
    block[:] = params
    for i in range(5):
        block[1 + 2 * i, i] += step
        block[2 + 2 * i, i] -= step
    vals = sbs_objective_batch(rho, block, pmap)
    grad = (vals[1::2] - vals[2::2]) / (2.0 * step)
    return float(vals[0]), grad
