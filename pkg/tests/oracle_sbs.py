"""Independent oracle for the minimal broadcast-structure distance.

Built before (and independently of) the package optimizer: candidate
states are constructed with plain numpy, the trace norm comes from
numpy's batched eigvalsh, the outer search is a dense grid over the
system Bloch angles and the weight, the inner fragment state is chosen
analytically per branch, and the final polish is scipy's Nelder-Mead.
Nothing here touches sbsim.kernels or sbsim.optimize.
"""
import numpy as np
from scipy.optimize import minimize

TWO_PI = 2.0 * np.pi


def _kets(x, y):
    """Pure qubit states and their orthogonal complements, vectorized."""
    ket = np.stack([np.cos(0.5 * x), np.sin(0.5 * x) * np.exp(1j * y)], axis=-1)
    perp = np.stack([np.sin(0.5 * x), -np.cos(0.5 * x) * np.exp(1j * y)], axis=-1)
    return ket, perp


def oracle_objective(rho, x_psi, y_psi, x_chi, y_chi, p_tilde):
    """Trace-norm distance to one candidate, scalar and numpy-only."""
    psi, psi_p = _kets(np.asarray(x_psi), np.asarray(y_psi))
    chi, chi_p = _kets(np.asarray(x_chi), np.asarray(y_chi))
    sigma = p_tilde * np.kron(np.outer(psi, psi.conj()), np.outer(chi, chi.conj()))
    sigma += (1.0 - p_tilde) * np.kron(
        np.outer(psi_p, psi_p.conj()), np.outer(chi_p, chi_p.conj())
    )
    return float(np.sum(np.abs(np.linalg.eigvalsh(rho - sigma))))


def _batch_objective(rho, psis, psi_ps, chis, chi_ps, p_tildes):
    """Objective for aligned arrays of candidates, shape (n, 2) kets."""

    def proj(v):
        return np.einsum("ni,nj->nij", v, v.conj())

    sigma = np.einsum("n,nik,njl->nijkl", p_tildes, proj(psis), proj(chis))
    sigma += np.einsum(
        "n,nik,njl->nijkl", 1.0 - p_tildes, proj(psi_ps), proj(chi_ps)
    )
    diff = rho.reshape(2, 2, 2, 2)[None] - sigma
    ev = np.linalg.eigvalsh(diff.reshape(-1, 4, 4))
    return np.sum(np.abs(ev), axis=1)


def _dominant_eigvecs(mats):
    """Principal eigenvector of each 2x2 Hermitian matrix in a stack."""
    w, v = np.linalg.eigh(mats)
    return v[:, :, 1]  # eigh sorts ascending


def oracle_sbs_distance(rho, n_grid=40, top_k=12):
    """Grid search over (x_psi, y_psi, p_tilde) with an analytic inner
    fragment-state choice, then Nelder-Mead refinement of the best basins."""
    rho = np.asarray(rho, dtype=complex)
    r4 = rho.reshape(2, 2, 2, 2)
    xs = np.linspace(0.0, np.pi, n_grid)
    ys = np.linspace(0.0, TWO_PI, n_grid, endpoint=False)
    pts = np.linspace(0.5, 1.0, n_grid)

    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    psi, psi_p = _kets(gx.ravel(), gy.ravel())  # (m, 2), m = n_grid^2

    # conditional fragment states along each branch of the candidate basis
    b0 = np.einsum("mi,ijkl,mk->mjl", psi.conj(), r4, psi)
    b1 = np.einsum("mi,ijkl,mk->mjl", psi_p.conj(), r4, psi_p)
    chi_a = _dominant_eigvecs(b0)
    # second candidate: complement of the dominant branch-1 state
    dom1 = _dominant_eigvecs(b1)
    chi_b = np.stack([dom1[:, 1].conj(), -dom1[:, 0].conj()], axis=-1)

    m = psi.shape[0]
    rows = []
    for chi in (chi_a, chi_b):
        chi_p = np.stack([chi[:, 1].conj(), -chi[:, 0].conj()], axis=-1)
        for pt in pts:
            vals = _batch_objective(
                rho, psi, psi_p, chi, chi_p, np.full(m, pt)
            )
            k = int(np.argmin(vals))
            rows.append(
                (float(vals[k]), gx.ravel()[k], gy.ravel()[k],
                 chi[k], float(pt))
            )
    rows.sort(key=lambda r: r[0])

    # keep the best plus a spread of distinct basins for refinement
    picked = []
    for row in rows:
        bloch = np.array(
            [np.sin(row[1]) * np.cos(row[2]), np.sin(row[1]) * np.sin(row[2]),
             np.cos(row[1])]
        )
        distinct = all(
            np.linalg.norm(bloch - b) > 0.35 or abs(row[4] - p) > 0.12
            for _, b, p in picked
        )
        if not picked or distinct:
            picked.append((row, bloch, row[4]))
        if len(picked) >= top_k:
            break

    best = min(row[0] for row in rows)
    for (val, x_psi, y_psi, chi, pt), _, _ in picked:
        ax = np.abs(chi[0])
        x_chi = 2.0 * np.arctan2(np.abs(chi[1]), ax)
        y_chi = float(np.angle(chi[1] / chi[0])) if ax > 1e-12 else 0.0

        def fun(v):
            return oracle_objective(
                rho, v[0], v[1], v[2], v[3], float(np.clip(v[4], 0.5, 1.0))
            )

        x0 = np.array([x_psi, y_psi, x_chi, y_chi, pt])
        for _ in range(2):  # restart once; Nelder-Mead stalls on kinks
            res = minimize(
                fun, x0, method="Nelder-Mead",
                options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 4000},
            )
            x0 = res.x
        best = min(best, float(res.fun))
    return best
