"""Multi-start gradient search over the broadcast-state parameters.

The objective (trace-norm distance to the candidate family) is piecewise
smooth with kinks where eigenvalues of the difference cross zero, so the
search uses central-difference gradients with a backtracking line search
and a fixed, deterministic schedule of starting points; the landscape has
several basins and a single start is not reliable.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import kernels

FD_STEP = 1e-6
GRAD_TOL = 1e-9
MAX_ITER = 10_000
ARMIJO_C = 1e-4
ALPHA_INIT = 1.0
ALPHA_MIN = 1e-13
ALPHA_MAX = 1e9
STALL_TOL = 1e-12
STALL_WINDOW = 50
PMAP_HALF = 0  # p-tilde in [0.5, 1]
PMAP_FULL = 1  # p-tilde in [0, 1]


@dataclass
class OptResult:
    x: np.ndarray
    fun: float
    iterations: int
    converged: bool


def default_starts():
    """16 deterministic starts spread over both Bloch spheres and the
    p-tilde map domain."""
    starts = []
    k = 0
    for xp in (0.3 * math.pi, 0.7 * math.pi):
        for yp in (0.25 * math.pi, 1.25 * math.pi):
            for xc in (0.3 * math.pi, 0.7 * math.pi):
                for yc in (0.25 * math.pi, 1.25 * math.pi):
                    z = (0.0, 1.5, -1.5, 3.0)[k % 4]
                    starts.append([xp, yp, xc, yc, z])
                    k += 1
    return np.array(starts)


def fixed_psi_starts(x_psi, y_psi):
    """Starts for the restricted search with the system basis frozen."""
    starts = []
    k = 0
    for xc in (0.15 * math.pi, 0.5 * math.pi, 0.85 * math.pi):
        for yc in (0.25 * math.pi, math.pi, 1.75 * math.pi):
            z = (0.0, 2.0, -2.0)[k % 3]
            starts.append([x_psi, y_psi, xc, yc, z])
            k += 1
    return np.array(starts)


def descend(rho, x0, pmap, free=None, step=FD_STEP, grad_tol=GRAD_TOL,
            max_iter=MAX_ITER):
    """Quasi-Newton (BFGS) descent with Armijo backtracking from one start.

    Plain steepest descent crawls here: the objective is badly scaled
    (the weight map's tail is exponentially flat in z while the angle
    directions have order-one slopes), and trace-norm kinks make it
    zigzag.  The BFGS metric fixes the scaling; the line search failing
    at every scale is taken as convergence onto a kink or the minimum.

    `free` is an optional boolean mask of parameters allowed to move
    (used when the system basis is frozen).
    """
    x = np.array(x0, dtype=float)
    n = x.size
    f, g = kernels.sbs_objective_grad(rho, x, pmap, step)
    mask = None if free is None else np.asarray(free, dtype=float)
    if mask is not None:
        g = g * mask
    hinv = np.eye(n)
    f_mark, it_mark = f, 0
    for it in range(1, max_iter + 1):
        # kinks can sustain microscopic line-search improvements forever;
        # treat a long window without real progress as converged
        if f < f_mark - STALL_TOL:
            f_mark, it_mark = f, it
        elif it - it_mark > STALL_WINDOW:
            return OptResult(x=x, fun=f, iterations=it, converged=True)
        gnorm = float(np.linalg.norm(g))
        if gnorm < grad_tol:
            return OptResult(x=x, fun=f, iterations=it, converged=True)
        d = -hinv @ g
        slope = float(d @ g)
        if slope >= 0.0:  # stale metric; restart from the raw gradient
            hinv = np.eye(n)
            d = -g
            slope = -gnorm * gnorm
        alpha = ALPHA_INIT
        while alpha >= ALPHA_MIN:
            trial = x + alpha * d
            ft = kernels.sbs_objective(rho, *trial, pmap)
            if ft <= f + ARMIJO_C * alpha * slope:
                break
            alpha *= 0.5
        else:
            return OptResult(x=x, fun=f, iterations=it, converged=True)
        f_new, g_new = kernels.sbs_objective_grad(rho, trial, pmap, step)
        if mask is not None:
            g_new = g_new * mask
        s = alpha * d
        y = g_new - g
        sy = float(s @ y)
        if sy > 1e-12 * float(np.linalg.norm(s)) * float(np.linalg.norm(y)):
            rho_k = 1.0 / sy
            v = np.eye(n) - rho_k * np.outer(s, y)
            hinv = v @ hinv @ v.T + rho_k * np.outer(s, s)
        else:
            hinv = np.eye(n)
        x, f, g = trial, f_new, g_new
    return OptResult(x=x, fun=f, iterations=max_iter, converged=False)


def multistart(rho, starts, pmap, free=None, **kw):
    """Run descend from every start; returns (best, all_converged)."""
    best = None
    all_ok = True
    for x0 in starts:
        res = descend(rho, x0, pmap, free=free, **kw)
        all_ok = all_ok and res.converged
        if best is None or res.fun < best.fun or (
            res.fun == best.fun and tuple(res.x) < tuple(best.x)
        ):
            best = res
    return best, all_ok
