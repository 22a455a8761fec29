"""Compare the compiled and pure-numpy objective kernels.

Usage: python benchmarks/bench_kernels.py [n_states]

Reports per-call times for the scalar objective, the gradient and the
batch entry point, plus the end-to-end multi-start optimization (the
latter in subprocesses so each run gets its import-time backend choice).
"""
import os
import subprocess
import sys
import time

import numpy as np

from sbsim import kernels


def _random_state(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = a @ a.conj().T
    return np.ascontiguousarray(rho / np.trace(rho).real)


def bench_raw(n_states=5):
    rng = np.random.default_rng(0)
    params = np.ascontiguousarray(
        np.column_stack(
            [
                rng.uniform(0, np.pi, 2000),
                rng.uniform(0, 2 * np.pi, 2000),
                rng.uniform(0, np.pi, 2000),
                rng.uniform(0, 2 * np.pi, 2000),
                rng.uniform(-3, 3, 2000),
            ]
        )
    )
    rows = {}
    for name in ("cython", "pure"):
        try:
            backend = kernels.get_backend(name)
        except ImportError:
            print("%-8s unavailable" % name)
            continue
        rho = _random_state(rng)
        start = time.perf_counter()
        for row in params[:500]:
            backend.sbs_objective(rho, *row)
        t_obj = (time.perf_counter() - start) / 500
        start = time.perf_counter()
        for row in params[:200]:
            backend.sbs_objective_grad(rho, np.ascontiguousarray(row))
        t_grad = (time.perf_counter() - start) / 200
        start = time.perf_counter()
        backend.sbs_objective_batch(rho, params)
        t_batch = (time.perf_counter() - start) / len(params)
        rows[name] = (t_obj, t_grad, t_batch)
        print(
            "%-8s objective %8.2f us   gradient %8.2f us   batch %8.2f us/pt"
            % (name, 1e6 * t_obj, 1e6 * t_grad, 1e6 * t_batch)
        )
    if len(rows) == 2:
        print(
            "speedup  objective %7.1fx   gradient %7.1fx   batch %7.1fx"
            % tuple(rows["pure"][i] / rows["cython"][i] for i in range(3))
        )


def bench_end_to_end(n_states=5):
    code = (
        "import time, numpy as np\n"
        "from sbsim.metrics import optimize_sbs_distance\n"
        "rng = np.random.default_rng(0)\n"
        "total = 0.0\n"
        "for _ in range(%d):\n"
        "    a = rng.normal(size=(4,4)) + 1j*rng.normal(size=(4,4))\n"
        "    rho = a @ a.conj().T\n"
        "    rho = np.ascontiguousarray(rho / np.trace(rho).real)\n"
        "    start = time.perf_counter()\n"
        "    optimize_sbs_distance(rho)\n"
        "    total += time.perf_counter() - start\n"
        "print(total / %d)\n" % (n_states, n_states)
    )
    times = {}
    for name, env_extra in (("cython", {}), ("pure", {"SBSIM_PURE": "1"})):
        env = dict(os.environ)
        env.pop("SBSIM_PURE", None)
        env.update(env_extra)
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        if out.returncode != 0:
            print("%-8s failed: %s" % (name, out.stderr.strip().splitlines()[-1]))
            continue
        times[name] = float(out.stdout.strip())
        print("%-8s full optimization %8.1f ms/state" % (name, 1e3 * times[name]))
    if len(times) == 2:
        print("speedup  %7.1fx" % (times["pure"] / times["cython"]))


if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    print("== raw kernels ==")
    bench_raw(n)
    print("== multi-start optimization (%d states) ==" % n)
    bench_end_to_end(n)
