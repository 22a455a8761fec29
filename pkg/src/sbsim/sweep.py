"""Parameter-grid sweeps with deterministic, machine-readable output.

A sweep walks a 1-D or 2-D grid over ModelConfig fields, evaluates one
requested quantity per point, and emits rows in lexicographic grid order.
Per-point failures are recorded in an error column and never abort the
sweep.  Identical spec + seed gives byte-identical files.
"""
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import evolve, metrics
from .model import ModelConfig

QUANTITIES = (
    "sbs_distance",
    "upper_bound",
    "delta",
    "gamma",
    "fidelity",
    "thermal_distance",
    "optimal_basis_params",
)
AXIS_FIELDS = ("theta", "alpha1", "alpha2", "alpha3", "p", "t")
_RANGES = {"theta": (0.0, np.pi / 2), "p": (0.0, 0.5)}


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if self.name not in AXIS_FIELDS:
            raise ValueError("axis parameter must be one of %s" % (AXIS_FIELDS,))
        if self.steps < 2:
            raise ValueError("axis needs at least 2 steps")
        if self.lo > self.hi:
            raise ValueError("axis range is inverted")
        lo, hi = _RANGES.get(self.name, (0.0, np.inf))
        if self.lo < lo - 1e-12 or self.hi > hi + 1e-12:
            raise ValueError(
                "axis %s range [%g, %g] outside validity [%g, %g]"
                % (self.name, self.lo, self.hi, lo, hi)
            )

    def values(self):
        return np.linspace(self.lo, self.hi, self.steps)


@dataclass(frozen=True)
class SweepSpec:
    base: ModelConfig
    axis1: Axis
    axis2: Axis | None
    quantity: str
    seed: int = 0
    variant: str = "auto"

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise ValueError("quantity must be one of %s" % (QUANTITIES,))
        if self.variant not in evolve.VARIANTS:
            raise ValueError("variant must be one of %s" % (evolve.VARIANTS,))


_REPORT_ATTR = {
    "sbs_distance": "sbs_distance",
    "optimal_basis_params": "sbs_distance",
    "upper_bound": "upper_bound",
    "delta": "delta",
    "gamma": "gamma",
    "fidelity": "fid",
    "thermal_distance": "thermal_dist",
}


def eval_point(cfg, variant, quantity):
    """One grid point -> (value, p_tilde, x_psi, y_psi or Nones)."""
    needs_opt = quantity in ("sbs_distance", "optimal_basis_params")
    needs_delta = quantity == "delta"
    resolved = variant
    if resolved == "auto":
        resolved = "eq6_full" if cfg.n_env == 2 else "central_only"
    if not needs_opt and not needs_delta and resolved == "central_only":
        rep = evolve.central_report(cfg)
    else:
        rho = evolve.observed_joint_state(cfg, resolved)
        rep = metrics.report(
            rho, compute_distance=needs_opt, compute_delta=needs_delta
        )
    value = getattr(rep, _REPORT_ATTR[quantity])
    if value is None:
        raise ValueError(
            "quantity %r not computable for this configuration" % quantity
        )
    if rep.optimal is not None:
        return value, rep.optimal.p_tilde, rep.optimal.x_psi, rep.optimal.y_psi
    return value, None, None, None


def _point_job(args):
    spec, i, j = args
    overrides = {spec.axis1.name: float(spec.axis1.values()[i])}
    row = {"i": i, "j": j, spec.axis1.name: overrides[spec.axis1.name]}
    if spec.axis2 is not None:
        overrides[spec.axis2.name] = float(spec.axis2.values()[j])
        row[spec.axis2.name] = overrides[spec.axis2.name]
    row.update({"value": None, "p_tilde": None, "x_psi": None, "y_psi": None,
                "error": ""})
    try:
        cfg = replace(spec.base, **overrides)
        value, p_tilde, x_psi, y_psi = eval_point(cfg, spec.variant, spec.quantity)
        row.update({"value": value, "p_tilde": p_tilde, "x_psi": x_psi,
                    "y_psi": y_psi})
    except Exception as exc:  # recorded, sweep continues
        row["error"] = "%s: %s" % (type(exc).__name__, exc)
    return row


def run_sweep(spec, workers=None):
    """Evaluate the whole grid; rows come back in lexicographic order."""
    n1 = spec.axis1.steps
    n2 = spec.axis2.steps if spec.axis2 is not None else 1
    jobs = [(spec, i, j) for i in range(n1) for j in range(n2)]
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(jobs) < 4:
        return [_point_job(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(jobs) // (8 * workers))
        return list(pool.map(_point_job, jobs, chunksize=chunk))


def marginal_slice(spec, fixed, workers=None):
    """1-D slice along axis1 with the given parameters pinned."""
    for name, value in fixed.items():
        if name not in AXIS_FIELDS and name not in ("n_env", "observed"):
            raise ValueError("unknown fixed parameter %r" % name)
    base = replace(spec.base, **fixed)
    slice_spec = SweepSpec(
        base=base, axis1=spec.axis1, axis2=None,
        quantity=spec.quantity, seed=spec.seed, variant=spec.variant,
    )
    return run_sweep(slice_spec, workers=workers)


def _interior_minimum(profile):
    """True when some interior point lies strictly below both endpoints."""
    vals = [v for v in profile if v is not None]
    if len(vals) != len(profile) or len(profile) < 3:
        return False
    inner = min(profile[1:-1])
    return inner < profile[0] and inner < profile[-1]


def summarize(rows, axis_names=None):
    """Column statistics plus interior-extremum (non-monotonicity) flags."""
    if not rows:
        raise ValueError("cannot summarize an empty table")
    values = [r["value"] for r in rows]
    good = [(k, v) for k, v in enumerate(values) if v is not None]
    if axis_names is None:
        axis_names = [k for k in rows[0] if k in AXIS_FIELDS]
    if good:
        kmin, vmin = min(good, key=lambda kv: kv[1])
        kmax, vmax = max(good, key=lambda kv: kv[1])
        summary = {
            "min": vmin,
            "max": vmax,
            "argmin": {a: rows[kmin][a] for a in axis_names},
            "argmax": {a: rows[kmax][a] for a in axis_names},
        }
    else:  # every point failed; still report the failure statistics
        summary = {"min": None, "max": None, "argmin": None, "argmax": None}
    summary.update(
        n_failures=sum(1 for v in values if v is None),
        n_points=len(rows),
    )
    n1 = max(r["i"] for r in rows) + 1
    n2 = max(r["j"] for r in rows) + 1
    grid = [[None] * n2 for _ in range(n1)]
    for r in rows:
        grid[r["i"]][r["j"]] = r["value"]
    flags = {}
    if n1 >= 3:
        flags["axis1_interior_minimum"] = any(
            _interior_minimum([grid[i][j] for i in range(n1)]) for j in range(n2)
        )
    if n2 >= 3:
        flags["axis2_interior_minimum"] = any(
            _interior_minimum([grid[i][j] for j in range(n2)]) for i in range(n1)
        )
    summary["flags"] = flags
    return summary


_COLUMNS = ("i", "j", "axis1", "axis2", "value", "p_tilde", "x_psi", "y_psi", "error")


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_csv(rows, spec, path):
    names = [spec.axis1.name] + ([spec.axis2.name] if spec.axis2 else [])
    header = ["i", "j"] + names + ["value", "p_tilde", "x_psi", "y_psi", "error"]
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for r in rows:
            fh.write(",".join(_fmt(r.get(c)) for c in header) + "\n")


def write_jsonl(rows, spec, path):
    with open(path, "w") as fh:
        for r in rows:
            fh.write(json.dumps(r, sort_keys=True) + "\n")


def spec_to_dict(spec):
    d = {
        "quantity": spec.quantity,
        "seed": spec.seed,
        "variant": spec.variant,
        "axis1": vars(spec.axis1).copy(),
        "axis2": vars(spec.axis2).copy() if spec.axis2 else None,
        "base": vars(spec.base).copy(),
    }
    return d


def write_metadata(spec, path, extra=None):
    from . import __version__
    from .kernels import BACKEND

    meta = {
        "spec": spec_to_dict(spec),
        "seed": spec.seed,
        "version": __version__,
        "kernel_backend": BACKEND,
    }
    if extra:
        meta.update(extra)
    with open(path, "w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
