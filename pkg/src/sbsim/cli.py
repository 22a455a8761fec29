"""Command-line front end: single-point reports, sweeps and figure presets.

Exit codes: 0 success, 1 argument error, 2 numeric/convergence failures
above the --max-failures threshold.
"""
import argparse
import json
import math
import os
import sys
from dataclasses import asdict

import numpy as np

from . import evolve, presets, sweep
from .model import ModelConfig


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        raise SystemExit(1)


def _add_config_flags(p):
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--alpha1", type=float, default=0.0)
    p.add_argument("--alpha2", type=float, default=0.0)
    p.add_argument("--alpha3", type=float, default=0.0)
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--nenv", type=int, default=2)
    p.add_argument("--observed", type=int, default=None)
    p.add_argument("--variant", choices=evolve.VARIANTS, default="auto")


def _config_from_args(args):
    kw = dict(
        theta=args.theta, alpha1=args.alpha1, alpha2=args.alpha2,
        alpha3=args.alpha3, p=args.p, t=args.t, n_env=args.nenv,
    )
    if args.observed is not None:
        kw["observed"] = args.observed
    return ModelConfig(**kw)


def _parse_axis(text, steps):
    parts = text.split(":")
    if len(parts) == 4:
        name, lo, hi, n = parts
        return sweep.Axis(name, float(lo), float(hi), int(n))
    if len(parts) == 3:
        name, lo, hi = parts
        return sweep.Axis(name, float(lo), float(hi), steps)
    raise ValueError("axis must be name:lo:hi or name:lo:hi:steps, got %r" % text)


def _parse_grid(text):
    try:
        parts = [int(v) for v in text.lower().split("x")]
    except ValueError:
        raise ValueError("--grid must look like 41x41, got %r" % text)
    if len(parts) == 1:
        return parts[0], parts[0]
    if len(parts) == 2:
        return parts[0], parts[1]
    raise ValueError("--grid must have one or two dimensions")


_CONFIG_KEYS = {
    "theta": float, "alpha1": float, "alpha2": float, "alpha3": float,
    "p": float, "t": float, "n_env": int, "observed": int,
    "variant": str, "quantity": str, "seed": int, "axis1": str, "axis2": str,
}


def load_sweep_config(path):
    """Parse a `key = value` sweep description file; unknown keys rejected."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError("%s:%d: expected key = value" % (path, lineno))
            key, _, val = line.partition("=")
            key, val = key.strip(), val.strip()
            if key not in _CONFIG_KEYS:
                raise ValueError("%s:%d: unknown key %r" % (path, lineno, key))
            values[key] = _CONFIG_KEYS[key](val)
    return values


def _spec_from_config_file(path, args):
    values = load_sweep_config(path)
    cfg_kw = {k: values[k] for k in
              ("theta", "alpha1", "alpha2", "alpha3", "p", "t", "n_env", "observed")
              if k in values}
    base = ModelConfig(**cfg_kw)
    if "axis1" not in values or "quantity" not in values:
        raise ValueError("config file needs at least axis1 and quantity")
    axis1 = _parse_axis(values["axis1"], 41)
    axis2 = _parse_axis(values["axis2"], 41) if "axis2" in values else None
    return sweep.SweepSpec(
        base=base, axis1=axis1, axis2=axis2, quantity=values["quantity"],
        seed=values.get("seed", args.seed), variant=values.get("variant", "auto"),
    )


def _report_to_dict(rep):
    out = {}
    for key, val in vars(rep).items():
        if key == "optimal" and val is not None:
            out[key] = {
                "p_tilde": val.p_tilde, "x_psi": val.x_psi, "y_psi": val.y_psi,
                "x_chi": val.x_chi, "y_chi": val.y_chi,
            }
        elif isinstance(val, np.ndarray):
            out[key] = val.tolist()
        else:
            out[key] = val
    return out


def _write_sweep(label, spec, rows, args):
    fmt = args.format
    out = args.out or "."
    if os.path.isdir(out) or out.endswith(os.sep) or args.cmd == "preset":
        os.makedirs(out, exist_ok=True)
        stem = os.path.join(out, label)
    else:
        stem = out
    data_path = stem + (".csv" if fmt == "csv" else ".jsonl")
    writer = sweep.write_csv if fmt == "csv" else sweep.write_jsonl
    writer(rows, spec, data_path)
    summary = sweep.summarize(rows)
    sweep.write_metadata(spec, stem + ".meta.json", extra={"summary": summary})
    print("%s: %d points, %d failures -> %s"
          % (label, summary["n_points"], summary["n_failures"], data_path))
    return summary["n_failures"]


def main(argv=None):
    parser = _Parser(prog="sbsim", description=__doc__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_point = sub.add_parser("point", parents=[], help="single-configuration report as JSON")
    _add_config_flags(p_point)
    p_point.add_argument("--no-distance", action="store_true",
                         help="skip the exact SBS-distance optimization")
    p_point.add_argument("--delta", action="store_true",
                         help="also compute the basis-preference difference")
    p_point.add_argument("--out", default=None)

    p_sweep = sub.add_parser("sweep", help="grid sweep over one or two parameters")
    _add_config_flags(p_sweep)
    p_sweep.add_argument("--quantity", choices=sweep.QUANTITIES, default=None)
    p_sweep.add_argument("--axis1", default=None, help="name:lo:hi[:steps]")
    p_sweep.add_argument("--axis2", default=None, help="name:lo:hi[:steps]")
    p_sweep.add_argument("--grid", default="41x41", help="steps per axis, e.g. 41x41")
    p_sweep.add_argument("--config", default=None, help="key = value sweep file")
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--out", default="sweep")
    p_sweep.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p_sweep.add_argument("--workers", type=int, default=None)
    p_sweep.add_argument("--max-failures", type=int, default=0)

    p_preset = sub.add_parser("preset", help="regenerate a figure's data grid")
    p_preset.add_argument("name", choices=presets.PRESET_NAMES)
    p_preset.add_argument("--grid", default="41x41")
    p_preset.add_argument("--seed", type=int, default=0)
    p_preset.add_argument("--out", default=".")
    p_preset.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p_preset.add_argument("--workers", type=int, default=None)
    p_preset.add_argument("--max-failures", type=int, default=0)

    args = parser.parse_args(argv)

    try:
        if args.cmd == "point":
            cfg = _config_from_args(args)
            rep = evolve.pipeline(
                cfg, variant=args.variant,
                compute_distance=False if args.no_distance else None,
                compute_delta=args.delta,
            )
            text = json.dumps(_report_to_dict(rep), indent=2, sort_keys=True)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text + "\n")
            else:
                print(text)
            return 0

        if args.cmd == "sweep":
            if args.config:
                spec = _spec_from_config_file(args.config, args)
            else:
                if not args.axis1 or not args.quantity:
                    raise ValueError("sweep needs --axis1 and --quantity (or --config)")
                n1, n2 = _parse_grid(args.grid)
                axis1 = _parse_axis(args.axis1, n1)
                axis2 = _parse_axis(args.axis2, n2) if args.axis2 else None
                spec = sweep.SweepSpec(
                    base=_config_from_args(args), axis1=axis1, axis2=axis2,
                    quantity=args.quantity, seed=args.seed, variant=args.variant,
                )
            rows = sweep.run_sweep(spec, workers=args.workers)
            failures = _write_sweep(os.path.basename(args.out) or "sweep", spec, rows, args)
            return 0 if failures <= args.max_failures else 2

        if args.cmd == "preset":
            n1, n2 = _parse_grid(args.grid)
            failures = 0
            for label, spec in presets.preset_specs(args.name, n1, n2):
                spec = sweep.SweepSpec(
                    base=spec.base, axis1=spec.axis1, axis2=spec.axis2,
                    quantity=spec.quantity, seed=args.seed, variant=spec.variant,
                )
                rows = sweep.run_sweep(spec, workers=args.workers)
                failures += _write_sweep(label, spec, rows, args)
            return 0 if failures <= args.max_failures else 2
    except (ValueError, OSError) as exc:
        print("sbsim: error: %s" % exc, file=sys.stderr)
        return 1

    return 0


if __name__ == "__main__":
    sys.exit(main())
