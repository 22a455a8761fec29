"""Named sweep presets matching the standard heatmap panels.

Each preset expands to a list of (label, SweepSpec) pairs, one per panel.
Grid bounds are a documented choice (alpha ranges [0, 3], p in [0, 0.5],
41-point axes) wide enough to contain all the interesting landmarks;
override them with --grid / axis flags if needed.
"""
import math

from .model import ModelConfig
from .sweep import Axis, SweepSpec

THETAS = (
    ("theta0", 0.0),
    ("thetaPi8", math.pi / 8),
    ("thetaPi4", math.pi / 4),
    ("theta09Pi2", 0.9 * math.pi / 2),
)

PRESET_NAMES = ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7")


def _axes(n1, n2, name1="alpha2", name2="p"):
    hi1 = 3.0 if name1.startswith("alpha") else math.pi / 2
    a1 = Axis(name1, 0.0, hi1, n1)
    a2 = Axis(name2, 0.0, 0.5, n2) if n2 else None
    return a1, a2


def preset_specs(name, steps1=41, steps2=41):
    """(label, SweepSpec) panels for one preset name."""
    if name not in PRESET_NAMES:
        raise ValueError("unknown preset %r (one of %s)" % (name, (PRESET_NAMES,)))
    panels = []
    if name == "fig1":
        a1, a2 = _axes(steps1, steps2)
        base = ModelConfig(theta=0.0, n_env=2)
        panels.append(
            ("fig1", SweepSpec(base, a1, a2, "optimal_basis_params", variant="eq6_full"))
        )
    elif name == "fig2":
        for label, theta in THETAS:
            a1, a2 = _axes(steps1, steps2)
            base = ModelConfig(theta=theta, n_env=2)
            panels.append(
                ("fig2_" + label, SweepSpec(base, a1, a2, "sbs_distance", variant="eq6_full"))
            )
    elif name == "fig3":
        for label, theta in THETAS:
            base = ModelConfig(theta=theta, n_env=2)
            a1, _ = _axes(steps1, 0)
            panels.append(
                ("fig3a_" + label, SweepSpec(base, a1, None, "sbs_distance", variant="eq6_full"))
            )
            ap = Axis("p", 0.0, 0.5, steps1)
            panels.append(
                ("fig3b_" + label, SweepSpec(base, ap, None, "sbs_distance", variant="eq6_full"))
            )
    elif name == "fig4":
        for label, theta in THETAS:
            a1, a2 = _axes(steps1, steps2)
            base = ModelConfig(theta=theta, n_env=2)
            panels.append(
                ("fig4_" + label, SweepSpec(base, a1, a2, "delta", variant="eq6_full"))
            )
    elif name == "fig5":
        for label, theta in THETAS[:2]:
            a1, a2 = _axes(steps1, steps2, name1="alpha3")
            base = ModelConfig(theta=theta, n_env=2)
            panels.append(
                ("fig5_" + label, SweepSpec(base, a1, a2, "sbs_distance", variant="ring_eq30"))
            )
    elif name == "fig6":
        for label, theta in THETAS:
            a1, a2 = _axes(steps1, steps2)
            base = ModelConfig(theta=theta, n_env=8, observed=7)
            panels.append(
                ("fig6_" + label, SweepSpec(base, a1, a2, "upper_bound", variant="central_only"))
            )
    elif name == "fig7":
        for label, theta in THETAS:
            a1, a2 = _axes(steps1, steps2, name1="alpha3")
            base = ModelConfig(theta=theta, n_env=8, observed=7)
            panels.append(
                ("fig7_" + label, SweepSpec(base, a1, a2, "upper_bound", variant="ring_eq30"))
            )
    return panels
