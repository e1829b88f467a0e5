"""Report rendering: sampled CSV tables plus matplotlib figures for a
constructed scaling/wavelet system."""

from __future__ import annotations

import csv
import json
import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .cli import artifact_json
from .refine import RefinementSet


def _sample(funcs, norms, lo: float, hi: float, samples: int):
    xs = [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]
    cols = []
    for f, ns in zip(funcs, norms):
        scale = 1.0 / math.sqrt(float(ns))
        cols.append([scale * f.eval_float(x) for x in xs])
    return xs, cols


def _write_csv(path: str, label: str, xs, cols):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t"] + [f"{label}_{j}" for j in range(len(cols))])
        for i, x in enumerate(xs):
            writer.writerow([f"{x:.12g}"] + [f"{col[i]:.12g}" for col in cols])


def _write_figure(path: str, title: str, label: str, xs, cols):
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    for j, col in enumerate(cols):
        ax.plot(xs, col, lw=1.2, label=f"{label}$_{{{j}}}$")
    ax.axhline(0.0, color="0.6", lw=0.6)
    ax.set_xlabel("t")
    ax.set_title(title)
    ax.legend(loc="upper right", fontsize=7, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(rs: RefinementSet, out_dir: str, samples: int = 400) -> list[str]:
    """Write phi/psi CSV samples, the figures, and the exact artifact JSON.

    Sampled values are unit-normalized in floats; the JSON keeps the exact
    unnormalized coefficients.  Returns the list of paths written.
    """
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    xs, cols = _sample(rs.phi.entries, rs.phi.norms_sq, -1.0, 1.0, samples)
    p = os.path.join(out_dir, "phi.csv")
    _write_csv(p, "phi", xs, cols)
    paths.append(p)
    p = os.path.join(out_dir, "phi.png")
    _write_figure(p, f"scaling functions, n={rs.n} ({rs.family})", r"$\varphi$", xs, cols)
    paths.append(p)
    xs, cols = _sample(rs.psi, rs.psi_norms_sq, -1.0, 1.0, samples)
    p = os.path.join(out_dir, "psi.csv")
    _write_csv(p, "psi", xs, cols)
    paths.append(p)
    p = os.path.join(out_dir, "psi.png")
    _write_figure(p, f"wavelets, n={rs.n} ({rs.family})", r"$\psi$", xs, cols)
    paths.append(p)
    p = os.path.join(out_dir, "artifact.json")
    with open(p, "w") as fh:
        json.dump(artifact_json(rs), fh, indent=2)
        fh.write("\n")
    paths.append(p)
    return paths
