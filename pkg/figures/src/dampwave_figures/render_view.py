"""Render one view of an evolve run: the publication-style reproductions.

Each figure is a heatmap of a (time, space) density grid emitted by
``dampwave evolve``: the front view shows the travelling profile over
(x, t) at the oscillator center-plane, the side view the oscillation over
(y, t) with the translation integrated out.  An optional 3-D surface of
the same data is available behind --surface; the heatmap is the primary
deliverable because it compares robustly.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .gridio import SchemaError, read_grid, run_params, spacetime_axes

VIEWS = ("front", "side")
RUNS = ("damped", "nondamped")


@dataclass(frozen=True)
class FigureSpec:
    """Inputs and presentation choices for one rendered view."""

    input_base: Path
    view: str
    output: Path
    colormap: str = "magma"
    axis_labels: tuple[str, str] = ("", "")
    title: str = ""
    surface: bool = False

    def __post_init__(self) -> None:
        if self.view not in VIEWS:
            raise SchemaError(f"view must be one of {VIEWS}, got {self.view!r}")


def default_spec(run_dir: Path, view: str, run: str, output: Path, **kw) -> FigureSpec:
    if run not in RUNS:
        raise SchemaError(f"run must be one of {RUNS}, got {run!r}")
    coord = "x" if view == "front" else "y"
    title = f"{'Damped' if run == 'damped' else 'Nondamped'} wave, {view} view"
    return FigureSpec(
        input_base=run_dir / f"figure_{view}_{run}",
        view=view,
        output=output,
        axis_labels=(coord, "t"),
        title=title,
        **kw,
    )


def render_view(spec: FigureSpec) -> Path:
    """Render the heatmap (or surface); returns the written path.

    Fails without writing anything when the grid is empty or the sidecar
    does not match the documented schema.
    """
    data, meta = read_grid(spec.input_base)
    if data.size == 0:
        raise SchemaError(f"{spec.input_base}: empty grid, nothing to render")
    ts, xs = spacetime_axes(meta)
    params = run_params(meta)
    lam = params.get("medium", {}).get("lambda")

    fig = plt.figure(figsize=(7.0, 5.0), dpi=150)
    if spec.surface:
        ax = fig.add_subplot(111, projection="3d")
        T, X = np.meshgrid(ts, xs, indexing="ij")
        ax.plot_surface(X, T, data, cmap=spec.colormap, linewidth=0, antialiased=False)
        ax.set_zlabel(r"$|\Psi|^2$")
    else:
        ax = fig.add_subplot(111)
        mesh = ax.pcolormesh(
            xs, ts, data, cmap=spec.colormap, shading="nearest", rasterized=True
        )
        fig.colorbar(mesh, ax=ax, label=r"$|\Psi|^2$")
    xlabel, ylabel = spec.axis_labels
    ax.set_xlabel(xlabel or ("x" if spec.view == "front" else "y"))
    ax.set_ylabel(ylabel or "t")
    title = spec.title
    if lam is not None:
        title = f"{title}  ($\\lambda$ = {lam:g})"
    ax.set_title(title)
    fig.tight_layout()
    spec.output.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(spec.output)
    plt.close(fig)
    return spec.output


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="dampwave-render-view",
        description="Render a front/side heatmap from a dampwave evolve run.",
    )
    parser.add_argument("--in", dest="run_dir", required=True, help="evolve output directory")
    parser.add_argument("--out", required=True, help="output image file")
    parser.add_argument("--view", choices=VIEWS, required=True)
    parser.add_argument("--run", choices=RUNS, default="damped")
    parser.add_argument("--cmap", default="magma")
    parser.add_argument("--surface", action="store_true", help="3-D surface instead of heatmap")
    parser.add_argument("--xlabel", default="")
    parser.add_argument("--ylabel", default="")
    args = parser.parse_args(argv)
    try:
        spec = default_spec(
            Path(args.run_dir),
            args.view,
            args.run,
            Path(args.out),
            colormap=args.cmap,
            surface=args.surface,
        )
        if args.xlabel or args.ylabel:
            spec = replace(
                spec,
                axis_labels=(
                    args.xlabel or spec.axis_labels[0],
                    args.ylabel or spec.axis_labels[1],
                ),
            )
        out = render_view(spec)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
