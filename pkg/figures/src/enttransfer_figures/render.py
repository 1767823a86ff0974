"""Render the standard figures from the sweep CSVs emitted by enttransfer.

This package does no numerical work of its own: it parses the delimited
output of ``enttransfer sweep --preset fig1|fig2|fig3|fig4`` and draws it.
Figure ids fig1a, fig1b and fig1c select the three donor-angle panels of
the fig1 sweep; fig2, fig3 and fig4 each consume their whole CSV. Output
format (PNG or SVG) follows the output file extension.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

QUARTER_PI = math.pi / 4

#: Donor angle selecting each panel of the fig1 sweep.
PANEL_BETAS = {
    "fig1a": math.pi / 10,
    "fig1b": 0.5,
    "fig1c": math.pi / 5,
}

EXPECTED_COLUMNS = {
    "fig1a": ["beta", "alpha", "f1", "f2", "f3", "f3_x10"],
    "fig1b": ["beta", "alpha", "f1", "f2", "f3", "f3_x10"],
    "fig1c": ["beta", "alpha", "f1", "f2", "f3", "f3_x10"],
    "fig2": ["dbeta", "beta_c"],
    "fig3": ["dbeta", "beta", "lower_root", "upper_root"],
    "fig4": ["alpha", "dalpha", "p_max", "binding_term"],
}

FIGURE_IDS = tuple(EXPECTED_COLUMNS)


class SchemaError(ValueError):
    """The input CSV does not carry the columns the figure needs."""


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    input_csv: str
    output_image: str


def load_rows(path: str, figure_id: str) -> list[dict]:
    """Parse the CSV into float-valued rows; blank cells become None.

    Raises SchemaError listing the expected columns when the header does
    not match the preset schema for this figure.
    """
    expected = EXPECTED_COLUMNS[figure_id]
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(
                f"{path}: empty file; expected columns {expected}"
            ) from None
        if header != expected:
            raise SchemaError(
                f"{path}: header {header} does not match the {figure_id} "
                f"schema; expected columns {expected}"
            )
        rows = []
        for raw in reader:
            row = {}
            for key, cell in zip(header, raw):
                row[key] = float(cell) if cell not in ("", None) else None
            rows.append(row)
    return rows


def _build_fig1_panel(rows: list[dict], figure_id: str):
    beta = PANEL_BETAS[figure_id]
    panel = [
        r for r in rows
        if r["beta"] is not None and abs(r["beta"] - beta) < 1e-9
    ]
    if not panel:
        raise SchemaError(
            f"no rows with beta ~= {beta:.6f} for panel {figure_id}; "
            f"render from a fig1 preset sweep"
        )
    panel = [r for r in panel if r["f1"] is not None]
    alphas = [r["alpha"] for r in panel]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(alphas, [r["f1"] for r in panel], "-", color="tab:blue", label="f1")
    ax.plot(alphas, [r["f2"] for r in panel], "--", color="tab:orange", label="f2")
    ax.plot(
        alphas, [r["f3_x10"] for r in panel], ":", color="tab:green",
        label=r"f3 ($\times$10)",
    )
    ax.axhline(0.0, color="0.6", linewidth=0.8)
    ax.set_xlabel(r"$\alpha$ (rad)")
    ax.set_ylabel("slack")
    ax.set_title(rf"$\beta = {beta:.4f}$ rad")
    ax.legend()
    return fig


def _build_fig2(rows: list[dict]):
    rows = [r for r in rows if r["beta_c"] is not None]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot([r["dbeta"] for r in rows], [r["beta_c"] for r in rows], "-",
            color="tab:blue")
    ax.set_xlabel(r"$\Delta\beta$ (rad)")
    ax.set_ylabel(r"$\beta_c$ (rad)")
    return fig


def _build_fig3(rows: list[dict]):
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    groups: dict[float, list[dict]] = {}
    for row in rows:
        if row["lower_root"] is None or row["upper_root"] is None:
            continue  # empty or failed window: nothing to plot
        groups.setdefault(row["dbeta"], []).append(row)
    # Thinner lines for smaller decrements, per the standard styling.
    for rank, dbeta in enumerate(sorted(groups)):
        width = 0.6 + 0.5 * rank
        group = groups[dbeta]
        betas = [r["beta"] for r in group]
        color = f"C{rank}"
        ax.plot(betas, [r["upper_root"] for r in group], "-", color=color,
                linewidth=width, label=rf"$\Delta\beta = {dbeta:g}$")
        ax.plot(betas, [r["lower_root"] for r in group], "-", color=color,
                linewidth=width)
    ax.axhline(QUARTER_PI, color="0.3", linestyle="--", linewidth=0.9)
    ax.set_xlabel(r"$\beta$ (rad)")
    ax.set_ylabel(r"$\alpha$ (rad)")
    ax.legend()
    return fig


def _build_fig4(rows: list[dict]):
    rows = [r for r in rows if r["p_max"] is not None]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    alphas = [r["alpha"] for r in rows]
    probs = [r["p_max"] for r in rows]
    ax.plot(alphas, probs, "-", color="tab:blue")
    peak = max(rows, key=lambda r: r["p_max"])
    ax.plot([peak["alpha"]], [peak["p_max"]], "o", color="tab:red")
    ax.set_xlabel(r"$\alpha$ (rad)")
    ax.set_ylabel(r"$p_{max}$")
    return fig


def build_figure(spec: FigureSpec):
    """Build the matplotlib figure for a spec; pure function of the CSV."""
    if spec.figure_id not in FIGURE_IDS:
        raise SchemaError(
            f"unknown figure id {spec.figure_id!r}; expected one of {FIGURE_IDS}"
        )
    rows = load_rows(spec.input_csv, spec.figure_id)
    if spec.figure_id in PANEL_BETAS:
        return _build_fig1_panel(rows, spec.figure_id)
    builder = {"fig2": _build_fig2, "fig3": _build_fig3, "fig4": _build_fig4}
    return builder[spec.figure_id](rows)


def render(spec: FigureSpec) -> str:
    """Render the figure to spec.output_image (PNG or SVG by extension)."""
    suffix = Path(spec.output_image).suffix.lower()
    if suffix not in (".png", ".svg"):
        raise SchemaError(
            f"unsupported output format {suffix!r}; use .png or .svg"
        )
    fig = build_figure(spec)
    try:
        fig.savefig(spec.output_image, dpi=150, bbox_inches="tight")
    finally:
        plt.close(fig)
    return spec.output_image


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="enttransfer-figures",
        description="Render a standard figure from an enttransfer sweep CSV.",
    )
    parser.add_argument("--figure", required=True, choices=FIGURE_IDS)
    parser.add_argument("--input", required=True, help="sweep CSV to read")
    parser.add_argument("--output", required=True, help=".png or .svg to write")
    args = parser.parse_args(argv)
    try:
        path = render(FigureSpec(args.figure, args.input, args.output))
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
