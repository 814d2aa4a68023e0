"""Plot the p = 10 energy levels against m for ell = 0, 5, 10.

    python scripts/plot_figure1.py --output figure1.png
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from monosphere.cli import FIGURE1_SERIES, figure1_table

MARKERS = {"dots": "o", "diamonds": "D", "triangles": "^"}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--output", default="figure1.png")
    args = parser.parse_args()

    rows = figure1_table().rows
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for ell, name in FIGURE1_SERIES.items():
        pts = [(r[2], r[5]) for r in rows if r[1] == ell]
        ax.plot(*zip(*pts), MARKERS[name], ls="none", label=f"$\\ell={ell}$")
    ax.set_xlabel("$m$")
    ax.set_ylabel(r"$\varepsilon$  [$\hbar^2/2m^*R^2$]")
    ax.set_title("$p = 10$")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)
    print(f"wrote {args.output}")


if __name__ == "__main__":
    main()
