"""Static PNG drawings of (birooted) liw-graphs.

Left vertices sit in one column and right vertices in another. Lines are
dashed and roots are drawn as double circles.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .graph import BliwGraph, LiwGraph  # noqa: E402


def _positions(g: LiwGraph) -> dict[int, tuple[float, float]]:
    pos = {}
    for col, verts in ((0.0, g.left_vertices), (1.0, g.right_vertices)):
        k = len(verts)
        for i, v in enumerate(verts):
            pos[v] = (col, (k - 1) / 2 - i)
    return pos


def draw(a: LiwGraph | BliwGraph, ax=None, title: str | None = None):
    g = a.graph if isinstance(a, BliwGraph) else a
    roots = set(a.roots) if isinstance(a, BliwGraph) else set()
    if ax is None:
        h = max(2.5, 0.8 * max(len(g.left_vertices), len(g.right_vertices)))
        _, ax = plt.subplots(figsize=(5, h))
    pos = _positions(g)
    for u, v in g.lines:
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ax.plot([x1, x2], [y1, y2], ls="--", color="0.5", lw=1, zorder=1)
    # arrows bend slightly so a line between the same pair stays visible;
    # parallel arrows fan out further
    seen: dict[tuple[int, int], int] = {}
    for u, lab, v in sorted(g.arrows):
        k = seen.get((u, v), 0)
        seen[(u, v)] = k + 1
        rad = 0.12 * (k // 2 + 1) * (1 if k % 2 == 0 else -1)
        ax.annotate("", xy=pos[v], xytext=pos[u],
                    arrowprops=dict(arrowstyle="-|>", color="k", lw=1,
                                    shrinkA=9, shrinkB=9,
                                    connectionstyle=f"arc3,rad={rad}"))
        (x1, y1), (x2, y2) = pos[u], pos[v]
        # label a third of the way along, pushed toward the bend
        t = 0.3
        mx, my = x1 + t * (x2 - x1), y1 + t * (y2 - y1)
        mx += rad * 0.8 * (y2 - y1) * 0.5
        my -= rad * 0.8 * (x2 - x1) * 0.5
        ax.text(mx, my, lab, fontsize=9, ha="center", va="center",
                bbox=dict(boxstyle="round,pad=0.1", fc="white", ec="none"), zorder=4)
    for v, (x, y) in pos.items():
        ax.scatter([x], [y], s=140, facecolors="white", edgecolors="k", zorder=3)
        if v in roots:
            ax.scatter([x], [y], s=320, facecolors="none", edgecolors="k", zorder=3)
        ha, dx = ("right", -0.08) if x == 0 else ("left", 0.08)
        ax.text(x + dx, y, g.names[v], ha=ha, va="center", fontsize=9)
    ax.set_xlim(-0.8, 1.8)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    return ax


def save_png(a: LiwGraph | BliwGraph, path, title: str | None = None) -> None:
    ax = draw(a, title=title)
    fig = ax.figure
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
