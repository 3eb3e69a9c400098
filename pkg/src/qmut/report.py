"""Figure rendering for reports: quiver drawings and exchange graphs.

Used by the CLI's ``--figure`` option; files are written next to the
delimited/JSON output, never displayed interactively.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx

from .classify import decide_mutation_finiteness
from .enumeration import MutationClassReport
from .io import verdict_display
from .quiver import ExchangeMatrix


def save_quiver_figure(q: ExchangeMatrix, path: str, labels: list[str] | None = None) -> None:
    """Draw the quiver: arrows annotated with multiplicity when > 1."""
    g = nx.DiGraph()
    g.add_nodes_from(range(q.n))
    mults = {}
    for i in range(q.n):
        for j in range(q.n):
            if q.rows[i][j] > 0:
                g.add_edge(i, j)
                if q.rows[i][j] > 1:
                    mults[(i, j)] = f"x{q.rows[i][j]}"
    pos = nx.circular_layout(g) if q.n > 1 else {0: (0.0, 0.0)}
    names = {i: (labels[i] if labels else str(i)) for i in range(q.n)}

    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    nx.draw_networkx_nodes(g, pos, ax=ax, node_color="#dbe9ff", edgecolors="#3b6ea5",
                           node_size=700)
    nx.draw_networkx_labels(g, pos, names, ax=ax, font_size=10)
    nx.draw_networkx_edges(g, pos, ax=ax, edge_color="#3b6ea5", arrows=True,
                           arrowsize=16, connectionstyle="arc3,rad=0.08", node_size=700)
    if mults:
        nx.draw_networkx_edge_labels(g, pos, mults, ax=ax, font_size=9)
    ax.set_title(verdict_display(decide_mutation_finiteness(q)), fontsize=10)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_exchange_graph_figure(report: MutationClassReport, path: str) -> None:
    """Draw the exchange graph between canonical representatives.

    Nodes are representative indices; one undirected edge per unordered
    mutation link (self-loops from mutations landing on an isomorphic
    quiver are dropped in the drawing).
    """
    key_index = {k: i for i, k in enumerate(report.keys)}
    g = nx.Graph()
    g.add_nodes_from(range(report.count))
    for a, b, _ in report.edges:
        ia, ib = key_index[a], key_index[b]
        if ia != ib:
            g.add_edge(ia, ib)
    pos = nx.spring_layout(g, seed=7) if report.count > 1 else {0: (0.0, 0.0)}

    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    nx.draw_networkx_nodes(g, pos, ax=ax, node_color="#ffe9c9", edgecolors="#a5703b",
                           node_size=420)
    nx.draw_networkx_labels(g, pos, ax=ax, font_size=8)
    nx.draw_networkx_edges(g, pos, ax=ax, edge_color="#a5703b")
    status = "complete" if report.complete else f"exhausted: {report.exhausted}"
    ax.set_title(f"{report.count} quivers ({status})", fontsize=10)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
