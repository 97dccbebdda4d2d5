#!/usr/bin/env python3
"""Regenerate the vendored graph6 corpora under tests/data/.

Enumeration of small graphs is out of scope for the package itself, so the
fixtures are produced offline by this script (any standard enumeration tool
works; here we take the <=7-vertex graph atlas shipped with networkx) and
committed.  Records are sorted by (n, edge count, graph6 string) so the
files are stable across regenerations.

Usage: python tools/make_corpus.py
"""

import sys
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from indicated.graphs import Graph, is_connected, write_graph6  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"


def convert(nxg):
    nodes = sorted(nxg.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(index[u], index[v]) for u, v in nxg.edges()])


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    atlas = [convert(nxg) for nxg in graph_atlas_g() if nxg.number_of_nodes() >= 1]

    connected7 = sorted(
        (g for g in atlas if g.n <= 7 and is_connected(g)),
        key=lambda g: (g.n, g.num_edges, write_graph6(g)),
    )
    all6 = sorted(
        (g for g in atlas if 1 <= g.n <= 6),
        key=lambda g: (g.n, g.num_edges, write_graph6(g)),
    )

    (DATA / "connected_le7.g6").write_text(
        "".join(write_graph6(g) + "\n" for g in connected7))
    (DATA / "all_le6.g6").write_text(
        "".join(write_graph6(g) + "\n" for g in all6))
    per_n = {}
    for g in connected7:
        per_n[g.n] = per_n.get(g.n, 0) + 1
    print(f"connected_le7.g6: {len(connected7)} graphs {per_n}")
    print(f"all_le6.g6: {len(all6)} graphs")


if __name__ == "__main__":
    main()
