"""Regenerate src/toughham/data/atlas7.g6: every graph on at most 7 vertices.

The atlas lists the 1253 isomorphism classes for n = 0..7 (1044 at n = 7).
The null graph is skipped because graph6 streams conventionally start at n = 1.
"""

from pathlib import Path

import networkx as nx

from toughham.graph import Graph
from toughham.graph6 import write_graph6

OUT = Path(__file__).resolve().parent.parent / "src" / "toughham" / "data" / "atlas7.g6"


def main():
    lines = []
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() == 0:
            continue
        lines.append(write_graph6(Graph.from_edges(G.number_of_nodes(), G.edges())).decode("ascii"))
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {OUT}")


if __name__ == "__main__":
    main()
