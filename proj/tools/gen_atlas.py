#!/usr/bin/env python3
"""Write every graph on 1..7 vertices (up to isomorphism) as graph6 lines.

Uses the networkx graph atlas, which lists all 1253 graphs on 0..7 vertices;
the order-0 graph is dropped.

    python3 tools/gen_atlas.py > tests/data/atlas_n1_7.g6
"""

import sys

import networkx as nx


def main() -> None:
    out = sys.stdout
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0:
            continue
        out.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")


if __name__ == "__main__":
    main()
