#!/usr/bin/env python3
"""Write graph6 catalogs of all connected simple graphs on a given vertex count.

Uses the networkx graph atlas, which lists every simple graph on up to seven
vertices exactly once up to isomorphism.

    gen_connected_catalog.py 6 > connected6.g6
    gen_connected_catalog.py 1-5 > connected_le5.g6
"""
import sys

import networkx as nx


def parse_range(spec):
    if "-" in spec:
        lo, hi = spec.split("-")
        return range(int(lo), int(hi) + 1)
    return range(int(spec), int(spec) + 1)


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    wanted = set(parse_range(sys.argv[1]))
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n in wanted and n > 0 and nx.is_connected(g):
            sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode())


if __name__ == "__main__":
    main()
