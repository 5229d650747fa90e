"""Shared test corpus: exhaustive small graphs, seeded random graphs, and
independent oracles the implementation must agree with."""

from __future__ import annotations

import itertools
import random

from idindex import Graph, build_graph, is_connected
from idindex.cli import random_connected_graph

# master seed for the reproducible random corpus used across test modules
CORPUS_SEED = 20250817


def all_connected_graphs(n: int):
    """Every labeled connected graph on n vertices, by edge-mask filtering."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = build_graph(n, edges)
        if is_connected(g):
            yield g


def connected_corpus_up_to(n_max: int):
    for n in range(1, n_max + 1):
        yield from all_connected_graphs(n)


def random_corpus(count: int, sizes=(6, 7, 8), seed: int = CORPUS_SEED):
    """The seeded random-graph corpus; sizes cycle through ``sizes``."""
    rng = random.Random(seed)
    return [random_connected_graph(sizes[i % len(sizes)], rng) for i in range(count)]


def floyd_warshall(g: Graph):
    """Independent all-pairs oracle (no BFS); inf stays as None."""
    n = g.n
    inf = None
    dist = [[inf] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
        for w in g.adj[v]:
            dist[v][w] = 1
    for m in range(n):
        for u in range(n):
            dum = dist[u][m]
            if dum is None:
                continue
            row_u = dist[u]
            row_m = dist[m]
            for v in range(n):
                dmv = row_m[v]
                if dmv is None:
                    continue
                via = dum + dmv
                if row_u[v] is None or via < row_u[v]:
                    row_u[v] = via
    return dist
