"""Shared test helpers: graph corpora, random generators, and independent
linear-algebra oracles (cofactor determinants, brute-force minor gcds)."""

from __future__ import annotations

import itertools
import math
import random

from conejac import IntMatrix, Multigraph, graph_from_edge_list


def connected_edge_sets(n: int) -> list[list[tuple[int, int]]]:
    """All edge subsets of K_n that form a connected spanning graph.

    Isomorph-inclusive: every labeled graph appears.
    """
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for b, (u, v) in enumerate(pairs):
            if mask >> b & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        seen = 1
        frontier = [0]
        while frontier:
            x = frontier.pop()
            nb = adj[x] & ~seen
            while nb:
                y = (nb & -nb).bit_length() - 1
                seen |= 1 << y
                frontier.append(y)
                nb &= nb - 1
        if seen == (1 << n) - 1:
            out.append([p for b, p in enumerate(pairs) if mask >> b & 1])
    return out


def connected_graph_corpus(max_n: int = 6) -> list[Multigraph]:
    """Every connected labeled graph on 1..max_n vertices."""
    graphs = []
    for n in range(1, max_n + 1):
        for pairs in connected_edge_sets(n):
            graphs.append(graph_from_edge_list(n, pairs))
    return graphs


def random_multigraph(rng: random.Random, max_vertices: int = 7, max_edges: int = 16) -> Multigraph:
    """Random loopless multigraph (parallel edges allowed) within oracle guards."""
    n = rng.randint(2, max_vertices)
    m = rng.randint(1, max_edges)
    pairs = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        pairs.append((u, v))
    return graph_from_edge_list(n, pairs)


def random_simple_graph(rng: random.Random, n: int, p: float = 0.5) -> Multigraph:
    pairs = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < p
    ]
    return graph_from_edge_list(n, pairs)


def random_int_matrix(rng: random.Random, nrows: int, ncols: int, lo: int = -4, hi: int = 4) -> IntMatrix:
    return IntMatrix([[rng.randint(lo, hi) for _ in range(ncols)] for _ in range(nrows)])


def cofactor_det(rows: list[list[int]]) -> int:
    """Determinant by Laplace expansion along the first row.

    Deliberately naive: an oracle independent of the Bareiss path.
    """
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [[r[c] for c in range(n) if c != j] for r in rows[1:]]
        total += (-1) ** j * a * cofactor_det(minor)
    return total


def minor_gcds(m: IntMatrix) -> list[int]:
    """delta_i = gcd of all i x i minors, by exhaustive enumeration."""
    rows = m.tolist()
    out = []
    for k in range(1, min(m.nrows, m.ncols) + 1):
        g = 0
        for rsel in itertools.combinations(range(m.nrows), k):
            for csel in itertools.combinations(range(m.ncols), k):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                g = math.gcd(g, cofactor_det(sub))
        out.append(g)
    return out


def random_unimodular(rng: random.Random, n: int, steps: int = 8) -> IntMatrix:
    """Product of random elementary integer row operations applied to I."""
    rows = IntMatrix.identity(n).tolist()
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            c = rng.randint(-2, 2)
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        elif op == 1:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [-a for a in rows[i]]
    return IntMatrix(rows)
