"""Finite loopless multigraphs and their Laplacians.

Construction covers edge lists, circulant graphs C_n(s_1,...,s_k),
cones, joins, and cobordisms of two circulant layers.  Vertices are
dense integers 0..n-1; the apex of a cone is always the highest index,
so matrix layouts (and hence Smith forms) are deterministic.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exact_linalg import IntMatrix


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph: vertex count plus unordered-pair multiplicities.

    ``edges`` is a sorted tuple of (u, v, multiplicity) with u < v and
    multiplicity >= 1; the value is immutable and hashable.
    """

    n_vertices: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n_vertices < 1:
            raise ValueError("graph needs at least one vertex")
        for u, v, mult in self.edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{u}) not allowed")
            if not (0 <= u < v < self.n_vertices):
                raise ValueError(f"edge ({u},{v}) out of range or unsorted")
            if mult < 1:
                raise ValueError(f"edge ({u},{v}) has multiplicity {mult}")

    @classmethod
    def from_multiplicities(cls, n: int, mults: dict[tuple[int, int], int]) -> "Multigraph":
        edges = tuple(sorted((u, v, m) for (u, v), m in mults.items() if m))
        return cls(n, edges)

    @property
    def n_edges(self) -> int:
        """Total number of edges, counted with multiplicity."""
        return sum(m for _, _, m in self.edges)

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        for a, b, m in self.edges:
            if (a, b) == (u, v):
                return m
        return 0

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges expanded with multiplicity, in deterministic order."""
        out = []
        for u, v, m in self.edges:
            out.extend([(u, v)] * m)
        return out

    def degree(self, v: int) -> int:
        d = 0
        for a, b, m in self.edges:
            if a == v or b == v:
                d += m
        return d

    def degrees(self) -> list[int]:
        d = [0] * self.n_vertices
        for a, b, m in self.edges:
            d[a] += m
            d[b] += m
        return d

    def adjacency(self) -> IntMatrix:
        a = [[0] * self.n_vertices for _ in range(self.n_vertices)]
        for u, v, m in self.edges:
            a[u][v] = m
            a[v][u] = m
        return IntMatrix(a)

    def is_connected(self) -> bool:
        n = self.n_vertices
        if n == 1:
            return True
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        return count == n


@dataclass(frozen=True)
class CirculantSpec:
    """Circulant graph C_n(s_1,...,s_k) with 1 <= s_1 < ... < s_k <= n/2."""

    n: int
    jumps: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("circulant graphs need n >= 3")
        if not self.jumps:
            raise ValueError("at least one jump required")
        prev = 0
        for s in self.jumps:
            if s <= prev:
                raise ValueError(f"jumps must be strictly increasing, got {self.jumps}")
            prev = s
        if self.jumps[0] < 1 or 2 * self.jumps[-1] > self.n:
            raise ValueError(f"jumps must lie in [1, n/2], got {self.jumps} for n={self.n}")

    @property
    def has_half_jump(self) -> bool:
        """True iff n is even and the largest jump is exactly n/2."""
        return 2 * self.jumps[-1] == self.n

    @property
    def is_connected(self) -> bool:
        # gcd(s_1,...,s_k,n) = 1; disconnected specs are allowed but flagged.
        return math.gcd(self.n, *self.jumps) == 1

    def __str__(self) -> str:
        return f"C{self.n}({','.join(map(str, self.jumps))})"


@dataclass(frozen=True)
class CobordismSpec:
    """Two circulant layers on n vertices each, joined by the matching {i, n+i}.

    Both jump lists must be strict (s < n/2); half jumps are not allowed
    in cobordism layers.
    """

    n: int
    jumps1: tuple[int, ...]
    jumps2: tuple[int, ...]

    def __post_init__(self):
        for jumps in (self.jumps1, self.jumps2):
            spec = CirculantSpec(self.n, jumps)
            if spec.has_half_jump:
                raise ValueError("cobordism layers must have jumps < n/2")

    def __str__(self) -> str:
        j1 = ",".join(map(str, self.jumps1))
        j2 = ",".join(map(str, self.jumps2))
        return f"COB{self.n}({j1}|{j2})"


def graph_from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Multigraph:
    """Multigraph on n vertices; repeated pairs accumulate multiplicity."""
    mults: dict[tuple[int, int], int] = {}
    for u, v in pairs:
        if u == v:
            raise ValueError(f"loop edge ({u},{u}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        key = (u, v) if u < v else (v, u)
        mults[key] = mults.get(key, 0) + 1
    return Multigraph.from_multiplicities(n, mults)


def circulant(spec: CirculantSpec) -> Multigraph:
    """Build C_n(s_1,...,s_k); a half jump s = n/2 contributes a single edge."""
    n = spec.n
    mults: dict[tuple[int, int], int] = {}
    for s in spec.jumps:
        top = n // 2 if 2 * s == n else n
        for i in range(top):
            u, v = i, (i + s) % n
            key = (u, v) if u < v else (v, u)
            mults[key] = mults.get(key, 0) + 1
    return Multigraph.from_multiplicities(n, mults)


def cone(g: Multigraph) -> Multigraph:
    """Join one new apex vertex (highest index) to every vertex of g."""
    n = g.n_vertices
    edges = list(g.edges) + [(v, n, 1) for v in range(n)]
    return Multigraph(n + 1, tuple(sorted(edges)))


def join(g1: Multigraph, g2: Multigraph) -> Multigraph:
    """Disjoint union plus one edge between every cross pair."""
    m = g1.n_vertices
    n = g2.n_vertices
    edges = list(g1.edges)
    edges += [(u + m, v + m, mult) for u, v, mult in g2.edges]
    edges += [(u, m + v, 1) for u in range(m) for v in range(n)]
    return Multigraph(m + n, tuple(sorted(edges)))


def cobordism(spec: CobordismSpec) -> Multigraph:
    """Two circulant layers on n vertices plus the perfect matching {i, n+i}."""
    n = spec.n
    layer1 = circulant(CirculantSpec(n, spec.jumps1))
    layer2 = circulant(CirculantSpec(n, spec.jumps2))
    edges = list(layer1.edges)
    edges += [(u + n, v + n, mult) for u, v, mult in layer2.edges]
    edges += [(i, n + i, 1) for i in range(n)]
    return Multigraph(2 * n, tuple(sorted(edges)))


def laplacian(g: Multigraph) -> IntMatrix:
    """L = D - A; symmetric with zero row and column sums."""
    n = g.n_vertices
    a = [[0] * n for _ in range(n)]
    for u, v, m in g.edges:
        a[u][v] -= m
        a[v][u] -= m
        a[u][u] += m
        a[v][v] += m
    return IntMatrix(a)


def build_graph(spec: CirculantSpec | CobordismSpec) -> Multigraph:
    if isinstance(spec, CirculantSpec):
        return circulant(spec)
    return cobordism(spec)


_CIRC_RE = re.compile(r"^C(\d+)\(([0-9,\s]+)\)$")
_COB_RE = re.compile(r"^COB(\d+)\(([0-9,\s]+)\|([0-9,\s]+)\)$")


def _parse_jumps(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(","))


def parse_circulant_spec(text: str) -> CirculantSpec:
    """Parse a spec string like ``C6(1,3)``."""
    m = _CIRC_RE.match(text.strip())
    if not m:
        raise ValueError(f"invalid circulant spec string: {text!r}")
    return CirculantSpec(int(m.group(1)), _parse_jumps(m.group(2)))


def parse_cobordism_spec(text: str) -> CobordismSpec:
    """Parse a spec string like ``COB3(1|1)``."""
    m = _COB_RE.match(text.strip())
    if not m:
        raise ValueError(f"invalid cobordism spec string: {text!r}")
    return CobordismSpec(int(m.group(1)), _parse_jumps(m.group(2)), _parse_jumps(m.group(3)))


def parse_graph_spec(text: str) -> CirculantSpec | CobordismSpec:
    """Parse either spec-string form."""
    text = text.strip()
    if text.startswith("COB"):
        return parse_cobordism_spec(text)
    return parse_circulant_spec(text)


def read_edge_list(text: str) -> Multigraph:
    """Parse the edge-list file format: first line ``n m``, then m lines ``u v``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"line 1: expected 'n m', got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header declares {m} edges but {len(lines) - 1} edge lines found")
    pairs = []
    for k, ln in enumerate(lines[1:], start=2):
        toks = ln.split()
        if len(toks) != 2:
            raise ValueError(f"line {k}: expected 'u v', got {ln!r}")
        pairs.append((int(toks[0]), int(toks[1])))
    return graph_from_edge_list(n, pairs)


def load_edge_list(path) -> Multigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return read_edge_list(fh.read())
