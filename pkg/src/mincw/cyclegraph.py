"""Cycle codes of graphs.

The cycle code of a loopless graph is the kernel of its vertex-edge
incidence matrix over GF(2): edge sets in which every vertex has even
degree.  Its minimal codewords are exactly the edge sets of simple cycles,
which ``verify_cycle_correspondence`` checks against a direct backtracking
count.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from pathlib import Path

from .bounds import graph_cycle_upper
from .codes import LinearCode, _content_lines, count_minimal
from .errors import AcyclicGraph, BadParameter, EdgeOverflow, ParseError, SelfLoop, TooLarge
from .gf2 import MAX_LENGTH, BitMatrix, kernel_basis

MAX_CODE_DIMENSION = 20


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph on vertices 0..p-1; edge order fixes coordinates."""

    p: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.p < 0:
            raise BadParameter("vertex count must be nonnegative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.p and 0 <= v < self.p):
                raise BadParameter(f"edge ({u},{v}) has a vertex outside 0..{self.p - 1}")
        object.__setattr__(self, "edges", edges)

    @property
    def q(self) -> int:
        return len(self.edges)

    def components(self) -> int:
        parent = list(range(self.p))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.p
        for u, v in self.edges:
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                count -= 1
        return count

    def is_connected(self) -> bool:
        return self.components() == 1

    def has_self_loop(self) -> bool:
        return any(u == v for u, v in self.edges)


def complete_graph(p: int) -> Graph:
    return Graph(p, tuple(itertools.combinations(range(p), 2)))


def cycle_graph(p: int) -> Graph:
    return Graph(p, tuple((i, (i + 1) % p) for i in range(p)))


def path_graph(p: int) -> Graph:
    return Graph(p, tuple((i, i + 1) for i in range(p - 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def random_connected_graph(p: int, q: int, rng: random.Random, multi: bool = False) -> Graph:
    """Random spanning tree plus q - p + 1 extra edges (parallel ones only if ``multi``)."""
    if p < 1 or q < p - 1:
        raise BadParameter("need p >= 1 and q >= p - 1")
    order = list(range(p))
    rng.shuffle(order)
    edges = [(order[rng.randrange(i)], order[i]) for i in range(1, p)]
    present = {frozenset(e) for e in edges}
    pairs = [e for e in itertools.combinations(range(p), 2) if multi or frozenset(e) not in present]
    if not multi and q - len(edges) > len(pairs):
        raise BadParameter(f"a simple graph on {p} vertices has at most {p * (p - 1) // 2} edges")
    extra = [rng.choice(pairs) for _ in range(q - len(edges))] if multi else rng.sample(pairs, q - len(edges))
    edges += extra
    rng.shuffle(edges)
    return Graph(p, tuple(edges))


def incidence_matrix(g: Graph) -> BitMatrix:
    """p x q matrix; column e has ones at the two endpoints of edge e."""
    if g.has_self_loop():
        raise SelfLoop("self-loops have a zero incidence column over GF(2)")
    if g.q > MAX_LENGTH:
        raise EdgeOverflow(f"{g.q} edges exceed the {MAX_LENGTH}-coordinate limit")
    rows = [0] * g.p
    for e, (u, v) in enumerate(g.edges):
        rows[u] |= 1 << e
        rows[v] |= 1 << e
    return BitMatrix(g.q, tuple(rows))


def cycle_code(g: Graph) -> LinearCode:
    """The [q, q - p + c] code of even-degree edge sets."""
    basis = kernel_basis(incidence_matrix(g))
    if basis.rows == 0:
        raise AcyclicGraph("the graph has no cycles")
    return LinearCode(basis)


def count_elementary_cycles(g: Graph) -> int:
    """Number of simple cycles, each counted once as an edge set.

    Every cycle is found from its smallest edge ``(u, v)``: walk from v back
    to u using only larger edges and unvisited vertices.  A self-loop counts
    as a cycle of length one.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.p)]
    loops = 0
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            loops += 1
            continue
        adj[u].append((v, e))
        adj[v].append((u, e))

    total = loops
    for e0, (u, v) in enumerate(g.edges):
        if u == v:
            continue
        visited = [False] * g.p
        visited[u] = visited[v] = True
        stack = [(v, iter(adj[v]))]
        while stack:
            x, it = stack[-1]
            for y, e in it:
                if e <= e0:
                    continue
                if y == u:
                    total += 1
                elif not visited[y]:
                    visited[y] = True
                    stack.append((y, iter(adj[y])))
                    break
            else:
                stack.pop()
                if x != v:
                    visited[x] = False
    return total


@dataclass(frozen=True)
class CycleReport:
    p: int
    q: int
    components: int
    dimension: int
    cycles_via_code: int
    cycles_via_backtracking: int
    bound_new: int | None
    bound_old: int | None

    @property
    def agree(self) -> bool:
        return self.cycles_via_code == self.cycles_via_backtracking

    def bounds_hold(self) -> bool:
        return all(b is None or self.cycles_via_code <= b for b in (self.bound_new, self.bound_old))


def verify_cycle_correspondence(g: Graph) -> CycleReport:
    """Count cycles twice, as M of the cycle code and by backtracking.

    Bounds are reported for connected graphs only; both assume one
    component.
    """
    code = cycle_code(g)
    if code.k > MAX_CODE_DIMENSION:
        raise TooLarge(f"cycle space of dimension {code.k} is too large to enumerate")
    c = g.components()
    new = old = None
    if c == 1:
        new, old = graph_cycle_upper(g.p, g.q)
    return CycleReport(
        p=g.p,
        q=g.q,
        components=c,
        dimension=code.k,
        cycles_via_code=count_minimal(code),
        cycles_via_backtracking=count_elementary_cycles(g),
        bound_new=new,
        bound_old=old,
    )


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty graph file")
    try:
        p, q = (int(t) for t in lines[0].split())
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError:
        raise ParseError("expected integers: 'p q' then 'u v' per edge") from None
    if len(edges) != q or any(len(e) != 2 for e in edges):
        raise ParseError(f"header says {q} edges, found {len(edges)} lines")
    try:
        return Graph(p, tuple(edges))
    except BadParameter as exc:
        raise ParseError(str(exc)) from exc


def format_graph(g: Graph) -> str:
    return "\n".join([f"{g.p} {g.q}", *(f"{u} {v}" for u, v in g.edges)]) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))
