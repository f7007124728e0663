"""Simple digraphs with the traversal and structure machinery the solvers need.

Nodes are dense integers 0..n-1.  Graphs are immutable and hashable so
derived structures (e.g. the condensation) can be cached per graph.
"""
from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional


class GraphError(ValueError):
    """Input graph violates a structural precondition."""


class GraphClass(enum.Enum):
    GENERAL = "general"
    DAG = "dag"
    FOREST = "forest"
    ORIENTED_TREE = "oriented-tree"
    OUT_ROOTED_TREE = "out-rooted-tree"
    IN_ROOTED_TREE = "in-rooted-tree"
    TOURNAMENT = "tournament"
    BALANCED_DEGREE_TWO = "balanced-degree-two"


class Digraph:
    """Immutable simple digraph: no loops, no duplicate arcs."""

    __slots__ = ("n", "arcs", "out_adj", "in_adj", "_hash")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("node count must be nonnegative")
        raw = list(arcs)
        arc_list = sorted(set(raw))
        if len(arc_list) != len(raw):
            raise GraphError("duplicate arc")
        out_adj: list[list[int]] = [[] for _ in range(n)]
        in_adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in arc_list:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at node {u}")
            out_adj[u].append(v)
            in_adj[v].append(u)
        self.n = n
        self.arcs = tuple(arc_list)
        self.out_adj = tuple(tuple(a) for a in out_adj)
        self.in_adj = tuple(tuple(a) for a in in_adj)
        self._hash = hash((n, self.arcs))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)!r})"

    def nodes(self) -> range:
        return range(self.n)

    def _check_nodes(self, s: Iterable[int]) -> set[int]:
        out = set(s)
        for v in out:
            if not (0 <= v < self.n):
                raise GraphError(f"node id {v} out of range")
        return out


def descendants(g: Digraph, s: Iterable[int]) -> set[int]:
    """All nodes reachable from ``s`` by directed paths, including ``s``."""
    seen = g._check_nodes(s)
    stack = list(seen)
    while stack:
        u = stack.pop()
        for v in g.out_adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def ascendants(g: Digraph, s: Iterable[int]) -> set[int]:
    """Union over v in s of the nodes u != v that reach v.

    Members of ``s`` are not automatically included, but one member may be
    an ascendant of another.
    """
    start = g._check_nodes(s)
    out: set[int] = set()
    for v in start:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for p in g.in_adj[u]:
                if p not in seen:
                    seen.add(p)
                    stack.append(p)
        out |= seen - {v}
    return out


def kernel(g: Digraph, s: Iterable[int]) -> set[int]:
    """Sources of the induced subgraph g[s]; defined on DAGs only."""
    if not is_dag(g):
        raise GraphError("kernel is only defined on acyclic digraphs")
    sel = g._check_nodes(s)
    return {v for v in sel if not any(p in sel for p in g.in_adj[v])}


def is_dag(g: Digraph) -> bool:
    return len(_topological_order(g)) == g.n


def _topological_order(g: Digraph) -> list[int]:
    """Kahn's algorithm; returns fewer than n nodes when a circuit exists."""
    indeg = [len(g.in_adj[v]) for v in range(g.n)]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    order = []
    while ready:
        u = ready.pop()
        order.append(u)
        for v in g.out_adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    return order


def induced_subgraph(g: Digraph, keep: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Subgraph on ``keep``; returns (subgraph, original ids by new id)."""
    kept = sorted(g._check_nodes(keep))
    remap = {v: i for i, v in enumerate(kept)}
    arcs = [
        (remap[u], remap[v]) for u, v in g.arcs if u in remap and v in remap
    ]
    return Digraph(len(kept), arcs), kept


@dataclass(frozen=True)
class Condensation:
    """DAG-of-SCCs view.  Components are numbered in topological order,
    ties broken by smallest member node id, so numbering is reproducible."""

    dag: Digraph
    component_of: tuple[int, ...]
    component_weight: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]


def _strongly_connected_components(g: Digraph) -> list[list[int]]:
    """Iterative Tarjan; components in reverse topological discovery order."""
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(g.n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(pi, len(g.out_adj[v])):
                w = g.out_adj[v][i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


@lru_cache(maxsize=256)
def _condense_cached(g: Digraph, weights: tuple[int, ...]) -> Condensation:
    comps = _strongly_connected_components(g)
    raw_of = [0] * g.n
    for ci, comp in enumerate(comps):
        for v in comp:
            raw_of[v] = ci
    raw_arcs = {
        (raw_of[u], raw_of[v]) for u, v in g.arcs if raw_of[u] != raw_of[v]
    }
    # Renumber components: topological order, ties by smallest member id.
    k = len(comps)
    succ: list[set[int]] = [set() for _ in range(k)]
    indeg = [0] * k
    for a, b in raw_arcs:
        succ[a].add(b)
    for a in range(k):
        for b in succ[a]:
            indeg[b] += 1
    ready = [(min(comps[c]), c) for c in range(k) if indeg[c] == 0]
    heapq.heapify(ready)
    new_id = [-1] * k
    order = []
    while ready:
        _, c = heapq.heappop(ready)
        new_id[c] = len(order)
        order.append(c)
        for b in succ[c]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(ready, (min(comps[b]), b))
    dag = Digraph(k, [(new_id[a], new_id[b]) for a, b in raw_arcs])
    members = tuple(tuple(sorted(comps[c])) for c in order)
    component_of = tuple(new_id[raw_of[v]] for v in range(g.n))
    component_weight = tuple(sum(weights[v] for v in m) for m in members)
    return Condensation(dag, component_of, component_weight, members)


def condense(g: Digraph, weights: Iterable[int]) -> Condensation:
    w = tuple(weights)
    if len(w) != g.n:
        raise GraphError("weight vector length must equal node count")
    return _condense_cached(g, w)


def _underlying_edges(g: Digraph) -> set[tuple[int, int]]:
    return {(min(u, v), max(u, v)) for u, v in g.arcs}


def is_underlying_forest(g: Digraph) -> bool:
    """True when the underlying undirected graph is acyclic and simple
    (no opposite arc pair)."""
    edges = _underlying_edges(g)
    if len(edges) != len(g.arcs):
        return False  # opposite arcs collapse to one edge
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_underlying_connected(g: Digraph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.out_adj[u] + g.in_adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


def is_underlying_tree(g: Digraph) -> bool:
    return is_underlying_forest(g) and is_underlying_connected(g)


def is_tournament(g: Digraph) -> bool:
    """Exactly one arc between every pair of distinct nodes."""
    if len(g.arcs) != g.n * (g.n - 1) // 2:
        return False
    return len(_underlying_edges(g)) == len(g.arcs)


def is_balanced_degree_two(g: Digraph) -> bool:
    """Every node has in-degree 2 and out-degree 2 (Eulerian case)."""
    if g.n == 0:
        return False
    return all(
        len(g.out_adj[v]) == 2 and len(g.in_adj[v]) == 2 for v in range(g.n)
    )


def is_out_rooted_tree(g: Digraph) -> bool:
    """Oriented tree where every node but the unique anti-root has
    out-degree 1 (all arcs point toward the anti-root)."""
    if g.n == 0:
        return False
    return is_underlying_tree(g) and all(len(a) <= 1 for a in g.out_adj)


def is_in_rooted_tree(g: Digraph) -> bool:
    if g.n == 0:
        return False
    return is_underlying_tree(g) and all(len(a) <= 1 for a in g.in_adj)


def classify(g: Digraph) -> GraphClass:
    """Most specific class label.  Tournament and the balanced Eulerian
    class take priority over the tree/DAG ladder; solvers should query
    the specific predicates rather than trust the single label."""
    if is_tournament(g):
        return GraphClass.TOURNAMENT
    if is_balanced_degree_two(g):
        return GraphClass.BALANCED_DEGREE_TWO
    if not is_dag(g):
        return GraphClass.GENERAL
    if not is_underlying_forest(g):
        return GraphClass.DAG
    if not is_underlying_connected(g):
        return GraphClass.FOREST
    if is_out_rooted_tree(g):
        return GraphClass.OUT_ROOTED_TREE
    if is_in_rooted_tree(g):
        return GraphClass.IN_ROOTED_TREE
    return GraphClass.ORIENTED_TREE


@dataclass(frozen=True)
class RootedTreeView:
    """Father/children maps of an oriented tree rooted at an arbitrary node.

    ``ch_plus[v]`` holds children u with arc (v,u); ``ch_minus[v]`` holds
    children u with arc (u,v).  Children are listed in ascending id order.
    """

    root: int
    fa: tuple[Optional[int], ...]
    ch_plus: tuple[tuple[int, ...], ...]
    ch_minus: tuple[tuple[int, ...], ...]

    def children(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.ch_plus[v] + self.ch_minus[v]))


def rooted_view(g: Digraph, root: int) -> RootedTreeView:
    if not is_underlying_tree(g):
        raise GraphError("rooted_view requires an oriented tree")
    if not (0 <= root < g.n):
        raise GraphError(f"root {root} out of range")
    fa: list[Optional[int]] = [None] * g.n
    ch_plus: list[list[int]] = [[] for _ in range(g.n)]
    ch_minus: list[list[int]] = [[] for _ in range(g.n)]
    arcset = set(g.arcs)
    seen = {root}
    queue = [root]
    while queue:
        v = queue.pop(0)
        for u in g.out_adj[v] + g.in_adj[v]:
            if u in seen:
                continue
            seen.add(u)
            fa[u] = v
            if (v, u) in arcset:
                ch_plus[v].append(u)
            else:
                ch_minus[v].append(u)
            queue.append(u)
    return RootedTreeView(
        root,
        tuple(fa),
        tuple(tuple(sorted(c)) for c in ch_plus),
        tuple(tuple(sorted(c)) for c in ch_minus),
    )
