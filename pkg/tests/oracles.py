"""Independent reference implementations used only by the tests.

Everything here is written against the problem definitions directly
(subset enumeration, reachability matrices, literal superset checks) and
deliberately shares no code with the library under test.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Optional


def reach_matrix(n: int, arcs) -> list[list[bool]]:
    """Transitive closure including the diagonal (Floyd-Warshall)."""
    r = [[i == j for j in range(n)] for i in range(n)]
    for u, v in arcs:
        r[u][v] = True
    for k in range(n):
        for i in range(n):
            if r[i][k]:
                row_k = r[k]
                row_i = r[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return r


def descendants_oracle(n: int, arcs, s: Iterable[int]) -> set[int]:
    r = reach_matrix(n, arcs)
    return {v for u in s for v in range(n) if r[u][v]}


def ascendants_oracle(n: int, arcs, s: Iterable[int]) -> set[int]:
    r = reach_matrix(n, arcs)
    return {u for v in s for u in range(n) if r[u][v] and u != v}


def scc_oracle(n: int, arcs) -> list[frozenset[int]]:
    """Components by pairwise mutual reachability, each sorted by min id."""
    r = reach_matrix(n, arcs)
    comps = []
    seen = set()
    for v in range(n):
        if v in seen:
            continue
        comp = frozenset(u for u in range(n) if r[v][u] and r[u][v])
        seen |= comp
        comps.append(comp)
    return comps


def strong_closed(arcs, s: set[int]) -> bool:
    return all(v in s for u, v in arcs if u in s)


def weak_closed(n: int, arcs, s: set[int]) -> bool:
    for x in range(n):
        ins = [u for u, v in arcs if v == x]
        if ins and x not in s and all(u in s for u in ins):
            return False
    return True


def feasible_sets(
    n: int, arcs, weights, budget: int, weak: bool
) -> list[frozenset[int]]:
    """Closure-and-budget feasible subsets, enumerated literally."""
    out = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            s = set(combo)
            if sum(weights[v] for v in s) > budget:
                continue
            ok = weak_closed(n, arcs, s) if weak else strong_closed(arcs, s)
            if ok:
                out.append(frozenset(s))
    return out


def maximal_sets(
    n: int, arcs, weights, budget: int, weak: bool
) -> list[frozenset[int]]:
    """Feasible sets with no feasible strict superset (literal definition)."""
    feas = feasible_sets(n, arcs, weights, budget, weak)
    return [s for s in feas if not any(s < t for t in feas)]


def optimum(n: int, arcs, weights, budget: int, kind: str) -> Optional[int]:
    """Best objective by enumeration; kind is one of the four kind values."""
    weak = kind in ("ssgw", "maximal-ssgw")
    if kind.startswith("maximal"):
        pool = maximal_sets(n, arcs, weights, budget, weak)
        if not pool:
            return None
        return min(sum(weights[v] for v in s) for s in pool)
    pool = feasible_sets(n, arcs, weights, budget, weak)
    return max(sum(weights[v] for v in s) for s in pool)


def subset_sums(values, cap: int) -> set[int]:
    """Reachable subset sums up to cap (classic table)."""
    sums = {0}
    for v in values:
        sums |= {s + v for s in sums if s + v <= cap}
    return sums


def has_clique(n: int, edges, k: int) -> bool:
    eset = {(min(u, v), max(u, v)) for u, v in edges}
    for combo in itertools.combinations(range(n), k):
        if all(
            (min(a, b), max(a, b)) in eset
            for a, b in itertools.combinations(combo, 2)
        ):
            return True
    return False


def _independent(eset, s) -> bool:
    return not any((min(a, b), max(a, b)) in eset for a, b in itertools.combinations(s, 2))


def _dominating(n: int, adj, s) -> bool:
    return all(v in s or any(u in s for u in adj[v]) for v in range(n))


def independence_number(n: int, edges) -> int:
    eset = {(min(u, v), max(u, v)) for u, v in edges}
    best = 0
    for size in range(n, -1, -1):
        if any(
            _independent(eset, c) for c in itertools.combinations(range(n), size)
        ):
            return size
    return best


def independent_domination_number(n: int, edges) -> int:
    eset = {(min(u, v), max(u, v)) for u, v in edges}
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for size in range(n + 1):
        for c in itertools.combinations(range(n), size):
            if _independent(eset, c) and _dominating(n, adj, set(c)):
                return size
    raise AssertionError("every graph has an independent dominating set")
