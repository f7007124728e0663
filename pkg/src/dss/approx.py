"""Approximation schemes for the strong-closure problems on DAGs.

Both schemes enumerate every seed subset S of at most k nodes whose
descendant closure fits the budget, then complete it greedily:

- maximization: repeatedly add the descendant set of the source with the
  largest marginal contribution, skipping sources that overshoot;
  guarantee k/(k+1) of the optimum.
- maximal minimization: repeatedly add a minimum-weight sink of the
  unselected part until nothing fits; guarantee within (k+1)/k of the
  optimum for k >= 1 and within 2 for the plain greedy (k = 0).

General digraphs are condensed first; the guarantees carry over because
closed sets correspond one-to-one across the condensation.

Determinism: seed subsets are enumerated in lexicographic order over
sorted node ids by increasing size; greedy tie-breaks take the smallest
node id; equal-objective candidates keep the first one found.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import Digraph, condense, descendants, is_dag, kernel, ascendants
from .instance import ProblemKind, Solution, WeightedInstance


@dataclass(frozen=True)
class ApproxResult:
    solution: Solution
    k: int
    guarantee: Fraction


def _seed_subsets(n: int, k: int):
    for size in range(min(k, n) + 1):
        yield from itertools.combinations(range(n), size)


def _condensed_view(inst: WeightedInstance):
    """(dag, weights, expand) with expand mapping component sets back."""
    g = inst.graph
    if is_dag(g):
        return g, list(inst.weights), lambda comps: set(comps)
    cond = condense(g, inst.weights)

    def expand(comps):
        return {v for c in comps for v in cond.members[c]}

    return cond.dag, list(cond.component_weight), expand


def _greedy_fill_max(g: Digraph, weights, budget: int, sol: set[int], avail: set[int]) -> None:
    """Add whole descendant cones of sources by largest marginal weight."""
    while avail:
        sources = [v for v in avail if not any(u in avail for u in g.in_adj[v])]
        best_z = None
        best_cone: Optional[set[int]] = None
        best_w = -1
        for z in sorted(sources):
            cone = _cone(g, z, avail)
            w = sum(weights[v] for v in cone)
            if w > best_w:
                best_z, best_cone, best_w = z, cone, w
        assert best_z is not None
        if sum(weights[v] for v in sol) + best_w <= budget:
            sol |= best_cone
            avail -= best_cone
        else:
            avail.discard(best_z)


def _cone(g: Digraph, z: int, avail: set[int]) -> set[int]:
    """Descendants of z inside the induced subgraph on avail."""
    seen = {z}
    stack = [z]
    while stack:
        u = stack.pop()
        for v in g.out_adj[u]:
            if v in avail and v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def ptas_ssg(inst: WeightedInstance, k: int) -> ApproxResult:
    """Seed-enumeration PTAS for the strong-closure maximization problem."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if inst.kind is not ProblemKind.SSG:
        raise ValueError("ptas_ssg expects the maximization kind")
    g, weights, expand = _condensed_view(inst)
    best: Optional[set[int]] = None
    best_w = -1
    for seed in _seed_subsets(g.n, k):
        base = descendants(g, seed)
        base_w = sum(weights[v] for v in base)
        if base_w > inst.budget:
            continue
        ker = kernel(g, seed)
        avail = set(g.nodes()) - ascendants(g, ker) - base
        sol = set(base)
        _greedy_fill_max(g, weights, inst.budget, sol, avail)
        w = sum(weights[v] for v in sol)
        if w > best_w:
            best, best_w = sol, w
    nodes = expand(best)
    guarantee = Fraction(1, 2) if k == 0 else Fraction(k, k + 1)
    return ApproxResult(
        Solution(frozenset(nodes), inst.weight_of(nodes)),
        k,
        guarantee,
    )


def ptas_maximal_ssg(inst: WeightedInstance, k: int) -> ApproxResult:
    """Seed-enumeration PTAS for the maximal strong-closure minimization."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if inst.kind is not ProblemKind.MAXIMAL_SSG:
        raise ValueError("ptas_maximal_ssg expects the maximal kind")
    g, weights, expand = _condensed_view(inst)
    best: set[int] = set(g.nodes())
    best_w = sum(weights)
    found = False
    for seed in _seed_subsets(g.n, k):
        base = descendants(g, seed)
        base_w = sum(weights[v] for v in base)
        if base_w > inst.budget:
            continue
        sol = set(base)
        w = base_w
        avail = set(g.nodes()) - sol
        while True:
            sinks = sorted(
                v for v in avail if not any(u in avail for u in g.out_adj[v])
            )
            z = min(sinks, key=lambda v: (weights[v], v), default=None)
            if z is None or w + weights[z] > inst.budget:
                break
            sol.add(z)
            avail.discard(z)
            w += weights[z]
        if not found or w < best_w:
            best, best_w = sol, w
            found = True
    nodes = expand(best)
    guarantee = Fraction(2) if k == 0 else Fraction(k + 1, k)
    return ApproxResult(
        Solution(frozenset(nodes), inst.weight_of(nodes)),
        k,
        guarantee,
    )
