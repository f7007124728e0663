"""Feasibility verdicts: closure, weak closure, budget and maximality.

Witnesses are deterministic: the smallest violating arc or node by id.
Maximality for the strong-closure problems is decided by the local
single-node test on the condensation (adding any sink of the unselected
part preserves closure, and on a DAG that test is equivalent to the
superset definition).  Maximality for the weak-closure problems uses the
forcing-completion procedure: adding a node drags in every node whose
in-neighbours all become selected, and the enlarged set must fit the
budget for the extension to count.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import Digraph, condense
from .instance import ProblemKind, Solution, WeightedInstance


@dataclass(frozen=True)
class FeasibilityReport:
    satisfies_closure: bool
    satisfies_budget: bool
    satisfies_maximality: Optional[bool]  # None when not applicable / not reached
    witness: Union[tuple[int, int], int, None]
    total_weight: int

    @property
    def feasible(self) -> bool:
        return (
            self.satisfies_closure
            and self.satisfies_budget
            and self.satisfies_maximality is not False
        )


def check_digraph_closure(g: Digraph, s) -> Optional[tuple[int, int]]:
    """First arc (x,y) with x selected and y not; None when closed."""
    sel = g._check_nodes(s)
    for u, v in g.arcs:  # arcs are stored sorted, so the witness is minimal
        if u in sel and v not in sel:
            return (u, v)
    return None


def check_weak_closure(g: Digraph, s) -> Optional[int]:
    """Smallest node whose in-neighbours are all selected but which is not."""
    sel = g._check_nodes(s)
    for x in range(g.n):
        ins = g.in_adj[x]
        if ins and x not in sel and all(p in sel for p in ins):
            return x
    return None


def check_budget(inst: WeightedInstance, s) -> tuple[bool, int]:
    w = inst.weight_of(s)
    return w <= inst.budget, w


def weak_closure_completion(g: Digraph, s) -> set[int]:
    """Minimal superset of ``s`` closed under the weak forcing rule."""
    sel = g._check_nodes(s)
    # Count unselected in-neighbours per node; force nodes as counts hit 0.
    missing = [0] * g.n
    queue = []
    for x in range(g.n):
        ins = g.in_adj[x]
        missing[x] = sum(1 for p in ins if p not in sel)
        if ins and x not in sel and missing[x] == 0:
            queue.append(x)
    while queue:
        x = queue.pop()
        if x in sel:
            continue
        sel.add(x)
        for y in g.out_adj[x]:
            missing[y] -= 1
            if missing[y] == 0 and y not in sel:
                queue.append(y)
    return sel


def _maximality_strong(inst: WeightedInstance, sel: set[int]) -> Optional[int]:
    """Witness node addable under strong closure + budget, or None.

    Works on the condensation, so it is correct on general digraphs: a
    closed set is a union of strongly connected components, and it is
    extendable iff some sink component of the unselected part fits.
    """
    cond = condense(inst.graph, inst.weights)
    sel_comps = {cond.component_of[v] for v in sel}
    total = inst.weight_of(sel)
    rest = [c for c in range(cond.dag.n) if c not in sel_comps]
    best: Optional[int] = None
    for c in rest:
        if any(d not in sel_comps for d in cond.dag.out_adj[c]):
            continue  # not a sink of the unselected part
        if total + cond.component_weight[c] <= inst.budget:
            rep = cond.members[c][0]
            if best is None or rep < best:
                best = rep
    return best


def _maximality_weak(inst: WeightedInstance, sel: set[int]) -> Optional[int]:
    """Witness node addable under weak closure + budget, or None."""
    g = inst.graph
    for x in range(g.n):
        if x in sel:
            continue
        grown = weak_closure_completion(g, sel | {x})
        if inst.weight_of(grown) <= inst.budget:
            return x
    return None


def check_maximal(inst: WeightedInstance, s) -> FeasibilityReport:
    """Full report for a maximal-kind solution candidate.

    Closure and budget are checked first; maximality is only evaluated
    once both hold (the maximality definition quantifies over feasible
    supersets of a feasible set).
    """
    g = inst.graph
    sel = g._check_nodes(s)
    if inst.kind.is_weak:
        closure_witness: Union[tuple[int, int], int, None] = check_weak_closure(g, sel)
    else:
        closure_witness = check_digraph_closure(g, sel)
    budget_ok, total = check_budget(inst, sel)
    if closure_witness is not None or not budget_ok:
        return FeasibilityReport(
            satisfies_closure=closure_witness is None,
            satisfies_budget=budget_ok,
            satisfies_maximality=None,
            witness=closure_witness,
            total_weight=total,
        )
    if inst.kind.is_weak:
        add_witness = _maximality_weak(inst, sel)
    else:
        add_witness = _maximality_strong(inst, sel)
    return FeasibilityReport(
        satisfies_closure=True,
        satisfies_budget=True,
        satisfies_maximality=add_witness is None,
        witness=add_witness,
        total_weight=total,
    )


def evaluate(inst: WeightedInstance, s) -> FeasibilityReport:
    """Report for any kind; maximality is None for the non-maximal kinds."""
    if inst.kind.is_maximal:
        return check_maximal(inst, s)
    g = inst.graph
    sel = g._check_nodes(s)
    if inst.kind.is_weak:
        witness: Union[tuple[int, int], int, None] = check_weak_closure(g, sel)
    else:
        witness = check_digraph_closure(g, sel)
    budget_ok, total = check_budget(inst, sel)
    if witness is None and not budget_ok:
        witness = None  # budget failure carries no single-item witness
    return FeasibilityReport(
        satisfies_closure=witness is None,
        satisfies_budget=budget_ok,
        satisfies_maximality=None,
        witness=witness,
        total_weight=total,
    )


def is_feasible(inst: WeightedInstance, s) -> bool:
    return evaluate(inst, s).feasible


def verify_solution(inst: WeightedInstance, sol: Solution) -> FeasibilityReport:
    return evaluate(inst, sol.selected)
