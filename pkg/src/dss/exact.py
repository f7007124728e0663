"""Exact solvers.

- ``brute_force``: subset enumeration over bitmasks, the ground-truth
  oracle for every other solver.  The closure scan over all 2^n masks is
  a hot kernel (see ``_kernels``).
- ``solve_ssg_tree``: pseudo-polynomial DP on oriented forests for the
  strong-closure maximization problem.  Per subtree it tracks two
  boolean feasibility vectors indexed by weight 0..B: reachable weights
  with the subtree root selected / not selected.
- ``solve_maximal_ssg_tree``: maximal-minimization DP on oriented
  trees tracking, per total weight, the best achievable minimum weight
  over vertices that could still be added.
- ``solve_ssgw_rooted_tree``: weak-closure DP for in-rooted and
  out-rooted trees.
- ``solve_tournament`` and ``solve_balanced_degree_two``: the two
  polynomial special cases.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .graph import (
    Digraph,
    GraphError,
    condense,
    is_balanced_degree_two,
    is_dag,
    is_in_rooted_tree,
    is_out_rooted_tree,
    is_tournament,
    is_underlying_connected,
    is_underlying_forest,
    is_underlying_tree,
)
from .instance import ProblemKind, Solution, WeightedInstance

DEFAULT_BRUTE_CAP = 20
DEFAULT_BUDGET_CAP = 10**6


class SolverError(ValueError):
    """Requested solver is inapplicable to the given instance."""


class CapExceeded(SolverError):
    """Instance exceeds a configured size cap."""


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------


def _mask_nodes(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if (mask >> i) & 1)


def _neighbour_masks(g: Digraph, incoming: bool) -> np.ndarray:
    out = np.zeros(g.n, dtype=np.int64)
    adj = g.in_adj if incoming else g.out_adj
    for v in range(g.n):
        m = 0
        for u in adj[v]:
            m |= 1 << u
        out[v] = m
    return out


def _strong_maximal_flags(
    inst: WeightedInstance, feasible: np.ndarray, weight: np.ndarray
) -> np.ndarray:
    """Per-mask maximality for the strong-closure problems."""
    g = inst.graph
    n = g.n
    total = 1 << n
    masks = np.arange(total, dtype=np.int64)
    if is_dag(g):
        outm = _neighbour_masks(g, incoming=False)
        not_max = np.zeros(total, dtype=np.bool_)
        for x in range(n):
            sel_x = (masks >> x) & 1 == 1
            addable = (
                ~sel_x
                & ((masks & outm[x]) == outm[x])
                & (weight + inst.weights[x] <= inst.budget)
            )
            not_max |= addable
        return feasible & ~not_max
    # General digraph: closed sets are unions of strongly connected
    # components; check sink components of the unselected part.
    cond = condense(g, inst.weights)
    flags = np.zeros(total, dtype=np.bool_)
    for mask in np.flatnonzero(feasible):
        sel = set(_mask_nodes(int(mask), n))
        sel_comps = {cond.component_of[v] for v in sel}
        w = int(weight[mask])
        extendable = False
        for c in range(cond.dag.n):
            if c in sel_comps:
                continue
            if any(d not in sel_comps for d in cond.dag.out_adj[c]):
                continue
            if w + cond.component_weight[c] <= inst.budget:
                extendable = True
                break
        flags[mask] = not extendable
    return flags


def _weak_maximal_flags(
    inst: WeightedInstance, feasible: np.ndarray, weight: np.ndarray
) -> np.ndarray:
    from .constraints import weak_closure_completion

    g = inst.graph
    total = 1 << g.n
    flags = np.zeros(total, dtype=np.bool_)
    for mask in np.flatnonzero(feasible):
        sel = set(_mask_nodes(int(mask), g.n))
        extendable = False
        for x in range(g.n):
            if x in sel:
                continue
            grown = weak_closure_completion(g, sel | {x})
            if inst.weight_of(grown) <= inst.budget:
                extendable = True
                break
        flags[mask] = not extendable
    return flags


def brute_force(inst: WeightedInstance, cap: int = DEFAULT_BRUTE_CAP) -> Optional[Solution]:
    """Exhaustive optimum for any of the four problems.

    Ties are broken toward the lexicographically smallest selected set.
    Returns None only when no feasible solution exists (never happens for
    the non-maximal kinds, where the empty set is feasible).
    """
    g = inst.graph
    n = g.n
    if n > cap:
        raise CapExceeded(f"brute force refused: n={n} exceeds cap {cap}")
    weights = np.asarray(inst.weights, dtype=np.int64)
    if inst.kind.is_weak:
        closed, weight = _kernels.weak_closed_subsets(
            _neighbour_masks(g, incoming=True), weights
        )
    else:
        closed, weight = _kernels.closed_subsets(
            _neighbour_masks(g, incoming=False), weights
        )
    feasible = closed & (weight <= inst.budget)
    if inst.kind.is_maximal:
        if inst.kind.is_weak:
            feasible = _weak_maximal_flags(inst, feasible, weight)
        else:
            feasible = _strong_maximal_flags(inst, feasible, weight)
        candidates = np.flatnonzero(feasible)
        if candidates.size == 0:
            return None
        best = int(weight[candidates].min())
    else:
        candidates = np.flatnonzero(feasible)
        best = int(weight[candidates].max())
    pool = candidates[weight[candidates] == best]
    chosen = min((_mask_nodes(int(m), n) for m in pool))
    return Solution(frozenset(chosen), best)


# ---------------------------------------------------------------------------
# Forest DP for the strong-closure maximization problem
# ---------------------------------------------------------------------------


@dataclass
class _NodeTables:
    plus: np.ndarray
    minus: np.ndarray
    # Per combined child: (child, plus-contribution kind, minus-contribution
    # kind, accumulated plus vector before, accumulated minus vector before).
    steps: list = field(default_factory=list)

    @property
    def any(self) -> np.ndarray:
        return self.plus | self.minus


def _delta(cap: int, at: int) -> np.ndarray:
    v = np.zeros(cap + 1, dtype=np.bool_)
    if 0 <= at <= cap:
        v[at] = True
    return v


def _split(left: np.ndarray, right: np.ndarray, b: int) -> int:
    """Smallest a with left[a] and right[b-a]; ties go to the smallest
    left-operand weight by construction."""
    for a in range(b + 1):
        if left[a] and right[b - a]:
            return a
    raise AssertionError("no witness split found (corrupt DP table)")


def _component_orders(g: Digraph):
    """Per underlying component: (root, preorder node list, children map)."""
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        order: list[int] = []
        children: dict[int, list[int]] = {}
        stack = [(start, None)]
        seen[start] = True
        while stack:
            v, fa = stack.pop()
            order.append(v)
            children[v] = []
            if fa is not None:
                children[fa].append(v)
            for u in g.out_adj[v] + g.in_adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append((u, v))
        yield start, order, children


class _ForestDP:
    """Strong-closure feasibility vectors over an oriented forest.

    R_plus[v][b] / R_minus[v][b]: a subset of v's subtree satisfying the
    closure rule with total weight b, containing / not containing v.
    R_minus[v][0] is always true (the empty set).
    """

    def __init__(self, g: Digraph, weights, cap: int):
        if not is_underlying_forest(g):
            raise SolverError("forest DP requires an oriented forest")
        self.g = g
        self.weights = weights
        self.cap = cap
        self.tables: dict[int, _NodeTables] = {}
        self.roots: list[int] = []
        self._build()

    def _build(self) -> None:
        arcset = set(self.g.arcs)
        for start, order, children in _component_orders(self.g):
            self.roots.append(start)
            for v in reversed(order):
                self.tables[v] = self._combine(v, sorted(children[v]), arcset)

    def _combine(self, v: int, kids: list[int], arcset) -> _NodeTables:
        t = _NodeTables(
            plus=_delta(self.cap, self.weights[v]),
            minus=_delta(self.cap, 0),
        )
        for u in kids:
            cu = self.tables[u]
            if (v, u) in arcset:  # u in ch+(v): selected parent forces u
                kind_p, kind_m = "plus", "any"
            else:  # u in ch-(v): unselected parent forbids u
                kind_p, kind_m = "any", "minus"
            t.steps.append((u, kind_p, kind_m, t.plus, t.minus))
            t.plus = _kernels.or_convolve(t.plus, self._contrib(cu, kind_p))
            t.minus = _kernels.or_convolve(t.minus, self._contrib(cu, kind_m))
        return t

    @staticmethod
    def _contrib(t: _NodeTables, kind: str) -> np.ndarray:
        if kind == "plus":
            return t.plus
        if kind == "minus":
            return t.minus
        return t.any

    def reachable(self) -> np.ndarray:
        """OR-convolution of the per-tree vectors across the forest."""
        acc = _delta(self.cap, 0)
        self._forest_steps = []
        for r in self.roots:
            self._forest_steps.append(acc)
            acc = _kernels.or_convolve(acc, self.tables[r].any)
        return acc

    def extract(self, b: int) -> set[int]:
        """A witness set of total weight b (reachable(b) must hold)."""
        out: set[int] = set()
        t = b
        for prev, r in zip(reversed(self._forest_steps), reversed(self.roots)):
            a = _split(prev, self.tables[r].any, t)
            self._extract_node(r, t - a, None, out)
            t = a
        assert t == 0
        return out

    def _extract_node(self, v: int, b: int, state: Optional[str], out: set[int]) -> None:
        t = self.tables[v]
        if state is None:
            state = "minus" if t.minus[b] else "plus"
        if state == "plus":
            out.add(v)
        rem = b
        for u, kind_p, kind_m, acc_p, acc_m in reversed(t.steps):
            acc = acc_p if state == "plus" else acc_m
            kind = kind_p if state == "plus" else kind_m
            contrib = self._contrib(self.tables[u], kind)
            a = _split(acc, contrib, rem)
            child_state = None if kind == "any" else kind
            self._extract_node(u, rem - a, child_state, out)
            rem = a
        assert rem == (self.weights[v] if state == "plus" else 0)


def solve_ssg_tree(
    inst: WeightedInstance, budget_cap: int = DEFAULT_BUDGET_CAP
) -> Solution:
    """Maximum-weight closed-and-budgeted set on an oriented forest."""
    if inst.budget > budget_cap:
        raise CapExceeded(
            f"budget {inst.budget} exceeds DP table cap {budget_cap}"
        )
    dp = _ForestDP(inst.graph, inst.weights, inst.budget)
    reach = dp.reachable()
    best = int(np.flatnonzero(reach).max())
    return Solution(frozenset(dp.extract(best)), best)


# ---------------------------------------------------------------------------
# Maximal strong-closure problem on trees via the sink ordering
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SinkOrder:
    """Vertices by iterated minimum-weight sinks; ties to smallest id."""

    order: tuple[int, ...]
    prefix_weights: tuple[int, ...]  # prefix_weights[k] = sum of first k
    budgets: tuple[int, ...]  # budgets[k] = B - prefix_weights[k]


def sink_order(g: Digraph, weights, budget: int) -> SinkOrder:
    removed: set[int] = set()
    order: list[int] = []
    for _ in range(g.n):
        sinks = [
            v
            for v in range(g.n)
            if v not in removed and all(u in removed for u in g.out_adj[v])
        ]
        v = min(sinks, key=lambda x: (weights[x], x))
        order.append(v)
        removed.add(v)
    prefix = [0]
    for v in order:
        prefix.append(prefix[-1] + weights[v])
    budgets = tuple(budget - p for p in prefix)
    return SinkOrder(tuple(order), tuple(prefix), budgets)


# A selection with no addable vertex at all; larger than any weight.
_NO_ADDABLE = np.int64(2**62)


def _score_base(cap: int, at: int) -> np.ndarray:
    v = np.full(cap + 1, -1, dtype=np.int64)
    if 0 <= at <= cap:
        v[at] = _NO_ADDABLE
    return v


@dataclass
class _MaximalNodeTables:
    plus: np.ndarray
    minus_open: np.ndarray
    minus_closed: np.ndarray
    # Per combined child: (child, child-in-ch+, plus / minus_open /
    # minus_closed accumulator vectors before the combination).
    steps: list = field(default_factory=list)


class _MaximalTreeDP:
    """Addable-vertex score vectors over an oriented tree.

    A feasible selection S is maximal iff every addable vertex (an
    unselected vertex whose out-neighbours are all selected) has weight
    above B - w(S).  Per node and total subtree weight b, the tables
    hold the best (largest) achievable minimum weight over addable
    vertices, so maximality at total weight b reads off as
    score(b) > B - b.  Entries are -1 (weight unreachable) or the
    max-min score, with 2**62 standing for "no addable vertex".

    Table split per node v:
    - plus: v selected;
    - minus_open: v unselected, every out-neighbour child selected (v
      itself becomes addable unless it has an unselected out-neighbour
      father);
    - minus_closed: v unselected with an unselected out-neighbour
      child, so v can never become addable.
    """

    def __init__(self, g: Digraph, weights, cap: int):
        self.g = g
        self.weights = weights
        self.cap = cap
        self.tables: dict[int, _MaximalNodeTables] = {}
        self.roots: list[int] = []
        arcset = set(g.arcs)
        for start, order, children in _component_orders(g):
            self.roots.append(start)
            for v in reversed(order):
                self.tables[v] = self._combine(v, sorted(children[v]), arcset)

    def _as_addable(self, u: int) -> np.ndarray:
        """minus_open of u resolved into "u is addable": min with w(u)."""
        t = self.tables[u]
        wu = np.int64(self.weights[u])
        return np.where(t.minus_open >= 0, np.minimum(t.minus_open, wu), np.int64(-1))

    def _combine(self, v: int, kids: list[int], arcset) -> _MaximalNodeTables:
        mm = _kernels.maxmin_convolve
        t = _MaximalNodeTables(
            plus=_score_base(self.cap, self.weights[v]),
            minus_open=_score_base(self.cap, 0),
            minus_closed=np.full(self.cap + 1, -1, dtype=np.int64),
        )
        for u in kids:
            cu = self.tables[u]
            t.steps.append((u, (v, u) in arcset, t.plus, t.minus_open, t.minus_closed))
            addable_u = self._as_addable(u)
            if (v, u) in arcset:
                # Arc v -> u: selected v forces u; an unselected u is an
                # unselected out-neighbour of v.  u never points at v,
                # so an open unselected u is addable right away.
                unsel = np.maximum(addable_u, cu.minus_closed)
                any_u = np.maximum(cu.plus, unsel)
                t.minus_closed = np.maximum(
                    mm(t.minus_closed, any_u), mm(t.minus_open, unsel)
                )
                t.minus_open = mm(t.minus_open, cu.plus)
                t.plus = mm(t.plus, cu.plus)
            else:
                # Arc u -> v: selected u forces v, so under unselected v
                # the child stays unselected; an open child then keeps v
                # as an unselected out-neighbour and is not addable.
                t.plus = mm(
                    t.plus,
                    np.maximum(cu.plus, np.maximum(addable_u, cu.minus_closed)),
                )
                c = np.maximum(cu.minus_open, cu.minus_closed)
                t.minus_open = mm(t.minus_open, c)
                t.minus_closed = mm(t.minus_closed, c)
        return t

    def _resolved_root(self, r: int) -> np.ndarray:
        # The root has no father: an open unselected root is addable.
        t = self.tables[r]
        return np.maximum(t.plus, np.maximum(self._as_addable(r), t.minus_closed))

    def scores(self) -> np.ndarray:
        acc = _score_base(self.cap, 0)
        self._forest_steps = []
        for r in self.roots:
            self._forest_steps.append(acc)
            acc = _kernels.maxmin_convolve(acc, self._resolved_root(r))
        return acc

    def extract(self, b: int, threshold: int) -> set[int]:
        """A set of weight b whose addable vertices all weigh >= threshold."""
        out: set[int] = set()
        rem = b
        for prev, r in zip(reversed(self._forest_steps), reversed(self.roots)):
            t = self.tables[r]
            opts = (
                ("plus", t.plus),
                ("open", self._as_addable(r)),
                ("closed", t.minus_closed),
            )
            rem = self._take_first(prev, opts, rem, threshold, r, out)[1]
        assert rem == 0
        return out

    def _take_first(self, left, opts, rem, threshold, u, out):
        """Smallest split a, options in fixed order; recurses into u."""
        for a in range(rem + 1):
            if left[a] < threshold:
                continue
            for child_state, arr in opts:
                if arr[rem - a] >= threshold:
                    self._extract_node(u, child_state, rem - a, threshold, out)
                    return child_state, a
        raise AssertionError("no witness split found (corrupt DP table)")

    def _extract_node(self, v: int, state: str, b: int, threshold: int, out) -> None:
        tab = self.tables[v]
        if state == "plus":
            out.add(v)
        rem = b
        for u, plus_child, acc_p, acc_o, acc_c in reversed(tab.steps):
            cu = self.tables[u]
            addable_u = self._as_addable(u)
            if state == "plus":
                opts = (
                    (("plus", cu.plus),)
                    if plus_child
                    else (
                        ("plus", cu.plus),
                        ("open", addable_u),
                        ("closed", cu.minus_closed),
                    )
                )
                _, rem = self._take_first(acc_p, opts, rem, threshold, u, out)
            elif state == "open":
                opts = (
                    (("plus", cu.plus),)
                    if plus_child
                    else (("open", cu.minus_open), ("closed", cu.minus_closed))
                )
                _, rem = self._take_first(acc_o, opts, rem, threshold, u, out)
            elif plus_child:
                # Closed state over a ch+ child: either it was already
                # closed, or this unselected child closed an open prefix.
                done = False
                for a in range(rem + 1):
                    for src, left, opts in (
                        (
                            "closed",
                            acc_c,
                            (
                                ("plus", cu.plus),
                                ("open", addable_u),
                                ("closed", cu.minus_closed),
                            ),
                        ),
                        (
                            "open",
                            acc_o,
                            (("open", addable_u), ("closed", cu.minus_closed)),
                        ),
                    ):
                        if left[a] < threshold:
                            continue
                        for child_state, arr in opts:
                            if arr[rem - a] >= threshold:
                                self._extract_node(
                                    u, child_state, rem - a, threshold, out
                                )
                                rem = a
                                state = src
                                done = True
                                break
                        if done:
                            break
                    if done:
                        break
                assert done, "no witness split found (corrupt DP table)"
            else:
                opts = (("open", cu.minus_open), ("closed", cu.minus_closed))
                _, rem = self._take_first(acc_c, opts, rem, threshold, u, out)
        if state == "plus":
            assert rem == self.weights[v]
        else:
            assert state == "open" and rem == 0


def solve_maximal_ssg_tree(
    inst: WeightedInstance, budget_cap: int = DEFAULT_BUDGET_CAP
) -> Solution:
    """Minimum-weight maximal solution on an oriented tree.

    Runs the addable-vertex score program and picks the smallest weight
    b whose best score exceeds B - b (no feasible single addition, which
    on a DAG is equivalent to having no feasible superset).
    """
    g = inst.graph
    if not is_underlying_tree(g):
        raise SolverError("maximal tree DP requires an oriented tree")
    if inst.budget > budget_cap:
        raise CapExceeded(
            f"budget {inst.budget} exceeds DP table cap {budget_cap}"
        )
    if inst.total_weight() <= inst.budget:
        return Solution(frozenset(g.nodes()), inst.total_weight())
    dp = _MaximalTreeDP(g, inst.weights, inst.budget)
    scores = dp.scores()
    for b in range(inst.budget + 1):
        if scores[b] > inst.budget - b:
            return Solution(
                frozenset(dp.extract(b, inst.budget - b + 1)), b
            )
    raise AssertionError("no maximal solution found (should not happen)")


# ---------------------------------------------------------------------------
# Weak-closure DP on in-rooted and out-rooted trees
# ---------------------------------------------------------------------------


class _OutRootedWeakDP:
    """Weak-closure feasibility vectors on an out-rooted tree.

    Processes the tree from the anti-root (the unique sink); a node's
    in-neighbours are exactly its children.  Tracks P_plus / P_minus per
    node (root of the subtree selected / not selected); a node may stay
    unselected only when not all of its children are selected, which is
    the forcing rule.  The all-children-selected combinations are kept in
    a separate accumulator to make that exclusion exact.
    """

    def __init__(self, g: Digraph, weights, cap: int):
        self.g = g
        self.weights = weights
        self.cap = cap
        self.plus: dict[int, np.ndarray] = {}
        self.minus: dict[int, np.ndarray] = {}
        self.kids: dict[int, list[int]] = {}
        self.acc: dict[int, list[tuple[np.ndarray, np.ndarray]]] = {}
        sinks = [v for v in range(g.n) if not g.out_adj[v]]
        assert len(sinks) == 1
        self.root = sinks[0]
        self._build()

    def _build(self) -> None:
        g = self.g
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(g.in_adj[v])
        for v in reversed(order):
            kids = sorted(g.in_adj[v])
            self.kids[v] = kids
            all_plus = _delta(self.cap, 0)
            some_minus = np.zeros(self.cap + 1, dtype=np.bool_)
            accs = []
            for u in kids:
                accs.append((all_plus, some_minus))
                any_u = self.plus[u] | self.minus[u]
                some_minus = _kernels.or_convolve(some_minus, any_u) | _kernels.or_convolve(
                    all_plus, self.minus[u]
                )
                all_plus = _kernels.or_convolve(all_plus, self.plus[u])
            self.acc[v] = accs
            w = self.weights[v]
            total = all_plus | some_minus
            plus = np.zeros(self.cap + 1, dtype=np.bool_)
            if w <= self.cap:
                plus[w:] = total[: self.cap + 1 - w]
            self.plus[v] = plus
            self.minus[v] = some_minus if kids else _delta(self.cap, 0)

    def reachable(self) -> np.ndarray:
        return self.plus[self.root] | self.minus[self.root]

    def extract(self, b: int) -> set[int]:
        out: set[int] = set()
        self._extract(self.root, b, None, out)
        return out

    def _extract(self, v: int, b: int, state: Optional[str], out: set[int]) -> None:
        if state is None:
            state = "minus" if self.minus[v][b] else "plus"
        kids = self.kids[v]
        if state == "plus":
            out.add(v)
            rem = b - self.weights[v]
            # Children may be in any state; walk the combined chain.
            for i in range(len(kids) - 1, -1, -1):
                u = kids[i]
                ap, sm = self.acc[v][i]
                prev_total = ap | sm
                any_u = self.plus[u] | self.minus[u]
                a = _split(prev_total, any_u, rem)
                self._extract(u, rem - a, None, out)
                rem = a
            assert rem == 0
            return
        if not kids:
            assert b == 0
            return
        # Minus state: at least one child unselected.
        rem = b
        mode = "some_minus"
        for i in range(len(kids) - 1, -1, -1):
            u = kids[i]
            ap, sm = self.acc[v][i]
            any_u = self.plus[u] | self.minus[u]
            if mode == "some_minus":
                found = False
                for a in range(rem + 1):
                    if sm[a] and any_u[rem - a]:
                        self._extract(u, rem - a, None, out)
                        rem = a
                        found = True
                        break
                    if ap[a] and self.minus[u][rem - a]:
                        self._extract(u, rem - a, "minus", out)
                        rem = a
                        mode = "all_plus"
                        found = True
                        break
                assert found
            else:
                a = _split(ap, self.plus[u], rem)
                self._extract(u, rem - a, "plus", out)
                rem = a
        assert rem == 0 and mode == "all_plus"


def solve_ssgw_rooted_tree(
    inst: WeightedInstance, budget_cap: int = DEFAULT_BUDGET_CAP
) -> Solution:
    """Weak-closure maximization on an in-rooted or out-rooted tree.

    On in-rooted trees every node has a single in-neighbour, so the weak
    rule coincides with the strong closure rule and the forest DP applies
    directly.
    """
    g = inst.graph
    if inst.budget > budget_cap:
        raise CapExceeded(
            f"budget {inst.budget} exceeds DP table cap {budget_cap}"
        )
    if is_in_rooted_tree(g):
        return solve_ssg_tree(inst, budget_cap)
    if not is_out_rooted_tree(g):
        raise SolverError(
            "weak-closure tree DP requires an in-rooted or out-rooted tree"
        )
    dp = _OutRootedWeakDP(g, inst.weights, inst.budget)
    reach = dp.reachable()
    best = int(np.flatnonzero(reach).max())
    return Solution(frozenset(dp.extract(best)), best)


# ---------------------------------------------------------------------------
# Tournaments and the balanced Eulerian case
# ---------------------------------------------------------------------------


def _hamiltonian_path(g: Digraph) -> list[int]:
    """Unique Hamiltonian path of an acyclic tournament."""
    order = sorted(range(g.n), key=lambda v: (-len(g.out_adj[v]), v))
    arcset = set(g.arcs)
    for a, b in zip(order, order[1:]):
        if (a, b) not in arcset:
            raise SolverError("tournament is not acyclic")
    return order


def solve_tournament(inst: WeightedInstance) -> Solution:
    """Suffix scan along the Hamiltonian path of the (condensed) tournament.

    Feasible closed sets are exactly the empty set and the suffixes of
    the path, so both the maximization and the maximal-minimization
    reduce to picking the right suffix.
    """
    if inst.kind not in (ProblemKind.SSG, ProblemKind.MAXIMAL_SSG):
        raise SolverError("tournament solver handles the strong kinds only")
    g = inst.graph
    if is_tournament(g) and is_dag(g):
        cond = None
        h = g
        weights = list(inst.weights)
    else:
        cond = condense(g, inst.weights)
        if not is_tournament(cond.dag):
            raise SolverError("input is not a tournament (nor condenses to one)")
        h = cond.dag
        weights = list(cond.component_weight)
    path = _hamiltonian_path(h)
    suffix_weight = [0] * (h.n + 1)
    for k in range(h.n - 1, -1, -1):
        suffix_weight[k] = suffix_weight[k + 1] + weights[path[k]]
    if inst.kind is ProblemKind.SSG:
        best_k = h.n  # empty suffix
        for k in range(h.n + 1):
            if suffix_weight[k] <= inst.budget:
                if suffix_weight[k] > suffix_weight[best_k]:
                    best_k = k
    else:
        # Longest fitting suffix is the unique maximal solution.
        best_k = h.n
        for k in range(h.n + 1):
            if suffix_weight[k] <= inst.budget:
                best_k = k
                break
    chosen_comps = path[best_k:]
    if cond is None:
        nodes = set(chosen_comps)
    else:
        nodes = {v for c in chosen_comps for v in cond.members[c]}
    return Solution(frozenset(nodes), suffix_weight[best_k])


def solve_balanced_degree_two(inst: WeightedInstance) -> Solution:
    """Connected digraph with all in/out-degrees 2 is Eulerian: the only
    closed sets are the empty set and everything."""
    if inst.kind is not ProblemKind.SSG:
        raise SolverError("the Eulerian shortcut applies to the maximization kind only")
    g = inst.graph
    if not is_balanced_degree_two(g):
        raise SolverError("every node must have in-degree 2 and out-degree 2")
    if not is_underlying_connected(g):
        raise SolverError("graph must be connected")
    total = inst.total_weight()
    if total <= inst.budget:
        return Solution(frozenset(g.nodes()), total)
    return Solution(frozenset(), 0)
