"""Line-oriented text formats for instances, solutions and edge lists.

Instance files::

    # comment
    problem ssg            (one of ssg, ssgw, maximal-ssg, maximal-ssgw)
    budget 8
    node <label> <weight>  (one per node; labels unique)
    arc <src> <dst>        (labels must be declared; no loops/duplicates)

Solution files::

    weight 8
    size 2
    select <label>         (sorted by label)
    feasible true closure=true budget=true maximality=na

Edge-list files for undirected gadget sources::

    edge <u> <v>

Node ids are assigned in declaration order (first appearance for edge
lists); labels live only at this boundary.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Digraph, GraphError
from .instance import InstanceError, ProblemKind, Solution, WeightedInstance
from .gadgets import UndirectedGraph


class ParseError(ValueError):
    def __init__(self, message: str, lineno: Optional[int] = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line.split()


def parse_instance(text: str) -> tuple[WeightedInstance, list[str]]:
    kind: Optional[ProblemKind] = None
    budget: Optional[int] = None
    labels: list[str] = []
    index: dict[str, int] = {}
    weights: list[int] = []
    arcs: list[tuple[int, int]] = []
    arcset: set[tuple[int, int]] = set()
    for lineno, parts in _lines(text):
        key = parts[0]
        if key == "problem":
            if len(parts) != 2:
                raise ParseError("expected: problem <kind>", lineno)
            if kind is not None:
                raise ParseError("duplicate problem line", lineno)
            try:
                kind = ProblemKind(parts[1])
            except ValueError:
                raise ParseError(f"unknown problem kind {parts[1]!r}", lineno)
        elif key == "budget":
            if len(parts) != 2:
                raise ParseError("expected: budget <int>", lineno)
            if budget is not None:
                raise ParseError("duplicate budget line", lineno)
            budget = _nonneg_int(parts[1], lineno)
        elif key == "node":
            if len(parts) != 3:
                raise ParseError("expected: node <label> <weight>", lineno)
            label = parts[1]
            if label in index:
                raise ParseError(f"duplicate node label {label!r}", lineno)
            index[label] = len(labels)
            labels.append(label)
            weights.append(_nonneg_int(parts[2], lineno))
        elif key == "arc":
            if len(parts) != 3:
                raise ParseError("expected: arc <src> <dst>", lineno)
            try:
                u, v = index[parts[1]], index[parts[2]]
            except KeyError as exc:
                raise ParseError(f"undeclared node label {exc.args[0]!r}", lineno)
            if u == v:
                raise ParseError(f"loop arc at {parts[1]!r}", lineno)
            if (u, v) in arcset:
                raise ParseError(f"duplicate arc {parts[1]} -> {parts[2]}", lineno)
            arcset.add((u, v))
            arcs.append((u, v))
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    if kind is None:
        raise ParseError("missing problem line")
    if budget is None:
        raise ParseError("missing budget line")
    try:
        inst = WeightedInstance(Digraph(len(labels), arcs), tuple(weights), budget, kind)
    except (GraphError, InstanceError) as exc:
        raise ParseError(str(exc))
    return inst, labels


def _nonneg_int(token: str, lineno: int) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno)
    if value < 0:
        raise ParseError(f"negative value not allowed: {token}", lineno)
    return value


def emit_instance(inst: WeightedInstance, labels: list[str]) -> str:
    out = [f"problem {inst.kind.value}", f"budget {inst.budget}"]
    for label, w in zip(labels, inst.weights):
        out.append(f"node {label} {w}")
    for u, v in inst.graph.arcs:
        out.append(f"arc {labels[u]} {labels[v]}")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class SolutionFlags:
    feasible: bool
    closure: bool
    budget: bool
    maximality: Optional[bool]  # None = not applicable


def emit_solution(sol: Solution, labels: list[str], flags: SolutionFlags) -> str:
    out = [f"weight {sol.weight}", f"size {len(sol.selected)}"]
    for label in sorted(labels[v] for v in sol.selected):
        out.append(f"select {label}")
    maxi = "na" if flags.maximality is None else str(flags.maximality).lower()
    out.append(
        f"feasible {str(flags.feasible).lower()}"
        f" closure={str(flags.closure).lower()}"
        f" budget={str(flags.budget).lower()}"
        f" maximality={maxi}"
    )
    return "\n".join(out) + "\n"


def parse_solution(text: str) -> tuple[list[str], int, Optional[SolutionFlags]]:
    """Returns (selected labels, declared weight, flags if present)."""
    weight: Optional[int] = None
    size: Optional[int] = None
    selected: list[str] = []
    flags: Optional[SolutionFlags] = None
    for lineno, parts in _lines(text):
        key = parts[0]
        if key == "weight":
            weight = _nonneg_int(parts[1], lineno) if len(parts) == 2 else None
            if weight is None:
                raise ParseError("expected: weight <int>", lineno)
        elif key == "size":
            size = _nonneg_int(parts[1], lineno) if len(parts) == 2 else None
            if size is None:
                raise ParseError("expected: size <int>", lineno)
        elif key == "select":
            if len(parts) != 2:
                raise ParseError("expected: select <label>", lineno)
            selected.append(parts[1])
        elif key == "feasible":
            flags = _parse_flags(parts, lineno)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    if weight is None:
        raise ParseError("missing weight line")
    if size is not None and size != len(selected):
        raise ParseError(f"size {size} does not match {len(selected)} select lines")
    if len(set(selected)) != len(selected):
        raise ParseError("duplicate select label")
    return selected, weight, flags


def _parse_flags(parts: list[str], lineno: int) -> SolutionFlags:
    if len(parts) < 2 or parts[1] not in ("true", "false"):
        raise ParseError("expected: feasible <true|false> ...", lineno)
    kv = {}
    for token in parts[2:]:
        if "=" not in token:
            raise ParseError(f"bad flag token {token!r}", lineno)
        k, v = token.split("=", 1)
        kv[k] = v
    def _tri(v: Optional[str]):
        if v in (None, "na"):
            return None
        if v in ("true", "false"):
            return v == "true"
        raise ParseError(f"bad flag value {v!r}", lineno)
    return SolutionFlags(
        feasible=parts[1] == "true",
        closure=kv.get("closure", "true") == "true",
        budget=kv.get("budget", "true") == "true",
        maximality=_tri(kv.get("maximality")),
    )


def parse_edge_list(text: str) -> tuple[UndirectedGraph, list[str]]:
    """Undirected edge list; node ids by first appearance."""
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, parts in _lines(text):
        if parts[0] != "edge" or len(parts) != 3:
            raise ParseError("expected: edge <u> <v>", lineno)
        ids = []
        for label in parts[1:]:
            if label not in index:
                index[label] = len(labels)
                labels.append(label)
            ids.append(index[label])
        u, v = ids
        if u == v:
            raise ParseError("self-loop edge", lineno)
        edges.append((min(u, v), max(u, v)))
    if len(set(edges)) != len(edges):
        raise ParseError("duplicate edge")
    try:
        graph = UndirectedGraph(len(labels), tuple(edges))
    except InstanceError as exc:
        raise ParseError(str(exc))
    return graph, labels
