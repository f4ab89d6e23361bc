"""Ribbon graphs: a directed tree plus a singularity map from edges to vertices.

Vertices are ``0..g`` and edges ``0..g-1``.  Edge ``i`` is stored as a
``(tail, head)`` pair; its head is the region on the marked side of the
corresponding chord.  ``singularity[i]`` is the vertex (region) holding the
interior preimage arc of singularity ``i``.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

__all__ = [
    "RibbonGraph",
    "RibbonMatrix",
    "PathStep",
    "Problem",
    "InvalidRibbonGraph",
    "validate",
    "path",
    "ribbon_matrix",
    "canonical_serialize",
    "parse_graph",
    "graph_from_dict",
]


class Problem(NamedTuple):
    """One validation finding; ``kind`` is a stable machine-readable tag."""

    kind: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


class InvalidRibbonGraph(ValueError):
    def __init__(self, problems: Sequence[Problem]):
        self.problems = list(problems)
        super().__init__("; ".join(map(str, self.problems)))


class PathStep(NamedTuple):
    """Traversal of ``edge``; ``forward`` means tail-to-head.

    The first step of a path is always the half edge leaving the midpoint
    of the starting edge.
    """

    edge: int
    forward: bool


@dataclass(frozen=True)
class RibbonGraph:
    vertices: int
    edges: tuple[tuple[int, int], ...]
    singularity: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        object.__setattr__(self, "singularity", tuple(int(s) for s in self.singularity))

    @property
    def genus(self) -> int:
        return len(self.edges)

    def tail(self, i: int) -> int:
        return self.edges[i][0]

    def head(self, i: int) -> int:
        return self.edges[i][1]

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.vertices)]
        for i, (a, b) in enumerate(self.edges):
            inc[a].append(i)
            if b != a:
                inc[b].append(i)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    @cached_property
    def image(self) -> frozenset[int]:
        """Vertices in the image of the singularity map."""
        return frozenset(self.singularity)

    def is_valid(self) -> bool:
        return not validate(self)

    def check(self) -> "RibbonGraph":
        problems = validate(self)
        if problems:
            raise InvalidRibbonGraph(problems)
        return self

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "vertices": self.vertices,
            "edges": [{"tail": a, "head": b} for a, b in self.edges],
            "singularity": list(self.singularity),
        }

    def serialize(self) -> str:
        return canonical_serialize(self)


def validate(g: RibbonGraph) -> list[Problem]:
    """Return every problem found in ``g``; an empty list means valid."""
    problems: list[Problem] = []
    n = g.vertices
    if n < 1:
        return [Problem("Malformed", f"vertex count must be positive, got {n}")]
    if len(g.singularity) != len(g.edges):
        problems.append(Problem(
            "Malformed",
            f"{len(g.edges)} edges but {len(g.singularity)} singularity entries",
        ))
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (a, b) in enumerate(g.edges):
        bad = [v for v in (a, b) if not 0 <= v < n]
        if bad:
            problems.append(Problem("BadVertexRef", f"edge {i} refers to missing vertex {bad[0]}"))
            continue
        if a == b:
            problems.append(Problem("SelfLoop", f"edge {i} is a loop at vertex {a}"))
            continue
        ra, rb = find(a), find(b)
        if ra == rb:
            problems.append(Problem("Cyclic", f"edge {i} ({a}->{b}) closes a cycle"))
        else:
            parent[ra] = rb
    roots = sorted({find(v) for v in range(n)})
    if len(roots) > 1:
        stray = min(v for v in range(n) if find(v) != find(0))
        problems.append(Problem(
            "Disconnected", f"{len(roots)} components; vertex {stray} is not reachable from vertex 0"
        ))
    for i, s in enumerate(g.singularity):
        if not 0 <= s < n:
            problems.append(Problem("BadVertexRef", f"singularity of edge {i} refers to missing vertex {s}"))
    return problems


def path(g: RibbonGraph, i: int) -> list[PathStep]:
    """The path from the midpoint of edge ``i`` to ``S(e_i)``."""
    if not 0 <= i < g.genus:
        raise IndexError(f"edge id {i} out of range for genus {g.genus}")
    tail, head = g.edges[i]
    target = g.singularity[i]
    if target == head:
        return [PathStep(i, True)]
    if target == tail:
        return [PathStep(i, False)]

    # Breadth-first search from the target gives each vertex its edge toward it.
    toward: list[int] = [-1] * g.vertices
    dist: list[int] = [-1] * g.vertices
    dist[target] = 0
    queue = deque([target])
    while queue:
        v = queue.popleft()
        for e in g.incident[v]:
            a, b = g.edges[e]
            w = b if a == v else a
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                toward[w] = e
                queue.append(w)

    forward = dist[head] < dist[tail]
    steps = [PathStep(i, forward)]
    v = head if forward else tail
    while v != target:
        e = toward[v]
        a, b = g.edges[e]
        nxt = b if a == v else a
        steps.append(PathStep(e, a == v))
        v = nxt
    return steps


@dataclass(frozen=True)
class RibbonMatrix:
    """The ribbon matrix R, stored doubled so every entry is an integer."""

    doubled: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.doubled)
        g = len(rows)
        for i, r in enumerate(rows):
            if len(r) != g:
                raise ValueError("ribbon matrix must be square")
            for j, x in enumerate(r):
                if i == j and x not in (1, -1):
                    raise ValueError(f"doubled diagonal entry ({i},{i}) must be +-1, got {x}")
                if i != j and x not in (-2, 0, 2):
                    raise ValueError(f"doubled entry ({i},{j}) must be in {{-2,0,2}}, got {x}")
        object.__setattr__(self, "doubled", rows)

    @property
    def genus(self) -> int:
        return len(self.doubled)

    def format(self) -> str:
        return "\n".join(" ".join(f"{x:>2}" for x in row) for row in self.doubled)


def ribbon_matrix(g: RibbonGraph) -> RibbonMatrix:
    """Column ``i`` records the path from edge ``i`` to its singularity vertex."""
    g.check()
    n = g.genus
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        steps = path(g, i)
        m[i][i] = 1 if steps[0].forward else -1
        for step in steps[1:]:
            m[step.edge][i] = 2 if step.forward else -2
    return RibbonMatrix(tuple(tuple(r) for r in m))


def canonical_serialize(g: RibbonGraph) -> str:
    return json.dumps(g.to_dict(), separators=(",", ":"))


_GRAPH_KEYS = {"genus", "vertices", "edges", "singularity"}


def _require_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidRibbonGraph([Problem("Malformed", f"{what} must be an integer, got {value!r}")])
    return value


def graph_from_dict(data) -> RibbonGraph:
    """Build and validate a graph from its JSON object form."""
    if not isinstance(data, dict):
        raise InvalidRibbonGraph([Problem("Malformed", "graph must be a JSON object")])
    keys = set(data)
    if keys != _GRAPH_KEYS:
        extra, missing = sorted(keys - _GRAPH_KEYS), sorted(_GRAPH_KEYS - keys)
        msg = []
        if extra:
            msg.append(f"unknown keys {extra}")
        if missing:
            msg.append(f"missing keys {missing}")
        raise InvalidRibbonGraph([Problem("Malformed", ", ".join(msg))])
    genus = _require_int(data["genus"], "genus")
    vertices = _require_int(data["vertices"], "vertices")
    edges_raw, sing_raw = data["edges"], data["singularity"]
    if not isinstance(edges_raw, list) or not isinstance(sing_raw, list):
        raise InvalidRibbonGraph([Problem("Malformed", "edges and singularity must be lists")])
    edges = []
    for k, e in enumerate(edges_raw):
        if not isinstance(e, dict) or set(e) != {"tail", "head"}:
            raise InvalidRibbonGraph([Problem("Malformed", f"edge {k} must be {{\"tail\": a, \"head\": b}}")])
        edges.append((_require_int(e["tail"], f"edge {k} tail"), _require_int(e["head"], f"edge {k} head")))
    sing = [_require_int(s, f"singularity {k}") for k, s in enumerate(sing_raw)]
    problems = []
    if genus != len(edges):
        problems.append(Problem("Malformed", f"genus {genus} but {len(edges)} edges"))
    if vertices != genus + 1:
        problems.append(Problem("Malformed", f"vertices must equal genus + 1, got {vertices}"))
    if problems:
        raise InvalidRibbonGraph(problems)
    return RibbonGraph(vertices, tuple(edges), tuple(sing)).check()


def parse_graph(text: str) -> RibbonGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidRibbonGraph([Problem("Malformed", f"invalid JSON: {exc}")]) from None
    return graph_from_dict(data)
