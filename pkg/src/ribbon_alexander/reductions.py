"""Ribbon graph reductions R0, R1, R2 and the R3 transformation.

R0, R1 and R2 each lower the genus by one; R3 keeps it.  None of them
changes the Alexander polynomial, and each multiplies the half polynomial by
a unit ``+-t^k``.

Interpretation notes:

* R2 identifies the far ends of two edges sharing a head (or a tail) and the
  same singularity vertex.  That identification makes the two edges
  parallel, so they are merged into one; the lower-numbered edge survives.
* R3 acts on a chain ``x --e_j--> q --e_k-- y`` through the degree-2 vertex
  ``q``.  The two edges swap places along the chain (``e_k`` now joins
  ``x`` and ``q``, ``e_j`` joins ``q`` and ``y``) and each keeps its direction
  relative to the ``x``-to-``y`` reading of the chain.  ``S(e_k)`` moves to
  the tail of ``e_i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .ribbon_graph import RibbonGraph, canonical_serialize

__all__ = [
    "ReductionStep",
    "NotApplicable",
    "find_reductions",
    "apply_step",
    "apply_r0",
    "apply_r1",
    "apply_r2",
    "apply_r3",
    "reduce_fully",
    "format_log",
]


class NotApplicable(ValueError):
    """The step's precondition does not hold on the given graph."""


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    witnesses: tuple[int, ...]

    def __str__(self) -> str:
        w = self.witnesses
        if self.kind == "R0":
            return f"R0 v={w[0]}"
        if self.kind == "R1":
            return f"R1 e={w[0]}"
        if self.kind == "R2":
            return f"R2 e={w[0]},{w[1]}"
        return f"R3 i={w[0]} j={w[1]} k={w[2]} q={w[3]}"


def _rebuild(g: RibbonGraph, merge: dict[int, int], delete: int | None, drop_edge: int) -> RibbonGraph:
    """Drop one edge, delete or merge vertices, and compact ids in order."""
    gone = set(merge)
    if delete is not None:
        gone.add(delete)
    new_id = {}
    for v in range(g.vertices):
        if v not in gone:
            new_id[v] = len(new_id)

    def m(v: int) -> int:
        return new_id[merge.get(v, v)]

    edges = tuple((m(a), m(b)) for e, (a, b) in enumerate(g.edges) if e != drop_edge)
    sing = tuple(m(s) for e, s in enumerate(g.singularity) if e != drop_edge)
    return RibbonGraph(len(new_id), edges, sing)


def _r0_ok(g: RibbonGraph, v: int) -> bool:
    return 0 <= v < g.vertices and g.degree(v) == 1 and v not in g.image


def _r1_ok(g: RibbonGraph, e: int) -> bool:
    return 0 <= e < g.genus and g.singularity[e] in g.edges[e]


def _r2_far_ends(g: RibbonGraph, i: int, j: int) -> tuple[int, int] | None:
    if not (0 <= i < g.genus and 0 <= j < g.genus) or i == j:
        return None
    if g.singularity[i] != g.singularity[j]:
        return None
    (ti, hi), (tj, hj) = g.edges[i], g.edges[j]
    if hi == hj:
        return ti, tj
    if ti == tj:
        return hi, hj
    return None


def _r3_chain(g: RibbonGraph, i: int, j: int, k: int, q: int) -> tuple[int, int] | None:
    """Return the chain ends ``(x, y)`` when the R3 precondition holds."""
    n = g.genus
    if not (0 <= i < n and 0 <= j < n and 0 <= k < n and 0 <= q < g.vertices):
        return None
    if i == j or j == k:
        return None
    if g.degree(q) != 2 or q in g.image or g.head(j) != q or k not in g.incident[q]:
        return None
    if g.singularity[i] != g.singularity[j] or g.head(i) != g.singularity[k]:
        return None
    x = g.tail(j)
    tk, hk = g.edges[k]
    y = hk if tk == q else tk
    return x, y


def find_reductions(g: RibbonGraph) -> list[ReductionStep]:
    """Every applicable step: R0, then R1, R2, R3, each in ascending witness order."""
    steps = [ReductionStep("R0", (v,)) for v in range(g.vertices) if _r0_ok(g, v)]
    steps += [ReductionStep("R1", (e,)) for e in range(g.genus) if _r1_ok(g, e)]
    steps += [
        ReductionStep("R2", (i, j))
        for i, j in combinations(range(g.genus), 2)
        if _r2_far_ends(g, i, j) is not None
    ]
    r3 = []
    for q in range(g.vertices):
        if g.degree(q) != 2 or q in g.image:
            continue
        for j in g.incident[q]:
            if g.head(j) != q:
                continue
            (k,) = [e for e in g.incident[q] if e != j]
            for i in range(g.genus):
                if _r3_chain(g, i, j, k, q) is not None:
                    r3.append((i, j, k, q))
    steps += [ReductionStep("R3", w) for w in sorted(r3)]
    return steps


def apply_r0(g: RibbonGraph, step: ReductionStep) -> RibbonGraph:
    (v,) = step.witnesses
    if step.kind != "R0" or not _r0_ok(g, v):
        raise NotApplicable(f"{step}: vertex must be pendant and outside Im(S)")
    (e,) = g.incident[v]
    return _rebuild(g, {}, v, e)


def apply_r1(g: RibbonGraph, step: ReductionStep) -> RibbonGraph:
    (e,) = step.witnesses
    if step.kind != "R1" or not _r1_ok(g, e):
        raise NotApplicable(f"{step}: S(e) must be an end of e")
    a, b = sorted(g.edges[e])
    return _rebuild(g, {b: a}, None, e)


def apply_r2(g: RibbonGraph, step: ReductionStep) -> RibbonGraph:
    i, j = step.witnesses
    ends = _r2_far_ends(g, i, j) if step.kind == "R2" else None
    if ends is None:
        raise NotApplicable(f"{step}: edges need a common head or tail and equal S values")
    a, b = sorted(ends)
    i, j = sorted((i, j))
    return _rebuild(g, {b: a}, None, j)


def apply_r3(g: RibbonGraph, step: ReductionStep) -> RibbonGraph:
    i, j, k, q = step.witnesses
    chain = _r3_chain(g, i, j, k, q) if step.kind == "R3" else None
    if chain is None:
        raise NotApplicable(f"{step}: R3 precondition fails")
    x, y = chain
    edges = list(g.edges)
    sing = list(g.singularity)
    # e_j pointed from x toward y; it keeps that direction on the (q, y) side.
    edges[j] = (q, y)
    edges[k] = (x, q) if g.tail(k) == q else (q, x)
    sing[k] = g.tail(i)
    return RibbonGraph(g.vertices, tuple(edges), tuple(sing))


_APPLY = {"R0": apply_r0, "R1": apply_r1, "R2": apply_r2, "R3": apply_r3}


def apply_step(g: RibbonGraph, step: ReductionStep) -> RibbonGraph:
    try:
        fn = _APPLY[step.kind]
    except KeyError:
        raise NotApplicable(f"unknown reduction kind {step.kind!r}") from None
    return fn(g, step)


def _first_reduction(g: RibbonGraph) -> ReductionStep | None:
    for s in find_reductions(g):
        if s.kind != "R3":
            return s
    return None


def reduce_fully(g: RibbonGraph, use_r3: bool = False) -> tuple[RibbonGraph, list[ReductionStep]]:
    """Apply the first available R0/R1/R2 step until none remains.

    With ``use_r3``, a stuck graph is offered each R3 transformation once; the
    first one whose result admits an R0/R1/R2 step is taken.
    """
    log: list[ReductionStep] = []
    seen = {canonical_serialize(g)}
    while True:
        step = _first_reduction(g)
        if step is not None:
            g = apply_step(g, step)
            log.append(step)
            seen.add(canonical_serialize(g))
            continue
        if not use_r3:
            return g, log
        for s in find_reductions(g):
            if s.kind != "R3":
                continue
            h = apply_r3(g, s)
            key = canonical_serialize(h)
            if key in seen:
                continue
            seen.add(key)
            if _first_reduction(h) is not None:
                g = h
                log.append(s)
                break
        else:
            return g, log


def format_log(steps: Sequence[ReductionStep]) -> str:
    return "".join(f"{s}\n" for s in steps)
