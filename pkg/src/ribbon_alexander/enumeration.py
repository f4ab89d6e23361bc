"""Exhaustive and random generation of labeled ribbon graphs, plus sweeps.

A genus-``g`` ribbon graph is a labeled tree on ``g + 1`` vertices (decoded
from a Prüfer sequence, edges in decoding order), an orientation of each
edge and a singularity vertex for each edge, giving
``(g+1)**(g-1) * 2**g * (g+1)**g`` graphs.
"""
from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from .alexander import alexander
from .laurent import LaurentPoly, unit_equivalent
from .reductions import apply_step, find_reductions, reduce_fully
from .ribbon_graph import RibbonGraph, canonical_serialize

__all__ = [
    "MAX_GENUS",
    "EnumerationSpec",
    "GenusBoundExceeded",
    "prufer_decode",
    "labeled_trees",
    "graph_count",
    "enumerate_graphs",
    "random_graph",
    "random_graphs",
    "TableEntry",
    "tabulate",
    "format_table",
    "SweepStats",
    "sweep_invariants",
    "sweep_reductions",
]

MAX_GENUS = 5


class GenusBoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationSpec:
    genus: int
    dedup: bool = True
    max_genus: int = MAX_GENUS

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.genus > self.max_genus:
            raise GenusBoundExceeded(f"genus {self.genus} exceeds the enumeration bound {self.max_genus}")


def prufer_decode(seq: Iterable[int], n: int) -> list[tuple[int, int]]:
    """Edges (as ``(min, max)`` pairs, in decoding order) of the tree with Prüfer code ``seq``."""
    seq = list(seq)
    if n == 1:
        return []
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b))
    return edges


def labeled_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    for seq in product(range(n), repeat=max(n - 2, 0)):
        yield prufer_decode(seq, n)


def graph_count(genus: int) -> int:
    n = genus + 1
    if genus == 0:
        return 1
    return n ** (genus - 1) * 2 ** genus * n ** genus


def enumerate_graphs(spec: EnumerationSpec | int) -> Iterator[RibbonGraph]:
    """Stream every labeled ribbon graph of the given genus in lexicographic order."""
    if isinstance(spec, int):
        spec = EnumerationSpec(spec)
    g = spec.genus
    n = g + 1
    for tree in labeled_trees(n):
        for flips in product((False, True), repeat=g):
            edges = tuple((b, a) if f else (a, b) for (a, b), f in zip(tree, flips))
            for sing in product(range(n), repeat=g):
                yield RibbonGraph(n, edges, sing)


def random_graph(rng: np.random.Generator, genus: int) -> RibbonGraph:
    n = genus + 1
    seq = rng.integers(n, size=max(n - 2, 0)).tolist()
    flips = rng.random(genus) < 0.5
    edges = tuple((b, a) if f else (a, b) for (a, b), f in zip(prufer_decode(seq, n), flips))
    sing = tuple(rng.integers(n, size=genus).tolist())
    return RibbonGraph(n, edges, sing)


def random_graphs(count: int, seed: int, max_genus: int, min_genus: int = 0) -> Iterator[RibbonGraph]:
    """``count`` reproducible random graphs; graph ``i`` depends only on ``(seed, i)``."""
    for i in range(count):
        rng = np.random.default_rng([seed, i])
        yield random_graph(rng, int(rng.integers(min_genus, max_genus + 1)))


@dataclass
class TableEntry:
    delta: LaurentPoly
    multiplicity: int
    witness: RibbonGraph

    def format(self) -> str:
        return f"{self.multiplicity}\t{self.delta}\t{canonical_serialize(self.witness)}"


def tabulate(spec: EnumerationSpec | int) -> list[TableEntry]:
    """Distinct Alexander polynomials with multiplicities.

    The witness of each entry is the graph with the smallest canonical
    serialization, so the table does not depend on enumeration order.
    """
    if isinstance(spec, int):
        spec = EnumerationSpec(spec)
    table: dict[LaurentPoly, list] = {}
    for g in enumerate_graphs(spec):
        delta = alexander(g, cross_check=False, checks=False).delta
        key = canonical_serialize(g)
        slot = table.get(delta)
        if slot is None:
            table[delta] = [1, key, g]
        else:
            slot[0] += 1
            if key < slot[1]:
                slot[1], slot[2] = key, g
    entries = [TableEntry(d, c, w) for d, (c, _, w) in table.items()]
    entries.sort(key=lambda e: str(e.delta))
    return entries


def format_table(entries: Iterable[TableEntry]) -> str:
    return "".join(e.format() + "\n" for e in entries)


@dataclass
class SweepStats:
    graphs: int = 0
    applications: Counter = field(default_factory=Counter)
    shift_sizes: Counter = field(default_factory=Counter)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def sweep_invariants(graphs: Iterable[RibbonGraph], stats: SweepStats | None = None) -> SweepStats:
    """Run the full pipeline with every cross-check on each graph."""
    stats = stats or SweepStats()
    for g in graphs:
        stats.graphs += 1
        try:
            alexander(g, cross_check=True, checks=True)
        except ArithmeticError as exc:
            stats.failures.append(f"{canonical_serialize(g)}: {exc}")
    return stats


def sweep_reductions(graphs: Iterable[RibbonGraph], stats: SweepStats | None = None,
                     full: bool = True) -> SweepStats:
    """Apply every matched step to each graph and compare polynomials.

    Each application must keep ``delta`` and change the half polynomial by
    a unit ``+-t^k``; the observed ``|k|`` values are tallied in
    ``shift_sizes``.  With ``full``, ``reduce_fully`` (with R3) is also
    checked to preserve ``delta``.
    """
    stats = stats or SweepStats()
    for g in graphs:
        stats.graphs += 1
        before = alexander(g, cross_check=False, checks=False)
        for step in find_reductions(g):
            h = apply_step(g, step)
            stats.applications[step.kind] += 1
            label = f"{canonical_serialize(g)} {step}"
            if not h.is_valid():
                stats.failures.append(f"{label}: result is not a valid ribbon graph")
                continue
            if step.kind != "R3" and h.genus != g.genus - 1:
                stats.failures.append(f"{label}: genus did not drop by one")
            after = alexander(h, cross_check=False, checks=False)
            if after.delta != before.delta:
                stats.failures.append(f"{label}: delta {before.delta} -> {after.delta}")
            unit = unit_equivalent(before.half, after.half)
            if unit is None:
                stats.failures.append(f"{label}: half {before.half} -> {after.half} is not a unit change")
            else:
                stats.shift_sizes[abs(unit[1])] += 1
        if full:
            final, _ = reduce_fully(g, use_r3=True)
            if alexander(final, cross_check=False, checks=False).delta != before.delta:
                stats.failures.append(f"{canonical_serialize(g)}: reduce_fully changed delta")
    return stats
