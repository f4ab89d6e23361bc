"""Combinatorial ribbon diagrams and their dual ribbon graphs.

A diagram of genus ``g`` has ``2g`` boundary points numbered
counterclockwise.  Boundary arc ``j`` runs from point ``j`` to point
``j + 1 (mod 2g)``.  Each marked arc ``gamma_i`` is a chord joining two
boundary points, chords do not cross, and the marked side of chord ``i`` is
the side containing boundary arc ``mark_arc[i]``.  The interior arc
``beta_i`` is placed in the face containing boundary arc ``beta_arc[i]``.

Regions of the disk minus the chords are named by the smallest boundary arc
they touch.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .ribbon_graph import Problem, RibbonGraph, RibbonMatrix

__all__ = [
    "RibbonDiagram",
    "FaceDecomposition",
    "InvalidRibbonDiagram",
    "validate_diagram",
    "build_faces",
    "to_ribbon_graph",
    "ribbon_matrix_direct",
    "parse_diagram",
    "diagram_from_dict",
    "noncrossing_matchings",
    "all_diagrams",
    "random_diagram",
    "random_diagrams",
]


class InvalidRibbonDiagram(ValueError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(map(str, self.problems)))


@dataclass(frozen=True)
class RibbonDiagram:
    gamma: tuple[tuple[int, int], ...]
    mark_arc: tuple[int, ...]
    beta_arc: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple((int(a), int(b)) for a, b in self.gamma))
        object.__setattr__(self, "mark_arc", tuple(int(x) for x in self.mark_arc))
        object.__setattr__(self, "beta_arc", tuple(int(x) for x in self.beta_arc))

    @property
    def genus(self) -> int:
        return len(self.gamma)

    def inside(self, i: int, arc: int) -> bool:
        """Whether boundary ``arc`` lies between the endpoints of chord ``i``."""
        a, b = sorted(self.gamma[i])
        return a <= arc < b

    def marked_inside(self, i: int) -> bool:
        return self.inside(i, self.mark_arc[i])

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "gamma": [list(c) for c in self.gamma],
            "mark_arc": list(self.mark_arc),
            "beta_arc": list(self.beta_arc),
        }


def validate_diagram(d: RibbonDiagram) -> list[Problem]:
    g = d.genus
    npts = 2 * g
    problems: list[Problem] = []
    if len(d.mark_arc) != g or len(d.beta_arc) != g:
        problems.append(Problem("Malformed", "gamma, mark_arc and beta_arc must all have genus entries"))
    owner: dict[int, int] = {}
    for i, (a, b) in enumerate(d.gamma):
        if a == b:
            problems.append(Problem("DuplicateEndpoint", f"chord {i} has both ends at point {a}"))
            continue
        for p in (a, b):
            if not 0 <= p < npts:
                problems.append(Problem("BadPointRef", f"chord {i} uses point {p} outside 0..{npts - 1}"))
            elif p in owner:
                problems.append(Problem("DuplicateEndpoint", f"point {p} is used by chords {owner[p]} and {i}"))
            else:
                owner[p] = i
    if problems:
        return problems
    for i in range(g):
        a, b = sorted(d.gamma[i])
        for j in range(i + 1, g):
            c, e = sorted(d.gamma[j])
            if a < c < b < e or c < a < e < b:
                problems.append(Problem("CrossingChords", f"chords {i} and {j} cross"))
    for name, arcs in (("mark_arc", d.mark_arc), ("beta_arc", d.beta_arc)):
        for i, x in enumerate(arcs):
            if not 0 <= x < npts:
                problems.append(Problem("BadArcRef", f"{name}[{i}] = {x} is not an arc id in 0..{npts - 1}"))
    return problems


def _check(d: RibbonDiagram) -> None:
    problems = validate_diagram(d)
    if problems:
        raise InvalidRibbonDiagram(problems)


@dataclass(frozen=True)
class FaceDecomposition:
    faces: tuple[int, ...]
    membership: tuple[int, ...]
    sides: tuple[tuple[int, int], ...]
    """Per chord: (face on the marked side, face on the unmarked side)."""

    def face_of_arc(self, arc: int) -> int:
        return self.membership[arc] if self.membership else 0


def build_faces(d: RibbonDiagram) -> FaceDecomposition:
    _check(d)
    g = d.genus
    if g == 0:
        return FaceDecomposition((0,), (), ())
    npts = 2 * g
    partner = [0] * npts
    for a, b in d.gamma:
        partner[a], partner[b] = b, a
    # Walking a face: after arc j reaches point j+1 we follow its chord and
    # continue along the arc starting at the partner point.
    membership = [-1] * npts
    for start in range(npts):
        if membership[start] >= 0:
            continue
        arc = start
        while membership[arc] < 0:
            membership[arc] = start
            arc = partner[(arc + 1) % npts]
    faces = tuple(sorted(set(membership)))
    assert len(faces) == g + 1, "non-crossing chords must cut the disk into g+1 faces"
    sides = []
    for i, (a, b) in enumerate(d.gamma):
        lo, hi = sorted((a, b))
        inner, outer = membership[lo], membership[hi]
        sides.append((inner, outer) if d.marked_inside(i) else (outer, inner))
    return FaceDecomposition(faces, tuple(membership), tuple(sides))


def to_ribbon_graph(d: RibbonDiagram) -> RibbonGraph:
    """Dual tree: faces become vertices, chords become edges pointing to the marked side."""
    fd = build_faces(d)
    index = {f: n for n, f in enumerate(fd.faces)}
    edges = tuple((index[unmarked], index[marked]) for marked, unmarked in fd.sides)
    sing = tuple(index[fd.face_of_arc(x)] for x in d.beta_arc)
    return RibbonGraph(len(fd.faces), edges, sing).check()


def ribbon_matrix_direct(d: RibbonDiagram) -> RibbonMatrix:
    """Ribbon matrix from side-of-chord tests on the diagram itself."""
    _check(d)
    g = d.genus
    m = [[0] * g for _ in range(g)]
    for i in range(g):
        mark_in = d.marked_inside(i)
        a, b = sorted(d.gamma[i])
        for j in range(g):
            beta_marked = d.inside(i, d.beta_arc[j]) == mark_in
            if i == j:
                m[i][i] = 1 if beta_marked else -1
                continue
            c = d.gamma[j][0]
            gamma_marked = (a < c < b) == mark_in
            if beta_marked and not gamma_marked:
                m[i][j] = 2
            elif gamma_marked and not beta_marked:
                m[i][j] = -2
    return RibbonMatrix(tuple(tuple(r) for r in m))


_DIAGRAM_KEYS = {"genus", "gamma", "mark_arc", "beta_arc"}


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidRibbonDiagram([Problem("Malformed", f"{what} must be an integer, got {x!r}")])
    return x


def diagram_from_dict(data) -> RibbonDiagram:
    if not isinstance(data, dict):
        raise InvalidRibbonDiagram([Problem("Malformed", "diagram must be a JSON object")])
    if set(data) != _DIAGRAM_KEYS:
        extra, missing = sorted(set(data) - _DIAGRAM_KEYS), sorted(_DIAGRAM_KEYS - set(data))
        raise InvalidRibbonDiagram([Problem("Malformed", f"unknown keys {extra}, missing keys {missing}")])
    genus = _int(data["genus"], "genus")
    gamma_raw = data["gamma"]
    if not isinstance(gamma_raw, list) or not all(isinstance(c, list) and len(c) == 2 for c in gamma_raw):
        raise InvalidRibbonDiagram([Problem("Malformed", "gamma must be a list of [a, b] pairs")])
    for key in ("mark_arc", "beta_arc"):
        if not isinstance(data[key], list):
            raise InvalidRibbonDiagram([Problem("Malformed", f"{key} must be a list")])
    gamma = tuple((_int(a, "chord endpoint"), _int(b, "chord endpoint")) for a, b in gamma_raw)
    mark = tuple(_int(x, "mark_arc entry") for x in data["mark_arc"])
    beta = tuple(_int(x, "beta_arc entry") for x in data["beta_arc"])
    if genus != len(gamma):
        raise InvalidRibbonDiagram([Problem("Malformed", f"genus {genus} but {len(gamma)} chords")])
    d = RibbonDiagram(gamma, mark, beta)
    _check(d)
    return d


def parse_diagram(text: str) -> RibbonDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidRibbonDiagram([Problem("Malformed", f"invalid JSON: {exc}")]) from None
    return diagram_from_dict(data)


# -- generation -----------------------------------------------------------

def noncrossing_matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    """All non-crossing perfect matchings of ``points`` (in circular order)."""
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inner, outer = points[1:k], points[k + 1:]
        for m_in in noncrossing_matchings(inner):
            for m_out in noncrossing_matchings(outer):
                yield [(first, points[k])] + m_in + m_out


def all_diagrams(genus: int) -> Iterator[RibbonDiagram]:
    """Every matching, every choice of marked side, every beta arc.

    The marked side is witnessed by the first arc inside or the first arc
    past the chord, so each side choice appears once.
    """
    npts = 2 * genus
    for match in noncrossing_matchings(list(range(npts))):
        witnesses = [(a, b) for a, b in match]
        for sides in product((0, 1), repeat=genus):
            mark = tuple(w[s] for w, s in zip(witnesses, sides))
            for beta in product(range(npts), repeat=genus):
                yield RibbonDiagram(tuple(match), mark, beta)


def random_diagram(rng, genus: int) -> RibbonDiagram:
    """Random valid diagram; ``rng`` is a :class:`numpy.random.Generator`."""
    npts = 2 * genus

    def match(pts: list[int]) -> list[tuple[int, int]]:
        if not pts:
            return []
        k = 2 * int(rng.integers(len(pts) // 2)) + 1
        return [(pts[0], pts[k])] + match(pts[1:k]) + match(pts[k + 1:])

    rot = int(rng.integers(npts)) if npts else 0
    chords = [((a + rot) % npts, (b + rot) % npts) for a, b in match(list(range(npts)))]
    order = rng.permutation(genus) if genus else []
    chords = [chords[int(x)] for x in order]
    chords = [c if rng.random() < 0.5 else c[::-1] for c in chords]
    mark = tuple(int(rng.integers(npts)) for _ in range(genus))
    beta = tuple(int(rng.integers(npts)) for _ in range(genus))
    return RibbonDiagram(tuple(chords), mark, beta)


def random_diagrams(count: int, seed: int, max_genus: int) -> Iterator[RibbonDiagram]:
    """``count`` reproducible random diagrams; diagram ``i`` depends only on ``(seed, i)``."""
    for i in range(count):
        rng = np.random.default_rng([seed, i])
        yield random_diagram(rng, int(rng.integers(max_genus + 1)))
