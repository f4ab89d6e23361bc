"""Independent route to the Alexander polynomial through a full Seifert matrix.

The Seifert matrix has block form ``[[0, P], [Q, L]]`` where the lower-right
block ``L`` depends on how the ribbon sits in space.  The Alexander
polynomial computed from it must not depend on ``L``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .alexander import conway_alexander, half_alexander, pq_from_ribbon
from .laurent import T, LaurentPoly, det
from .ribbon_graph import RibbonMatrix

__all__ = [
    "SeifertMatrix",
    "OracleReport",
    "seifert_matrix",
    "alexander_from_seifert",
    "sample_l_block",
    "verify_l_independence",
]


@dataclass(frozen=True)
class SeifertMatrix:
    genus: int
    a: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = self.genus
        a = self.a
        if len(a) != 2 * g or any(len(r) != 2 * g for r in a):
            raise ValueError(f"Seifert matrix for genus {g} must be {2 * g}x{2 * g}")
        for i in range(g):
            for j in range(g):
                if a[i][j]:
                    raise ValueError("upper-left block of a Seifert matrix must vanish")
                # Q - P^T = I
                if a[g + i][j] - a[j][g + i] != (1 if i == j else 0):
                    raise ValueError("off-diagonal blocks must satisfy Q - P^T = I")

    def intersection_form(self) -> tuple[tuple[int, ...], ...]:
        """``A^T - A``; equals ``[[0, I], [-I, 0]]`` exactly when L is symmetric."""
        n = 2 * self.genus
        return tuple(tuple(self.a[j][i] - self.a[i][j] for j in range(n)) for i in range(n))


def seifert_matrix(r: RibbonMatrix, l: Sequence[Sequence[int]]) -> SeifertMatrix:
    g = r.genus
    if len(l) != g or any(len(row) != g for row in l):
        raise ValueError(f"L block must be {g}x{g}")
    pq = pq_from_ribbon(r)
    a = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        for j in range(g):
            a[i][g + j] = pq.p[i][j]
            a[g + i][j] = pq.q[i][j]
            a[g + i][g + j] = int(l[i][j])
    return SeifertMatrix(g, tuple(map(tuple, a)))


def alexander_from_seifert(s: SeifertMatrix) -> LaurentPoly:
    """``t^-g det(t A - A^T)``, the integral form of the half-power determinant."""
    a = s.a
    n = 2 * s.genus
    m = [[T * a[i][j] - a[j][i] for j in range(n)] for i in range(n)]
    return det(m).shift(-s.genus)


def sample_l_block(genus: int, seed: int, index: int, bound: int) -> list[list[int]]:
    """The ``index``-th random L block for ``seed``; independent of draw order."""
    rng = np.random.default_rng([seed, index])
    return rng.integers(-bound, bound + 1, size=(genus, genus)).tolist()


@dataclass(frozen=True)
class OracleReport:
    passed: bool
    samples: int
    expected: LaurentPoly
    failed_sample: int | None = None
    failed_l: tuple[tuple[int, ...], ...] | None = None
    got: LaurentPoly | None = None

    def format(self) -> str:
        if self.passed:
            return f"oracle: PASS samples={self.samples}\ndelta = {self.expected}"
        flat = ",".join(str(x) for row in self.failed_l for x in row)
        return (
            f"oracle: FAIL sample={self.failed_sample} L=[{flat}]\n"
            f"expected = {self.expected}\n"
            f"got = {self.got}"
        )


def verify_l_independence(r: RibbonMatrix, samples: int, seed: int, bound: int) -> OracleReport:
    """Compare the Seifert route against the ribbon-matrix route for random L blocks."""
    if samples < 1 or bound < 1:
        raise ValueError("samples and bound must be at least 1")
    if seed < 0:
        raise ValueError("seed must be non-negative")
    expected = conway_alexander(half_alexander(r))
    for idx in range(samples):
        l = sample_l_block(r.genus, seed, idx, bound)
        got = alexander_from_seifert(seifert_matrix(r, l))
        if got != expected:
            return OracleReport(False, samples, expected, idx, tuple(map(tuple, l)), got)
    return OracleReport(True, samples, expected)
