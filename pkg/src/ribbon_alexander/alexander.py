"""Half Alexander polynomial and Conway-normalized Alexander polynomial.

For a ribbon matrix ``R`` (stored as ``2R``) the half polynomial is

    R(t) = det((t - 1) R - (t + 1)/2 I) = det((t - 1) 2R - (t + 1) I) / 2**g

and the Alexander polynomial is ``R(t) * R(1/t)``.  The same half polynomial
is also computed as ``det(t P - Q^T)`` with ``P = R - I/2`` and
``Q = R^T + I/2``; the two routes must agree exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .laurent import T, LaurentPoly, det
from .ribbon_graph import RibbonGraph, RibbonMatrix, ribbon_matrix

__all__ = [
    "PQPair",
    "AlexanderResult",
    "InvariantReport",
    "AlexanderError",
    "DivisibilityViolation",
    "RouteMismatch",
    "InvariantViolation",
    "pq_from_ribbon",
    "half_alexander",
    "conway_alexander",
    "alexander",
    "check_invariants",
    "display_normalize",
    "format_report",
]


class AlexanderError(ArithmeticError):
    """An identity that holds by theorem failed; indicates a bug."""


class DivisibilityViolation(AlexanderError):
    pass


class RouteMismatch(AlexanderError):
    pass


class InvariantViolation(AlexanderError):
    pass


IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PQPair:
    p: IntMatrix
    q: IntMatrix


def pq_from_ribbon(r: RibbonMatrix) -> PQPair:
    """``P = R - I/2`` and ``Q = R^T + I/2``, both integral."""
    d = r.doubled
    g = len(d)
    p = [[0] * g for _ in range(g)]
    q = [[0] * g for _ in range(g)]
    for i in range(g):
        for j in range(g):
            x = d[i][j]
            if i == j:
                if x not in (1, -1):
                    raise ValueError(f"doubled diagonal entry ({i},{i}) must be odd (+-1), got {x}")
                p[i][i] = (x - 1) // 2
                q[i][i] = (x + 1) // 2
            else:
                if x % 2:
                    raise ValueError(f"doubled off-diagonal entry ({i},{j}) must be even, got {x}")
                p[i][j] = x // 2
                q[j][i] = x // 2
    for i in range(g):
        for j in range(g):
            assert q[i][j] - p[j][i] == (1 if i == j else 0)
    return PQPair(tuple(map(tuple, p)), tuple(map(tuple, q)))


def _scaled_route(r: RibbonMatrix) -> LaurentPoly:
    d = r.doubled
    g = len(d)
    tm1 = T - 1
    tp1 = T + 1
    m = [[tm1 * d[i][j] - (tp1 if i == j else 0) for j in range(g)] for i in range(g)]
    full = det(m)
    scale = 1 << g
    if any(c % scale for c in full.dense):
        raise DivisibilityViolation(f"det((t-1)2R-(t+1)I) = {full} is not divisible by 2^{g}")
    return LaurentPoly.from_dense(full.low, [c // scale for c in full.dense])


def _pq_route(r: RibbonMatrix) -> LaurentPoly:
    pq = pq_from_ribbon(r)
    g = r.genus
    m = [[T * pq.p[i][j] - pq.q[j][i] for j in range(g)] for i in range(g)]
    return det(m)


def half_alexander(r: RibbonMatrix, cross_check: bool = True) -> LaurentPoly:
    """The half Alexander polynomial ``R(t)``, unnormalized."""
    half = _scaled_route(r)
    if cross_check:
        other = _pq_route(r)
        if other != half:
            raise RouteMismatch(f"det(tP - Q^T) = {other} but scaled route gives {half}")
    return half


def conway_alexander(half: LaurentPoly) -> LaurentPoly:
    return half * half.reverse()


@dataclass(frozen=True)
class InvariantReport:
    delta_at_1: int
    half_at_1: int
    delta_at_minus_1: int
    half_at_minus_1: int
    symmetric: bool

    @property
    def determinant(self) -> int:
        return abs(self.delta_at_minus_1)

    @property
    def determinant_sqrt(self) -> int:
        return abs(self.half_at_minus_1)


@dataclass(frozen=True)
class AlexanderResult:
    genus: int
    half: LaurentPoly
    delta: LaurentPoly
    matrix: RibbonMatrix
    checks: InvariantReport | None = None


def check_invariants(res: AlexanderResult) -> InvariantReport:
    """Evaluate the identities every ribbon knot satisfies; raise on the first failure."""
    g = res.genus
    d1 = res.delta(1)
    h1 = res.half(1)
    dm1 = res.delta(-1)
    hm1 = res.half(-1)
    symmetric = res.delta == res.delta.reverse()
    if res.delta != conway_alexander(res.half):
        raise InvariantViolation("delta(t) != R(t) R(1/t)")
    if d1 != 1:
        raise InvariantViolation(f"delta(1) = {d1}, expected 1")
    if h1 != (-1) ** g:
        raise InvariantViolation(f"R(1) = {h1}, expected (-1)^{g}")
    if not symmetric:
        raise InvariantViolation("delta(t) != delta(1/t)")
    if dm1 != hm1 * hm1 or math.isqrt(dm1) ** 2 != dm1:
        raise InvariantViolation(f"delta(-1) = {dm1} is not R(-1)^2 = {hm1 * hm1}")
    if res.delta and (res.delta.low < -g or res.delta.high > g):
        raise InvariantViolation(f"delta exponents exceed [-{g}, {g}]")
    return InvariantReport(d1, h1, dm1, hm1, symmetric)


def alexander(source: Union[RibbonGraph, RibbonMatrix], cross_check: bool = True,
              checks: bool = True) -> AlexanderResult:
    """Run the full pipeline on a ribbon graph or a ribbon matrix."""
    r = ribbon_matrix(source) if isinstance(source, RibbonGraph) else source
    half = half_alexander(r, cross_check=cross_check)
    res = AlexanderResult(r.genus, half, conway_alexander(half), r)
    if checks:
        res = AlexanderResult(res.genus, res.half, res.delta, r, check_invariants(res))
    return res


def display_normalize(p: LaurentPoly) -> LaurentPoly:
    """Non-canonical display form: lowest exponent 0, lowest coefficient positive.

    Only for eyeballing half polynomials across reductions; the result is not
    an invariant of anything.
    """
    if not p:
        return p
    q = p.shift(-p.low)
    return -q if q.dense[0] < 0 else q


def format_report(res: AlexanderResult) -> str:
    rep = res.checks or check_invariants(res)
    lines = [
        f"half = {res.half}",
        f"delta = {res.delta}",
        f"delta(1) = {rep.delta_at_1}",
        f"det = {rep.determinant}",
        f"det_sqrt = {rep.determinant_sqrt}",
    ]
    return "\n".join(lines)

