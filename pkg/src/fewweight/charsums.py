"""Additive characters, quadratic Gauss sums, Weil sums and quadratic sums.

Every sum is returned exactly as a :class:`~fewweight.cyclo.CycInt`.  Each
closed form has a brute-force twin that sums the defining series term by term;
the test suite checks them against each other.

The Weil sum ``S_u(a, b) = sum_x chi(a x^(p^u+1) + b x)`` is evaluated in
closed form through the F_p-linear map ``X -> a^(p^u) X^(p^(2u)) + a X``,
which is solved by Gaussian elimination on its m x m coordinate matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cyclo import CycInt
from .gf import FieldElement, FieldError, FieldSpec, eta_p, row_reduce


@dataclass(frozen=True)
class WeilParams:
    spec: FieldSpec
    u: int

    def __post_init__(self):
        if self.u < 1:
            raise ValueError(f"u={self.u} must be a positive integer")

    @property
    def v(self) -> int:
        return math.gcd(self.spec.m, self.u)

    @property
    def exponent(self) -> int:
        return self.spec.p**self.u + 1

    @property
    def m_over_v(self) -> int:
        return self.spec.m // self.v

    @property
    def s_over_v(self) -> int:
        if self.m_over_v % 2:
            raise FieldError("s/v is only used when m/v is even")
        return self.spec.s // self.v

    def power(self, x: FieldElement) -> FieldElement:
        """x^(p^u + 1), computed as x^(p^u) * x."""
        return x.frobenius(self.u) * x


@dataclass(frozen=True)
class LinearizedSolution:
    kernel_dim: int
    particular: FieldElement | None
    solvable: bool


def chi(b: FieldElement, x: FieldElement) -> CycInt:
    """Additive character chi_b(x) = zeta_p^Tr(bx)."""
    return CycInt.zeta_power(b.field.p, (b * x).trace())


def chi_bar(x: FieldElement) -> CycInt:
    """Complex conjugate of the canonical character, zeta_p^-Tr(x)."""
    return CycInt.zeta_power(x.field.p, -x.trace())


def _sum_series(spec: FieldSpec, exponents) -> CycInt:
    # sum of zeta^e over an iterable of exponents, accumulated as counts per residue
    counts = [0] * spec.p
    for e in exponents:
        counts[e % spec.p] += 1
    return CycInt.from_cyclic(spec.p, counts)


def prime_gauss_sum(p: int) -> CycInt:
    """g_p = sum over t in F_p^* of eta_p(t) zeta^t; g_p^2 = (-1)^((p-1)/2) p."""
    return CycInt.from_cyclic(p, [0] + [eta_p(t, p) for t in range(1, p)])


def gauss_bruteforce(spec: FieldSpec) -> CycInt:
    counts = [0] * spec.p
    for x in spec.elements():
        if x:
            counts[x.trace()] += x.eta()
    return CycInt.from_cyclic(spec.p, counts)


@lru_cache(maxsize=None)
def gauss_closed(spec: FieldSpec) -> CycInt:
    """G(eta) = (-1)^(m-1) g_p^m."""
    g = prime_gauss_sum(spec.p) ** spec.m
    return g if spec.m % 2 else -g


@lru_cache(maxsize=4096)
def linearized_matrix(a: FieldElement, params: WeilParams) -> tuple:
    """Coordinate matrix of x -> a^(p^u) x^(p^(2u)) + a x; column j is the image of alpha^j."""
    spec = params.spec
    ap = a.frobenius(params.u)
    cols = [(ap * b.frobenius(2 * params.u) + a * b).coords for b in spec.basis]
    return tuple(tuple(cols[j][i] for j in range(spec.m)) for i in range(spec.m))


class LinearizedSolver:
    """Reusable solver for a^(p^u) X^(p^(2u)) + a X = rhs with a fixed a."""

    def __init__(self, a: FieldElement, params: WeilParams):
        if not a:
            raise FieldError("a must be nonzero")
        spec = params.spec
        m, p = spec.m, spec.p
        self.spec = spec
        matrix = linearized_matrix(a, params)
        # augment with the identity to record the row operations
        aug = [list(matrix[i]) + [int(i == j) for j in range(m)] for i in range(m)]
        # scanning columns right to left makes "free variables = 0" the lexicographically
        # smallest solution (c_0 most significant)
        reduced, pivots = row_reduce(aug, p, column_order=range(m - 1, -1, -1))
        self.rank = len(pivots)
        self.kernel_dim = m - self.rank
        self._pivots = pivots
        self._transform = [row[m:] for row in reduced]

    def solve(self, rhs: FieldElement) -> LinearizedSolution:
        p, m = self.spec.p, self.spec.m
        t = [sum(c * r for c, r in zip(row, rhs.coords)) % p for row in self._transform]
        if any(t[self.rank:]):
            return LinearizedSolution(self.kernel_dim, None, False)
        x = [0] * m
        for r, c in self._pivots:
            x[c] = t[r]
        return LinearizedSolution(self.kernel_dim, FieldElement(self.spec, tuple(x)), True)


@lru_cache(maxsize=4096)
def linearized_solver(a: FieldElement, params: WeilParams) -> LinearizedSolver:
    return LinearizedSolver(a, params)


def solve_linearized(a: FieldElement, rhs: FieldElement, params: WeilParams) -> LinearizedSolution:
    if not a:
        raise FieldError("a must be nonzero")
    return linearized_solver(a, params).solve(rhs)


def kernel_is_nontrivial_predicted(a: FieldElement, params: WeilParams) -> bool:
    """Solvability criterion: m/v even and a^((q-1)/(p^v+1)) = (-1)^(s/v)."""
    if params.m_over_v % 2:
        return False
    q, p, v = params.spec.q, params.spec.p, params.v
    return a ** ((q - 1) // (p**v + 1)) == (-1) ** params.s_over_v


def weil_bruteforce(a: FieldElement, b: FieldElement, params: WeilParams) -> CycInt:
    if not a:
        raise FieldError("a must be nonzero")
    return _sum_series(params.spec, ((a * params.power(x) + b * x).trace() for x in params.spec.elements()))


@lru_cache(maxsize=16)
def trace_form_table(spec: FieldSpec) -> np.ndarray:
    """(q, q) array with entry [i, j] = Tr(x_i x_j), x_i = spec.element_at(i)."""
    basis = spec.basis
    form = np.array([[(bi * bj).trace() for bj in basis] for bi in basis], dtype=np.int64)
    c = spec.coords_array
    return (c @ form @ c.T) % spec.p


def _rows_to_cycints(exps: np.ndarray, p: int) -> list[CycInt]:
    counts = np.stack([(exps == r).sum(axis=1) for r in range(p)], axis=1)
    return [CycInt.from_cyclic(p, row.tolist()) for row in counts]


def weil_bruteforce_row(a: FieldElement, params: WeilParams) -> list[CycInt]:
    """[S_u(a, b) for b in spec.elements()], each summed term by term over x."""
    if not a:
        raise FieldError("a must be nonzero")
    spec = params.spec
    table = trace_form_table(spec)
    powers = np.array([params.power(x).index for x in spec.elements()])
    # exponent of zeta for the term x of S_u(a, b) is Tr(a x^e) + Tr(b x)
    exps = (table[a.index, powers][None, :] + table) % spec.p
    return _rows_to_cycints(exps, spec.p)


def quad_bruteforce_row(a: FieldElement) -> list[CycInt]:
    """[Q(a, b) for b in spec.elements()]."""
    if not a:
        raise FieldError("a must be nonzero")
    spec = a.field
    table = trace_form_table(spec)
    squares = np.array([(x * x).index for x in spec.elements()])
    exps = (table[a.index, squares][None, :] + table) % spec.p
    return _rows_to_cycints(exps, spec.p)


def weil_closed(a: FieldElement, b: FieldElement, params: WeilParams) -> CycInt:
    if not a:
        raise FieldError("a must be nonzero")
    spec = params.spec
    p = spec.p
    sol = linearized_solver(a, params).solve(-b.frobenius(params.u))
    if params.m_over_v % 2:
        if sol.kernel_dim:
            raise FieldError("linearized map is not a permutation although m/v is odd")  # pragma: no cover
        return gauss_closed(spec) * (a.eta() * chi_bar(a * params.power(sol.particular)))
    sign = (-1) ** params.s_over_v
    if sol.kernel_dim == 0:
        return chi_bar(a * params.power(sol.particular)) * (sign * p**spec.s)
    if not sol.solvable:
        return CycInt.integer(p, 0)
    return chi_bar(a * params.power(sol.particular)) * (-sign * p ** (spec.s + params.v))


def quad_bruteforce(a: FieldElement, b: FieldElement) -> CycInt:
    if not a:
        raise FieldError("a must be nonzero")
    return _sum_series(a.field, ((a * x * x + b * x).trace() for x in a.field.elements()))


def quad_closed(a: FieldElement, b: FieldElement) -> CycInt:
    """Q(a, b) = G(eta) eta(a) conj(chi(b^2 / (4a)))."""
    if not a:
        raise FieldError("a must be nonzero")
    spec = a.field
    return gauss_closed(spec) * (a.eta() * chi_bar(b * b / (a * 4)))
