"""Principal specializations of (skew) Schur functions at ``q^{ν+ρ}``.

``x_i = q^{ν_i - i + 1/2} = τ^{2i - 1 - 2ν_i}``. Skew Schur values come from
Jacobi–Trudi over complete symmetric functions, which in turn come from the
specialized power sums by Newton's identities. ``schur_rho_closed`` is the
hook-length product and serves as the independent check at ``ν = ∅``.
"""

from __future__ import annotations

from functools import lru_cache

from .laurent import LaurentSeries, _div, inv_one_minus
from .partitions import EMPTY, Partition, hooks, n_stat


def power_sum_spec(n: int, nu: Partition, M: int) -> LaurentSeries:
    """``p_n(q^{ν+ρ})``: the finite correction from ν plus the closed-form tail."""
    if n < 1:
        raise ValueError("power sums are indexed from 1")
    return _power_sum(n, nu, M)


@lru_cache(maxsize=None)
def _power_sum(n: int, nu: Partition, M: int) -> LaurentSeries:
    finite: dict[int, int] = {}
    for i in range(1, len(nu) + 1):
        for e, c in ((n * (2 * i - 1 - 2 * nu.row(i)), 1), (n * (2 * i - 1), -1)):
            finite[e] = finite.get(e, 0) + c
    tail = inv_one_minus(2 * n, M).shift(n)
    return LaurentSeries.from_terms(finite, M) + tail


class SpecContext:
    """Memoized ``p_n`` and ``h_k`` values at ``q^{ν+ρ}``. Not thread-safe while filling."""

    def __init__(self, nu: Partition, M: int):
        self.nu = nu
        self.M = M
        self._p: dict[int, LaurentSeries] = {}
        self._h: list[LaurentSeries] = [LaurentSeries.one(M)]

    def p(self, n: int) -> LaurentSeries:
        if n not in self._p:
            self._p[n] = power_sum_spec(n, self.nu, self.M)
        return self._p[n]

    def h(self, k: int) -> LaurentSeries:
        if k < 0:
            return LaurentSeries.zero(self.M)
        while len(self._h) <= k:
            m = len(self._h)
            acc = LaurentSeries.zero(self.M)
            for j in range(1, m + 1):
                acc = acc + self.p(j) * self._h[m - j]
            self._h.append(LaurentSeries(acc.lo, (_div(c, m) for c in acc.coeffs), acc.order, acc.prec))
        return self._h[k]


@lru_cache(maxsize=None)
def spec_context(nu: Partition, M: int) -> SpecContext:
    return SpecContext(nu, M)


def complete_h_spec(k: int, ctx: SpecContext) -> LaurentSeries:
    return ctx.h(k)


def skew_schur_spec(lam: Partition, mu: Partition, nu: Partition, M: int) -> LaurentSeries:
    """``s_{λ/μ}(q^{ν+ρ})`` via Jacobi–Trudi; zero unless ``μ ⊆ λ``."""
    return _skew_schur(lam, mu, nu, M)


@lru_cache(maxsize=None)
def _skew_schur(lam: Partition, mu: Partition, nu: Partition, M: int) -> LaurentSeries:
    if not lam.contains(mu):
        return LaurentSeries.zero(M)
    if lam == mu:
        return LaurentSeries.one(M)
    ctx = spec_context(nu, M)
    n = len(lam)

    def entry(i: int, j: int) -> LaurentSeries:
        return ctx.h(lam.row(i + 1) - mu.row(j + 1) - i + j)

    memo: dict[tuple[int, frozenset[int]], LaurentSeries] = {}

    def minor(row: int, cols: frozenset[int]) -> LaurentSeries:
        # Laplace expansion along ``row`` over the remaining columns
        if row == n:
            return LaurentSeries.one(M)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = LaurentSeries.zero(M)
        for pos, j in enumerate(sorted(cols)):
            e = entry(row, j)
            if e.is_exact_zero():
                continue
            term = e * minor(row + 1, cols - {j})
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return minor(0, frozenset(range(n)))


def schur_spec(lam: Partition, nu: Partition, M: int) -> LaurentSeries:
    return skew_schur_spec(lam, EMPTY, nu, M)


@lru_cache(maxsize=None)
def schur_rho_closed(lam: Partition, M: int) -> LaurentSeries:
    """``s_λ(q^ρ) = τ^{2n(λ)+|λ|} Π_cells 1/(1-τ^{2h})``."""
    result = LaurentSeries.monomial(1, 2 * n_stat(lam) + lam.size, M)
    counts: dict[int, int] = {}
    for h in hooks(lam):
        counts[h] = counts.get(h, 0) + 1
    for h, k in sorted(counts.items()):
        result = result * inv_one_minus(2 * h, M, k)
    return result


def hook_factor(lam: Partition, M: int, power: int = 1) -> LaurentSeries:
    """``Π_cells (1-τ^{2h})^{-power}``."""
    result = LaurentSeries.one(M)
    counts: dict[int, int] = {}
    for h in hooks(lam):
        counts[h] = counts.get(h, 0) + power
    for h, k in sorted(counts.items()):
        result = result * inv_one_minus(2 * h, M, k)
    return result
