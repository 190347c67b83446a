"""The topological vertex ``C_{λ,μ,ν}(q)`` in its Schur-function form."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .laurent import LaurentSeries
from .partitions import Partition, kappa, sub_partitions
from .schur import schur_rho_closed, skew_schur_spec


@dataclass(frozen=True)
class VertexValue:
    value: LaurentSeries
    labels: tuple[Partition, Partition, Partition]

    @property
    def window(self) -> int:
        return self.value.window


def topological_vertex(lam: Partition, mu: Partition, nu: Partition, M: int) -> VertexValue:
    return VertexValue(_vertex(lam, mu, nu, M), (lam, mu, nu))


@lru_cache(maxsize=None)
def _vertex(lam: Partition, mu: Partition, nu: Partition, M: int) -> LaurentSeries:
    lam_t, nu_t = lam.conjugate, nu.conjugate
    # η must fit inside both λ^t and μ; walk the smaller one
    small, big = (lam_t, mu) if lam_t.size <= mu.size else (mu, lam_t)
    total = LaurentSeries.zero(M)
    for eta in sub_partitions(small):
        if not big.contains(eta):
            continue
        a = skew_schur_spec(lam_t, eta, nu, M)
        if a.is_exact_zero():
            continue
        total = total + a * skew_schur_spec(mu, eta, nu_t, M)
    prefactor = schur_rho_closed(nu_t, M).shift(-kappa(lam) - kappa(nu))
    return prefactor * total


def widened(build: Callable[[int], Sequence[LaurentSeries]], target: int, rounds: int = 6) -> tuple[list[LaurentSeries], int]:
    """Raise the working order until every series is certified through ``target``.

    The framing factor ``τ^{-κ}`` and negative lowest exponents of the
    specialized Schur functions eat into the window; the shortfall of one
    attempt is added to the order of the next. Returns the series and the
    window actually certified.
    """
    work = target
    for _ in range(rounds):
        values = list(build(work))
        window = min(v.window for v in values)
        if window >= target:
            break
        work += target - window
    return values, window


def rotation_sides(lam: Partition, mu: Partition, nu: Partition, M: int) -> tuple[LaurentSeries, ...]:
    return _vertex(lam, mu, nu, M), _vertex(mu, nu, lam, M), _vertex(nu, lam, mu, M)


def mirror_sides(lam: Partition, mu: Partition, nu: Partition, M: int) -> tuple[LaurentSeries, LaurentSeries]:
    lhs = _vertex(lam, mu, nu, M)
    rhs = _vertex(mu.conjugate, lam.conjugate, nu.conjugate, M).shift(-kappa(lam) - kappa(mu) - kappa(nu))
    return lhs, rhs


def _agree(values: Sequence[LaurentSeries], upto: int) -> bool:
    return all(values[0].eq_to_order(v, upto)[0] for v in values[1:])


def check_rotation(lam: Partition, mu: Partition, nu: Partition, M: int) -> bool:
    """``C_{λμν} = C_{μνλ} = C_{νλμ}`` through ``τ^M`` (the working order is raised as needed)."""
    values, window = widened(lambda m: rotation_sides(lam, mu, nu, m), M)
    return _agree(values, min(window, M))


def check_mirror(lam: Partition, mu: Partition, nu: Partition, M: int) -> bool:
    """``C_{λμν} = q^{(κ(λ)+κ(μ)+κ(ν))/2} C_{μ^t λ^t ν^t}`` through ``τ^M``."""
    values, window = widened(lambda m: mirror_sides(lam, mu, nu, m), M)
    return _agree(values, min(window, M))
