from collections import defaultdict
from itertools import product

import pytest
from hypothesis import given

from conftest import partitions
from novertex.laurent import LaurentSeries
from novertex.partitions import EMPTY, Partition, kappa, n_stat, partitions_up_to
from novertex.schur import (
    hook_factor,
    power_sum_spec,
    schur_rho_closed,
    schur_spec,
    skew_schur_spec,
    spec_context,
)

M = 12


def agree(a: LaurentSeries, b: LaurentSeries, upto: int = M) -> bool:
    return a.eq_to_order(b, min(upto, a.window, b.window))[0]


def x_exponent(i: int, nu: Partition) -> int:
    return 2 * i - 1 - 2 * nu.row(i)


def ssyt_oracle(lam: Partition, mu: Partition, nu: Partition, upto: int) -> dict[int, int]:
    """Brute-force τ-expansion of ``s_{λ/μ}`` at ``x_i = τ^{2i-1-2ν_i}`` through ``upto``.

    Tableaux are filled cell by cell; entries are bounded so that any larger
    entry pushes the total degree past ``upto`` whatever the other cells hold.
    """
    cells = [(i, j) for i in range(1, len(lam) + 1) for j in range(mu.row(i) + 1, lam.row(i) + 1)]
    low = min(0, min(x_exponent(i, nu) for i in range(1, len(nu) + 2)))
    K = 1
    while 2 * K + 1 + (len(cells) - 1) * low <= upto:
        K += 1
    counts: dict[int, int] = defaultdict(int)
    filling: dict[tuple[int, int], int] = {}

    def fill(pos: int, degree: int) -> None:
        if pos == len(cells):
            if degree <= upto:
                counts[degree] += 1
            return
        i, j = cells[pos]
        start = max(filling.get((i, j - 1), 1), filling.get((i - 1, j), 0) + 1)
        for v in range(start, K + 1):
            filling[(i, j)] = v
            fill(pos + 1, degree + x_exponent(v, nu))
        filling.pop((i, j), None)

    fill(0, 0)
    return dict(counts)


def matches_oracle(series: LaurentSeries, oracle: dict[int, int], upto: int) -> bool:
    lo = min([series.lo] + list(oracle))
    return all(series[e] == oracle.get(e, 0) for e in range(lo, upto + 1))


def test_power_sum_at_rho():
    p1 = power_sum_spec(1, EMPTY, M)
    assert [p1[e] for e in range(0, 12)] == [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]


def test_power_sum_with_nu():
    # ν = (2): x_1 = τ^{-3}, the rest unchanged
    p1 = power_sum_spec(1, Partition.of(2), M)
    assert p1[-3] == 1 and p1[1] == 0 and p1[3] == 1


def test_power_sum_index_check():
    with pytest.raises(ValueError):
        power_sum_spec(0, EMPTY, M)


@pytest.mark.parametrize("nu", [EMPTY, Partition.of(1), Partition.of(2, 1)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_complete_symmetric_against_oracle(nu, k):
    h = spec_context(nu, 16).h(k)
    upto = min(h.window, 10)
    assert matches_oracle(h, ssyt_oracle(Partition.of(k), EMPTY, nu, upto), upto)


SKEW_CASES = [
    (Partition.of(2, 1), EMPTY, Partition.of(1)),
    (Partition.of(2, 2), Partition.of(1), Partition.of(1)),
    (Partition.of(3, 1), Partition.of(1), Partition.of(2)),
    (Partition.of(2, 1, 1), Partition.of(1, 1), Partition.of(1, 1)),
    (Partition.of(3, 2), Partition.of(2), EMPTY),
]


@pytest.mark.parametrize("lam,mu,nu", SKEW_CASES)
def test_skew_schur_against_tableaux(lam, mu, nu):
    s = skew_schur_spec(lam, mu, nu, 18)
    upto = min(s.window, 10)
    assert upto > 0
    assert matches_oracle(s, ssyt_oracle(lam, mu, nu, upto), upto)


def test_jacobi_trudi_matches_hook_formula():
    for lam in partitions_up_to(8):
        assert agree(schur_spec(lam, EMPTY, 24), schur_rho_closed(lam, 24), 24), lam


def test_skew_schur_outside_containment_is_zero():
    assert skew_schur_spec(Partition.of(2), Partition.of(1, 1), EMPTY, M).is_exact_zero()
    assert skew_schur_spec(Partition.of(2), Partition.of(2), EMPTY, M) == LaurentSeries.one(M)


@given(partitions(7))
def test_conjugation_ratio(lam):
    # n(λ^t) - n(λ) = κ(λ)/2
    lhs = schur_rho_closed(lam.conjugate, 30)
    rhs = schur_rho_closed(lam, 30).shift(kappa(lam))
    assert agree(lhs, rhs, 20)


@given(partitions(8))
def test_leading_term(lam):
    s = schur_rho_closed(lam, 80)
    assert s.valuation() == 2 * n_stat(lam) + lam.size
    assert s[s.valuation()] == 1


@given(partitions(6))
def test_hook_factor_powers(lam):
    assert agree(hook_factor(lam, 20, 2), hook_factor(lam, 20) * hook_factor(lam, 20), 20)
    assert agree(hook_factor(lam, 20, -1) * hook_factor(lam, 20), LaurentSeries.one(20), 20)


def test_homogeneity_in_finitely_many_variables():
    # with x_i = τ^{2i-1}, rescaling τ ↦ -τ multiplies s_λ by (-1)^{|λ|}
    for lam in partitions_up_to(5):
        s = schur_rho_closed(lam, 20)
        assert all(s[e] == 0 for e in range(s.lo, 21) if (e - lam.size) % 2)
