from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from novertex.laurent import LaurentRing, LaurentSeries, geometric
from novertex.qseries import (
    Factor,
    Monomial,
    MSeries,
    VarTable,
    assemble_product,
    euler_product,
    macmahon,
    pow_binomial,
)
from novertex.tpoly import TPoly, TPolyRing

RING = LaurentRing(20)


def one_var(D: int = 6) -> VarTable:
    return VarTable(("Q",), D)


def test_invert_one_minus_q():
    vars = one_var()
    x = MSeries.var(vars, RING, "Q")
    inv = (MSeries.one(vars, RING) - x).invert()
    assert all(inv.coefficient((k,)) == RING.one() for k in range(7))
    assert inv.coefficient((7,)) == RING.zero()


def test_invert_needs_unit_constant():
    vars = one_var()
    with pytest.raises(ArithmeticError):
        MSeries.var(vars, RING, "Q").invert()


def test_macmahon_linear_coefficient():
    vars = one_var(3)
    z = Monomial.from_vars(vars, ["Q"])
    series = macmahon(z, vars, RING)
    expected = -(geometric(2, 20) * geometric(2, 20)).shift(2)
    c = series.coefficient((1,))
    assert c.eq_to_order(expected, min(c.window, expected.window))[0]
    assert c.window >= 18


def test_macmahon_exponent():
    vars = one_var(3)
    z = Monomial.from_vars(vars, ["Q"])
    sq = macmahon(z, vars, RING, exponent=2)
    assert sq.compare(macmahon(z, vars, RING) * macmahon(z, vars, RING))[0]
    inv = macmahon(z, vars, RING, exponent=-1)
    assert (inv * macmahon(z, vars, RING)).compare(MSeries.one(vars, RING))[0]


def test_euler_counts():
    vars = one_var(6)
    u = Monomial.from_vars(vars, ["Q"])
    full = euler_product(u, vars, RING, "inv_full")
    odd = euler_product(u, vars, RING, "odd_plus")
    assert [full.coefficient((k,)) for k in range(7)] == [RING.scalar(c) for c in (1, 1, 2, 3, 5, 7, 11)]
    assert odd.coefficient((4,)) == RING.scalar(1)
    assert odd.coefficient((5,)) == RING.scalar(1)
    assert odd.coefficient((6,)) == RING.scalar(1)


def test_euler_unknown_mode():
    vars = one_var()
    with pytest.raises(ValueError):
        euler_product(Monomial.from_vars(vars, ["Q"]), vars, RING, "bogus")


def test_non_truncating_argument():
    vars = one_var()
    with pytest.raises(ValueError, match="non-truncating"):
        euler_product(Monomial.one(1), vars, RING)


@given(st.integers(-3, 3))
def test_pow_binomial_matches_integer_powers(k):
    vars = VarTable(("x", "y"), 5)
    tring = TPolyRing(1)
    base = MSeries.one(vars, tring) - MSeries.var(vars, tring, "x") + MSeries.var(vars, tring, "y").scale(Fraction(1, 2))
    symbolic = pow_binomial(base, TPoly.const(1, k))
    assert symbolic.compare(base.pow_int(k))[0]


def test_pow_binomial_is_symbolic():
    vars = VarTable(("x",), 3)
    tring = TPolyRing(1)
    t = TPoly.var(1, 0)
    base = MSeries.one(vars, tring) - MSeries.var(vars, tring, "x")
    out = pow_binomial(base, t)
    assert out.coefficient((1,)) == -t
    assert out.coefficient((2,)) == t.falling_binomial(2)


def test_pow_binomial_rejects_q_mode():
    vars = one_var()
    with pytest.raises(ValueError):
        pow_binomial(MSeries.one(vars, RING), TPoly.const(1, 2))


def test_assemble_product_n1_second_family():
    # Euler product together with two MacMahon ratios, degree-2 truncation
    vars = VarTable(("Q1", "Q2"), 2)
    Q1, Q2 = (Monomial.from_vars(vars, [n]) for n in ("Q1", "Q2"))
    factors = [
        Factor("euler_inv", Q1 * Q2),
        Factor("macmahon", Q2, -1),
        Factor("macmahon", Q1 * Q2, 1),
    ]
    prod = assemble_product(factors, vars, RING)
    c = prod.coefficient(vars.unit("Q2"))
    expected = (geometric(2, 20) * geometric(2, 20)).shift(2)
    assert c.eq_to_order(expected, min(c.window, expected.window))[0]


def test_assemble_product_drops_oversized_arguments():
    vars = VarTable(("Q",), 1)
    big = Monomial.from_vars(vars, ["Q", "Q"])
    assert assemble_product([Factor("euler_inv", big)], vars, RING) == MSeries.one(vars, RING)


def test_binomial_factor_integer_exponent():
    vars = one_var(4)
    Q = Monomial.from_vars(vars, ["Q"])
    f = assemble_product([Factor("binomial", Q, 2)], vars, RING)
    x = MSeries.var(vars, RING, "Q")
    one = MSeries.one(vars, RING)
    assert f == (one - x) * (one - x)


def test_compare_reports_witness():
    vars = one_var()
    x = MSeries.var(vars, RING, "Q")
    ok, witness = x.compare(x.scale(2))
    assert not ok and witness == ((1,), 0)


def test_monomial_algebra():
    m = Monomial(-1, (1, 0), 3)
    assert m * m == Monomial(1, (2, 0), 6)
    assert (m**3).sign == -1 and m.degree == 1
    with pytest.raises(ValueError):
        Monomial(2, (0,))


def test_duplicate_variable_names():
    with pytest.raises(ValueError):
        VarTable(("a", "a"), 2)
