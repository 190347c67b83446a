from itertools import product

import pytest

from novertex.fock import (
    EnergyAtom,
    FockState,
    GammaAtom,
    _lemma_vars,
    apply_word,
    check_commutation,
    check_trace_lemma,
    commutation_checks,
    gamma_minus,
    gamma_plus,
    lemma_product,
    lemma_word,
    trace,
)
from novertex.laurent import LaurentRing
from novertex.partitions import EMPTY, Partition, enumerate_partitions
from novertex.qseries import Monomial, VarTable

RING = LaurentRing(12)


def q_only(D: int) -> tuple[VarTable, Monomial]:
    vars = VarTable(("Q",), D)
    return vars, Monomial.from_vars(vars, ["Q"])


def test_trace_of_energy_counts_partitions():
    vars, Q = q_only(8)
    tr = trace([EnergyAtom(Q)], vars, RING)
    assert [tr.coefficient((n,)) for n in range(9)] == [RING.scalar(len(enumerate_partitions(n))) for n in range(9)]


def test_conjugate_trace_counts_self_conjugate_partitions():
    vars, Q = q_only(9)
    tr = trace([EnergyAtom(Q)], vars, RING, "conjugate")
    # self-conjugate partitions are equinumerous with partitions into distinct odd parts
    expected = [sum(1 for p in enumerate_partitions(n) if p == p.conjugate) for n in range(10)]
    assert expected == [1, 1, 0, 1, 1, 1, 1, 1, 2, 2]
    assert [tr.coefficient((n,)) for n in range(10)] == [RING.scalar(c) for c in expected]


def test_non_truncating_trace():
    vars, Q = q_only(3)
    with pytest.raises(ValueError, match="non-truncating"):
        trace([gamma_minus(Q)], vars, RING)


def test_unknown_pairing():
    vars, Q = q_only(3)
    with pytest.raises(ValueError):
        trace([EnergyAtom(Q)], vars, RING, "diagonal")


def test_atom_validation():
    _, Q = q_only(1)
    with pytest.raises(ValueError):
        GammaAtom("*", 1, Q)
    with pytest.raises(ValueError):
        GammaAtom("+", 2, Q)
    with pytest.raises(ValueError):
        GammaAtom("+", 1, Q, "plancherel")


def test_single_variable_gamma_minus_on_vacuum():
    vars, x = q_only(4)
    out = apply_word([gamma_minus(x, 1, "single")], FockState.basis(EMPTY, vars, RING, 4))
    assert set(out.terms) == {Partition.of(*([k] if k else [])) for k in range(5)}
    assert out.coefficient(Partition.of(3)).coefficient((3,)) == RING.one()


def test_single_variable_inverse_uses_vertical_strips():
    vars, x = q_only(3)
    out = apply_word([gamma_minus(x, -1, "single")], FockState.basis(EMPTY, vars, RING, 3))
    assert out.coefficient(Partition.of(1, 1)).coefficient((2,)) == RING.one()
    assert out.coefficient(Partition.of(1)).coefficient((1,)) == RING.scalar(-1)
    assert out.coefficient(Partition.of(2)).terms == {}


def test_gamma_plus_annihilates_vacuum():
    vars, x = q_only(3)
    vac = FockState.basis(EMPTY, vars, RING, 3)
    assert apply_word([gamma_plus(x)], vac).compare(vac)[0]


@pytest.mark.parametrize("pairing", ["identity", "conjugate"])
@pytest.mark.parametrize("signs", list(product((1, -1), repeat=2)))
def test_single_pair_lemma(pairing, signs):
    r = check_trace_lemma(1, signs[:1], signs[1:], 4, 12, pairing)
    assert r.ok, r
    assert r.window > 0


@pytest.mark.parametrize("signs", [(1, 1, 1, 1), (1, -1, -1, 1), (-1, -1, 1, -1)])
def test_two_pair_lemma(signs):
    assert check_trace_lemma(2, signs[:2], signs[2:], 3, 12, "identity").ok


def test_mutated_product_is_rejected():
    vars = _lemma_vars(1, 3)
    ring = LaurentRing(12)
    lhs = trace(lemma_word(vars, 1, (1,), (1,)), vars, ring)
    assert lhs.compare(lemma_product(vars, ring, 1, (1,), (1,), "identity"))[0]
    wrong = lemma_product(vars, ring, 1, (-1,), (1,), "identity")
    ok, witness = lhs.compare(wrong)
    assert not ok and witness is not None


def test_mutated_conjugate_product_is_rejected():
    vars = _lemma_vars(1, 3)
    ring = LaurentRing(12)
    lhs = trace(lemma_word(vars, 1, (1,), (1,)), vars, ring, "conjugate")
    assert not lhs.compare(lemma_product(vars, ring, 1, (1,), (1,), "identity"))[0]


def test_commutation_relations():
    results = commutation_checks([EMPTY, Partition.of(1), Partition.of(2, 1)], 3, 10)
    assert all(r.ok for r in results), [r for r in results if not r.ok]
    assert min(r.window for r in results) == 10
    relations = {r.relation for r in results}
    assert "G-inv[rho]" in relations and "qL0G+[single]" in relations


def test_check_commutation_driver():
    assert check_commutation(4, 2, 8)
