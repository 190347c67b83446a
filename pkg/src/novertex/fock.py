"""Truncated Fock space on the Schur basis ``|λ⟩``.

Vertex operators act through their skew-Schur expansions; the inverse
operators use the ``w``-involution (conjugate both shapes, negate the
argument). Only the actions on the partition basis are modelled, never the
underlying fermions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .laurent import LaurentRing, LaurentSeries
from .partitions import (
    Partition,
    enumerate_partitions,
    is_horizontal_strip,
    is_vertical_strip,
    partitions_up_to,
    sub_partitions,
)
from .qseries import Monomial, MSeries, VarTable, euler_product, macmahon
from .schur import skew_schur_spec

EMPTY = Partition()


@dataclass(frozen=True)
class GammaAtom:
    """``Γ_{direction}(weight · X)^{eps}`` with ``X = q^ρ`` or a single variable."""

    direction: str
    eps: int
    weight: Monomial
    spec: str = "rho"

    def __post_init__(self) -> None:
        if self.direction not in ("+", "-"):
            raise ValueError("direction must be '+' or '-'")
        if self.eps not in (1, -1):
            raise ValueError("eps must be ±1")
        if self.spec not in ("rho", "single"):
            raise ValueError("spec must be 'rho' or 'single'")


@dataclass(frozen=True)
class EnergyAtom:
    """``monomial^{L_0}``."""

    monomial: Monomial


Atom = Union[GammaAtom, EnergyAtom]


def gamma_minus(weight: Monomial, eps: int = 1, spec: str = "rho") -> GammaAtom:
    return GammaAtom("-", eps, weight, spec)


def gamma_plus(weight: Monomial, eps: int = 1, spec: str = "rho") -> GammaAtom:
    return GammaAtom("+", eps, weight, spec)


class FockState:
    __slots__ = ("vars", "ring", "terms", "size_cap")

    def __init__(self, vars: VarTable, ring: LaurentRing, terms: dict[Partition, MSeries], size_cap: int):
        self.vars = vars
        self.ring = ring
        self.size_cap = size_cap
        self.terms = {lam: c for lam, c in terms.items() if lam.size <= size_cap and c.terms}

    @classmethod
    def basis(cls, lam: Partition, vars: VarTable, ring: LaurentRing, size_cap: int) -> FockState:
        return cls(vars, ring, {lam: MSeries.one(vars, ring)}, size_cap)

    def coefficient(self, lam: Partition) -> MSeries:
        return self.terms.get(lam, MSeries.zero(self.vars, self.ring))

    def scale(self, c: MSeries) -> FockState:
        return FockState(self.vars, self.ring, {lam: x * c for lam, x in self.terms.items()}, self.size_cap)

    def __add__(self, other: FockState) -> FockState:
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return FockState(self.vars, self.ring, out, min(self.size_cap, other.size_cap))

    def compare(self, other: FockState, upto: int | None = None) -> tuple[bool, tuple | None]:
        """Coefficient-wise comparison; ``upto`` defaults to each pair's joint window."""
        for lam in sorted(set(self.terms) | set(other.terms)):
            ok, where = self.coefficient(lam).compare(other.coefficient(lam), upto)
            if not ok:
                return False, (lam, where)
        return True, None

    def certified_window(self) -> int:
        windows = [c.certified_window() for c in self.terms.values()]
        return min(windows) if windows else self.ring.order

    def __repr__(self) -> str:
        return "FockState(" + ", ".join(f"{lam}: {c!r}" for lam, c in sorted(self.terms.items())) + ")"


def _strip_value(outer: Partition, inner: Partition, atom: GammaAtom, M: int) -> LaurentSeries | None:
    """Specialized ``s_{outer/inner}`` (or its ``w``-twist) without the weight power."""
    if atom.spec == "single":
        test = is_horizontal_strip if atom.eps == 1 else is_vertical_strip
        return LaurentSeries.one(M) if test(outer, inner) else None
    if atom.eps == 1:
        v = skew_schur_spec(outer, inner, EMPTY, M)
    else:
        v = skew_schur_spec(outer.conjugate, inner.conjugate, EMPTY, M)
    return None if v.is_exact_zero() else v


def _min_degree(c: MSeries) -> int:
    return min(sum(e) for e in c.terms)


def gamma_apply(state: FockState, atom: GammaAtom) -> FockState:
    vars, ring, M = state.vars, state.ring, state.ring.order
    w = atom.weight
    # the inverse operator carries the w-twist: argument -x
    sign = w.sign if atom.eps == 1 else -w.sign
    out: dict[Partition, MSeries] = {}
    for lam, c in state.terms.items():
        room = vars.D - _min_degree(c)
        if atom.direction == "-":
            max_k = state.size_cap - lam.size
            if w.degree:
                max_k = min(max_k, room // w.degree)
            targets = (
                mu
                for size in range(lam.size, lam.size + max_k + 1)
                for mu in enumerate_partitions(size)
                if mu.contains(lam)
            )
        else:
            targets = (mu for mu in sub_partitions(lam) if w.degree == 0 or (lam.size - mu.size) * w.degree <= room)
        for mu in targets:
            outer, inner = (mu, lam) if atom.direction == "-" else (lam, mu)
            v = _strip_value(outer, inner, atom, M)
            if v is None:
                continue
            k = outer.size - inner.size
            scalar = v.shift(k * w.tau)
            if sign == -1 and k % 2:
                scalar = -scalar
            term = c.shift_exps(tuple(k * x for x in w.exps)).scale(scalar)
            out[mu] = out[mu] + term if mu in out else term
    return FockState(vars, ring, out, state.size_cap)


def energy_apply(state: FockState, mono: Monomial) -> FockState:
    out = {}
    for lam, c in state.terms.items():
        k = lam.size
        scalar = LaurentSeries.monomial(mono.sign**k, k * mono.tau, state.ring.order)
        out[lam] = c.shift_exps(tuple(k * x for x in mono.exps)).scale(scalar)
    return FockState(state.vars, state.ring, out, state.size_cap)


def apply_word(word: Sequence[Atom], state: FockState) -> FockState:
    """Apply ``word`` to a ket; the rightmost atom acts first."""
    for atom in reversed(word):
        if isinstance(atom, EnergyAtom):
            state = energy_apply(state, atom.monomial)
        else:
            state = gamma_apply(state, atom)
    return state


def trace(
    word: Sequence[Atom],
    vars: VarTable,
    ring: LaurentRing,
    pairing: str = "identity",
    size_cap: int | None = None,
) -> MSeries:
    """``Σ_μ ⟨μ|word|μ⟩`` (identity pairing) or ``Σ_μ ⟨μ|word|μ^t⟩`` (conjugate)."""
    if not any(isinstance(a, EnergyAtom) and a.monomial.degree > 0 for a in word):
        raise ValueError("non-truncating trace: the word needs an energy atom of positive degree")
    if pairing not in ("identity", "conjugate"):
        raise ValueError(f"unknown pairing {pairing!r}")
    cap = vars.D if size_cap is None else size_cap
    total = MSeries.zero(vars, ring)
    for mu in partitions_up_to(cap):
        ket = mu if pairing == "identity" else mu.conjugate
        out = apply_word(word, FockState.basis(ket, vars, ring, cap))
        total = total + out.coefficient(mu)
    return total


# product sides of the trace lemmas ------------------------------------------


def _lemma_vars(L: int, D: int) -> VarTable:
    return VarTable(("Q", *(f"x{i}" for i in range(1, L + 1)), *(f"y{i}" for i in range(1, L + 1))), D)


def lemma_word(vars: VarTable, L: int, eps1: Sequence[int], eps2: Sequence[int]) -> list[Atom]:
    word: list[Atom] = [gamma_minus(Monomial.from_vars(vars, [f"x{i + 1}"]), eps1[i]) for i in range(L)]
    word.append(EnergyAtom(Monomial.from_vars(vars, ["Q"])))
    word += [gamma_plus(Monomial.from_vars(vars, [f"y{i + 1}"]), eps2[i]) for i in range(L)]
    return word


def lemma_product(
    vars: VarTable, ring: LaurentRing, L: int, eps1: Sequence[int], eps2: Sequence[int], pairing: str
) -> MSeries:
    """Closed product for the identity-pairing or conjugate-pairing trace."""
    Q = Monomial.from_vars(vars, ["Q"])
    mode = "inv_full" if pairing == "identity" else "odd_plus"
    result = euler_product(Q, vars, ring, mode)
    for i in range(L):
        for k in range(L):
            xy = Monomial.from_vars(vars, [f"x{i + 1}", f"y{k + 1}"])
            j = 0
            while (Q**j * xy).degree <= vars.D:
                arg = Q**j * xy
                e = -eps1[i] * eps2[k]
                if pairing == "conjugate":
                    sigma = 1 if j % 2 else -1
                    arg = arg.with_sign(sigma)
                    e *= sigma
                result = result * macmahon(arg, vars, ring, e)
                j += 1
    return result


@dataclass
class LemmaResult:
    L: int
    eps1: tuple[int, ...]
    eps2: tuple[int, ...]
    pairing: str
    ok: bool
    window: int
    witness: tuple | None = None


def check_trace_lemma(L: int, eps1: Sequence[int], eps2: Sequence[int], D: int, M: int, pairing: str) -> LemmaResult:
    vars = _lemma_vars(L, D)
    ring = LaurentRing(M)
    lhs = trace(lemma_word(vars, L, eps1, eps2), vars, ring, pairing)
    rhs = lemma_product(vars, ring, L, eps1, eps2, pairing)
    window = min(lhs.certified_window(), rhs.certified_window())
    ok, witness = lhs.compare(rhs, window)
    return LemmaResult(L, tuple(eps1), tuple(eps2), pairing, ok, window, witness)


# commutation relations -------------------------------------------------------


@dataclass
class CommutationResult:
    relation: str
    ket: Partition
    ok: bool
    window: int
    witness: tuple | None = None


def commutation_checks(kets: Iterable[Partition], D: int, M: int) -> list[CommutationResult]:
    """Check the Γ₊Γ₋ exchange and ``q^{L_0}`` shift relations on each ket.

    Single-variable operators test the literal relations; ``q^ρ`` arguments test
    the form they take after the product over ``ρ`` (``1/(1-zw)`` becomes
    ``M(zw;q)^{-1}``).

    The working order is raised by ``2(|λ| + D)`` per ket, the most the
    ``q^{L_0}`` factor can shift, and every relation is certified through ``τ^M``.
    """
    vars = VarTable(("z", "w"), D)
    z = Monomial.from_vars(vars, ["z"])
    w = Monomial.from_vars(vars, ["w"])
    zw = z * w
    q_energy = EnergyAtom(Monomial(1, vars.zero_exps(), tau=-2))
    results = []
    for lam in kets:
        cap = lam.size + D
        ring = LaurentRing(M + 2 * cap)
        one_minus_zw_inv = (MSeries.one(vars, ring) - MSeries.monomial(vars, ring, zw)).invert()
        mac_inv = macmahon(zw, vars, ring, -1)
        ket = FockState.basis(lam, vars, ring, cap)

        def run(word, scale=None):
            s = apply_word(word, ket)
            return s.scale(scale) if scale is not None else s

        cases = []
        for spec, factor in (("single", one_minus_zw_inv), ("rho", mac_inv)):
            for e1, e2 in ((1, 1), (-1, -1), (1, -1), (-1, 1)):
                lhs = run([gamma_plus(z, e1, spec), gamma_minus(w, e2, spec)])
                # exchanging Γ₊(z)^a and Γ₋(w)^b costs the factor to the power a·b
                f = factor if e1 * e2 == 1 else factor.invert()
                rhs = run([gamma_minus(w, e2, spec), gamma_plus(z, e1, spec)], f)
                cases.append((f"G+G-[{spec},{e1:+d},{e2:+d}]", lhs, rhs))
            lhs = run([q_energy, gamma_plus(z, 1, spec)])
            rhs = run([gamma_plus(z.with_tau(2), 1, spec), q_energy])
            cases.append((f"qL0G+[{spec}]", lhs, rhs))
            lhs = run([q_energy, gamma_minus(z, 1, spec)])
            rhs = run([gamma_minus(z.with_tau(-2), 1, spec), q_energy])
            cases.append((f"qL0G-[{spec}]", lhs, rhs))
            # Γ₋(z)^{-1} Γ₋(z) = 1
            back = run([gamma_minus(z, -1, spec), gamma_minus(z, 1, spec)])
            cases.append((f"G-inv[{spec}]", back, ket))
        for name, lhs, rhs in cases:
            window = min(lhs.certified_window(), rhs.certified_window(), M)
            ok, witness = lhs.compare(rhs, window)
            results.append(CommutationResult(name, lam, ok, window, witness))
    return results


def check_commutation(size_cap: int, D: int, M: int) -> bool:
    """All relations of :func:`commutation_checks` on every ket with ``|λ| ≤ size_cap - D``."""
    kets = list(partitions_up_to(max(size_cap - D, 0)))
    return all(r.ok for r in commutation_checks(kets, D, M))
