"""Sparse multivariate power series truncated by total degree.

Coefficients live in one of two rings: :class:`~novertex.laurent.LaurentRing`
(q-mode, coefficients are truncated Laurent series in ``τ``) or
:class:`~novertex.tpoly.TPolyRing` (t-mode, coefficients are polynomials in the
symbolic exponents ``t_i``). The two are never mixed.

Product builders (:func:`macmahon`, :func:`euler_product`, :func:`pow_binomial`)
all work the same way: expand the factor as a univariate series in a single
signed monomial ``u`` and substitute, so the cost depends on how many powers of
``u`` fit under the degree cap rather than on the number of variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .laurent import Coeff, LaurentRing, LaurentSeries
from .tpoly import TPoly, TPolyRing

Exps = tuple[int, ...]
Ring = Union[LaurentRing, TPolyRing]


@dataclass(frozen=True)
class VarTable:
    names: tuple[str, ...]
    D: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if self.D < 0:
            raise ValueError("degree cap must be non-negative")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def exps(self, **powers: int) -> Exps:
        e = [0] * len(self.names)
        for name, k in powers.items():
            e[self.index(name)] += k
        return tuple(e)

    def unit(self, name: str) -> Exps:
        return self.exps(**{name: 1})

    def zero_exps(self) -> Exps:
        return (0,) * len(self.names)

    def format(self, exps: Exps) -> str:
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, exps) if k)
        return mono or "1"


@dataclass(frozen=True)
class Monomial:
    """``sign * x^exps * τ^tau``; ``tau`` lets vertex-operator weights carry q-powers."""

    sign: int
    exps: Exps
    tau: int = 0

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be ±1")
        object.__setattr__(self, "exps", tuple(self.exps))

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(
            self.sign * other.sign,
            tuple(a + b for a, b in zip(self.exps, other.exps)),
            self.tau + other.tau,
        )

    def __neg__(self) -> Monomial:
        return Monomial(-self.sign, self.exps, self.tau)

    def __pow__(self, k: int) -> Monomial:
        if k < 0:
            raise ValueError("negative powers of monomials are not in the ring")
        return Monomial(self.sign**k, tuple(k * a for a in self.exps), k * self.tau)

    def with_sign(self, sign: int) -> Monomial:
        return Monomial(self.sign * sign, self.exps, self.tau)

    def with_tau(self, tau: int) -> Monomial:
        return Monomial(self.sign, self.exps, self.tau + tau)

    @classmethod
    def one(cls, nvars: int) -> Monomial:
        return cls(1, (0,) * nvars)

    @classmethod
    def from_vars(cls, table: VarTable, names: Iterable[str], sign: int = 1) -> Monomial:
        e = [0] * len(table)
        for n in names:
            e[table.index(n)] += 1
        return cls(sign, tuple(e))


def _add_exps(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


class MSeries:
    """Truncated multivariate series ``Σ c_α x^α`` with ``|α| <= D``."""

    __slots__ = ("vars", "ring", "terms")

    def __init__(self, vars: VarTable, ring: Ring, terms: Mapping[Exps, object] | None = None):
        self.vars = vars
        self.ring = ring
        self.terms: dict[Exps, object] = {}
        for e, c in (terms or {}).items():
            if sum(e) > vars.D:
                continue
            c = ring.coerce(c)
            if not c.is_exact_zero():
                self.terms[e] = c

    # construction -------------------------------------------------------------

    @classmethod
    def zero(cls, vars: VarTable, ring: Ring) -> MSeries:
        return cls(vars, ring)

    @classmethod
    def one(cls, vars: VarTable, ring: Ring) -> MSeries:
        return cls(vars, ring, {vars.zero_exps(): ring.one()})

    @classmethod
    def const(cls, vars: VarTable, ring: Ring, c) -> MSeries:
        return cls(vars, ring, {vars.zero_exps(): c})

    @classmethod
    def monomial(cls, vars: VarTable, ring: Ring, mono: Monomial, coeff=None) -> MSeries:
        c = _mono_coeff(ring, mono.sign, mono.tau)
        if coeff is not None:
            c = c * ring.coerce(coeff)
        return cls(vars, ring, {mono.exps: c})

    @classmethod
    def var(cls, vars: VarTable, ring: Ring, name: str) -> MSeries:
        return cls(vars, ring, {vars.unit(name): ring.one()})

    # inspection ---------------------------------------------------------------

    def coefficient(self, exps: Exps):
        return self.terms.get(tuple(exps), self.ring.zero())

    def __getitem__(self, exps: Exps):
        return self.coefficient(exps)

    def constant_term(self):
        return self.coefficient(self.vars.zero_exps())

    def sorted_items(self) -> list[tuple[Exps, object]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))

    def certified_window(self) -> int | None:
        """Smallest τ-window certified across coefficients (q-mode only)."""
        if self.ring.kind != "q":
            return None
        windows = [c.window for c in self.terms.values()]
        return min(windows) if windows else self.ring.order

    def min_valuation(self) -> int | None:
        if self.ring.kind != "q":
            return None
        vals = [c.valuation() for c in self.terms.values() if c.valuation() is not None]
        return min(vals) if vals else None

    def _check(self, other: MSeries) -> None:
        if self.vars != other.vars:
            raise ValueError("series over different variable tables")
        if self.ring != other.ring:
            raise ValueError(f"mixing coefficient rings {self.ring} and {other.ring}")

    # arithmetic ---------------------------------------------------------------

    def __add__(self, other: MSeries) -> MSeries:
        if not isinstance(other, MSeries):
            other = MSeries.const(self.vars, self.ring, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MSeries(self.vars, self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> MSeries:
        return MSeries(self.vars, self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MSeries) -> MSeries:
        return self + (-other)

    def __rsub__(self, other) -> MSeries:
        return (-self) + other

    def scale(self, c) -> MSeries:
        c = self.ring.coerce(c)
        return MSeries(self.vars, self.ring, {e: x * c for e, x in self.terms.items()})

    def shift_exps(self, exps: Exps) -> MSeries:
        """Multiply by the monomial ``x^exps`` (no sign, no τ)."""
        return MSeries(self.vars, self.ring, {_add_exps(e, exps): c for e, c in self.terms.items()})

    def __mul__(self, other) -> MSeries:
        if not isinstance(other, MSeries):
            return self.scale(other)
        self._check(other)
        D = self.vars.D
        out: dict[Exps, object] = {}
        right = [(e, sum(e), c) for e, c in other.terms.items()]
        for ea, ca in self.terms.items():
            da = sum(ea)
            for eb, db, cb in right:
                if da + db > D:
                    continue
                e = _add_exps(ea, eb)
                prod = ca * cb
                out[e] = out[e] + prod if e in out else prod
        return MSeries(self.vars, self.ring, out)

    __rmul__ = __mul__

    def invert(self) -> MSeries:
        """Multiplicative inverse; the constant term must be a unit of the ring."""
        zero = self.vars.zero_exps()
        c0 = self.terms.get(zero)
        if c0 is None:
            raise ArithmeticError("constant term is zero; series is not invertible")
        inv_c0 = self.ring.invert(c0)
        rest = [(e, c) for e, c in self.terms.items() if e != zero]
        result: dict[Exps, object] = {zero: inv_c0}
        for target in _exps_by_degree(len(self.vars), self.vars.D, start=1):
            acc = None
            for e, c in rest:
                other = tuple(t - x for t, x in zip(target, e))
                if min(other) < 0:
                    continue
                b = result.get(other)
                if b is None:
                    continue
                acc = c * b if acc is None else acc + c * b
            if acc is not None:
                val = -(acc * inv_c0)
                if not val.is_exact_zero():
                    result[target] = val
        return MSeries(self.vars, self.ring, result)

    def pow_int(self, k: int) -> MSeries:
        if k < 0:
            return self.invert().pow_int(-k)
        result = MSeries.one(self.vars, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    __pow__ = pow_int

    # comparison ---------------------------------------------------------------

    def compare(self, other: MSeries, upto: int | None = None) -> tuple[bool, tuple | None]:
        """Exact coefficient-wise comparison.

        q-mode compares τ-exponents ``<= upto`` (default: the jointly certified
        window). Returns ``(True, None)`` or ``(False, (exps, τ-exponent or None))``.
        """
        self._check(other)
        if self.ring.kind == "q" and upto is None:
            upto = min(self.certified_window(), other.certified_window())
        keys = sorted(set(self.terms) | set(other.terms), key=lambda e: (sum(e), tuple(-x for x in e)))
        for e in keys:
            a, b = self.coefficient(e), other.coefficient(e)
            if self.ring.kind == "q":
                ok, where = a.eq_to_order(b, upto)
                if not ok:
                    return False, (e, where)
            elif a != b:
                return False, (e, None)
        return True, None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MSeries):
            return NotImplemented
        return self.vars == other.vars and self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, self.ring, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"[{c!r}]·{self.vars.format(e)}" for e, c in self.sorted_items()) or "0"
        return f"MSeries({body}; D={self.vars.D})"


def _exps_by_degree(nvars: int, D: int, start: int = 0) -> Iterator[Exps]:
    """All exponent vectors of total degree ``start..D``, graded."""

    def rec(n: int, total: int) -> Iterator[Exps]:
        if n == 1:
            yield (total,)
            return
        for k in range(total, -1, -1):
            for rest in rec(n - 1, total - k):
                yield (k, *rest)

    if nvars == 0:
        if start == 0:
            yield ()
        return
    for d in range(start, D + 1):
        yield from rec(nvars, d)


def _mono_coeff(ring: Ring, sign: int, tau: int):
    if ring.kind == "q":
        return ring.monomial(sign, tau)
    if tau:
        raise ValueError("τ-shifted monomials are not defined in t-mode")
    return ring.scalar(sign)


# univariate machinery --------------------------------------------------------
#
# A univariate series is a list ``[c_0, c_1, ..., c_K]`` of ring elements,
# standing for Σ c_k u^k truncated at u-degree K.


def _uni_mul(a: Sequence, b: Sequence, K: int, ring: Ring) -> list:
    out = [ring.zero() for _ in range(K + 1)]
    for i, x in enumerate(a):
        if x.is_exact_zero():
            continue
        for j, y in enumerate(b[: K + 1 - i]):
            if y.is_exact_zero():
                continue
            out[i + j] = out[i + j] + x * y
    return out


def _uni_invert(a: Sequence, K: int, ring: Ring) -> list:
    inv0 = ring.invert(a[0])
    out = [inv0]
    for k in range(1, K + 1):
        acc = ring.zero()
        for i in range(1, min(k, len(a) - 1) + 1):
            if not a[i].is_exact_zero():
                acc = acc + a[i] * out[k - i]
        out.append(-(acc * inv0))
    return out


def _uni_pow(a: Sequence, e: int, K: int, ring: Ring) -> list:
    if e < 0:
        a = _uni_invert(a, K, ring)
        e = -e
    result = [ring.one()] + [ring.zero() for _ in range(K)]
    for _ in range(e):
        result = _uni_mul(result, a, K, ring)
    return result


def _substitute(uni: Sequence, u: Monomial, vars: VarTable, ring: Ring) -> MSeries:
    """Replace ``u`` by the signed, τ-shifted monomial ``u``."""
    terms = {}
    for k, c in enumerate(uni):
        if c.is_exact_zero():
            continue
        mono = u**k
        terms[mono.exps] = c * _mono_coeff(ring, mono.sign, mono.tau)
    return MSeries(vars, ring, terms)


def _degree_room(u: Monomial, D: int, what: str) -> int:
    if u.degree <= 0:
        raise ValueError(f"non-truncating product: {what} argument has degree {u.degree}")
    return D // u.degree


@lru_cache(maxsize=None)
def _macmahon_uni(K: int, M: int, shift: int, exponent: int) -> tuple[LaurentSeries, ...]:
    """``M(u τ^{2 shift}; q)^exponent = Π_{n>=1} (1 - u τ^{2(n+shift)})^{n·exponent}`` in u."""
    ring = LaurentRing(M)
    acc = [ring.one()] + [ring.zero() for _ in range(K)]
    # every further factor moves a u^k coefficient by at least this many τ-powers
    slack = (K - 1) * min(0, 2 * (1 + shift)) if K > 1 else 0
    n = 1
    while 2 * (n + shift) + slack <= M:
        step = 2 * (n + shift)
        factor = [ring.monomial((-1) ** k * comb(n, k), k * step) for k in range(min(n, K) + 1)]
        factor += [ring.zero() for _ in range(K + 1 - len(factor))]
        acc = _uni_mul(acc, factor, K, ring)
        n += 1
    # the omitted tail only touches τ-exponents above M in every u^k, k >= 1
    acc = [acc[0]] + [c.cap_precision(M + 1) for c in acc[1:]]
    if exponent != 1:
        acc = _uni_pow(acc, exponent, K, ring)
    return tuple(acc)


def macmahon(
    z: Monomial, vars: VarTable, ring: LaurentRing, exponent: int = 1, laurent_shift: int = 0
) -> MSeries:
    """``M(z τ^{2·shift}; q)^exponent`` with ``M(z;q) = Π_{n>=1} (1 - z q^{-n})^n``."""
    if ring.kind != "q":
        raise ValueError("MacMahon factors are q-mode only")
    K = _degree_room(z, vars.D, "MacMahon")
    uni = _macmahon_uni(K, ring.order, laurent_shift, exponent)
    return _substitute(uni, z, vars, ring)


@lru_cache(maxsize=None)
def _euler_counts(K: int, mode: str) -> tuple[int, ...]:
    counts = [1] + [0] * K
    if mode == "inv_full":
        for n in range(1, K + 1):
            for k in range(n, K + 1):
                counts[k] += counts[k - n]
    elif mode == "odd_plus":
        for n in range(1, K + 1, 2):
            for k in range(K, n - 1, -1):
                counts[k] += counts[k - n]
    else:
        raise ValueError(f"unknown Euler product mode {mode!r}")
    return tuple(counts)


def euler_product(u: Monomial, vars: VarTable, ring: Ring, mode: str = "inv_full") -> MSeries:
    """``Π(1-u^n)^{-1}`` (``inv_full``) or ``Π(1+u^{2n-1})`` (``odd_plus``)."""
    K = _degree_room(u, vars.D, "Euler")
    uni = [ring.scalar(c) for c in _euler_counts(K, mode)]
    return _substitute(uni, u, vars, ring)


euler_inv = euler_product


def pow_binomial(base: MSeries, T: TPoly) -> MSeries:
    """``base^T = Σ_k binom(T, k) (base - 1)^k`` for a t-mode series with constant term 1."""
    if base.ring.kind != "t":
        raise ValueError("symbolic exponents require t-mode coefficients")
    if base.constant_term() != base.ring.one():
        raise ValueError("pow_binomial needs a constant term of exactly 1")
    r = base - MSeries.one(base.vars, base.ring)
    result = MSeries.one(base.vars, base.ring)
    power = MSeries.one(base.vars, base.ring)
    for k in range(1, base.vars.D + 1):
        power = power * r
        if not power.terms:
            break
        result = result + power.scale(T.falling_binomial(k))
    return result


@dataclass(frozen=True)
class Factor:
    """One factor of an infinite product.

    ``kind`` is ``macmahon`` (``M(arg;q)^exponent``), ``binomial``
    (``(1 - arg)^exponent``, exponent an int or a TPoly), ``euler_inv`` or
    ``odd_plus``.
    """

    kind: str
    arg: Monomial
    exponent: int | TPoly = 1
    shift: int = 0


def factor_series(f: Factor, vars: VarTable, ring: Ring) -> MSeries | None:
    if f.arg.degree > vars.D:
        return None
    if f.kind == "macmahon":
        return macmahon(f.arg, vars, ring, f.exponent, f.shift)
    if f.kind in ("euler_inv", "inv_full"):
        return euler_product(f.arg, vars, ring, "inv_full")
    if f.kind == "odd_plus":
        return euler_product(f.arg, vars, ring, "odd_plus")
    if f.kind == "binomial":
        K = _degree_room(f.arg, vars.D, "binomial")
        if isinstance(f.exponent, TPoly):
            one_minus = MSeries.one(vars, ring) - MSeries.monomial(vars, ring, f.arg)
            return pow_binomial(one_minus, f.exponent)
        uni = [ring.one(), ring.scalar(-1)] + [ring.zero() for _ in range(max(K - 1, 0))]
        return _substitute(_uni_pow(uni[: K + 1], f.exponent, K, ring), f.arg, vars, ring)
    raise ValueError(f"unknown factor kind {f.kind!r}")


def assemble_product(factors: Iterable[Factor], vars: VarTable, ring: Ring) -> MSeries:
    """Exact truncated product of all factors; arguments above the degree cap are 1."""
    result = MSeries.one(vars, ring)
    for f in factors:
        s = factor_series(f, vars, ring)
        if s is not None:
            result = result * s
    return result
