"""Exact-rational polynomials in the exponent variables ``t_1..t_N``."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Mapping, Sequence

from .laurent import Coeff, _reduce

Exps = tuple[int, ...]


class TPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exps, Coeff] | None = None):
        self.nvars = nvars
        self.terms: dict[Exps, Coeff] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not match {nvars} variables")
            if c:
                self.terms[e] = _reduce(c)

    @classmethod
    def const(cls, nvars: int, c: Coeff) -> TPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> TPoly:
        """The variable ``t_{i+1}`` (0-based index ``i``)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def is_exact_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> TPoly:
        if isinstance(other, TPoly):
            if other.nvars != self.nvars:
                raise ValueError("mismatched variable counts")
            return other
        if isinstance(other, Rational):
            return TPoly.const(self.nvars, other)
        raise TypeError(f"cannot combine TPoly with {type(other).__name__}")

    def __add__(self, other) -> TPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> TPoly:
        return TPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> TPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> TPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> TPoly:
        if isinstance(other, Rational):
            return TPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict[Exps, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return TPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TPoly:
        if k < 0:
            raise ValueError("TPoly has no inverse")
        result = TPoly.const(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Rational):
            other = TPoly.const(self.nvars, other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def evaluate(self, values: Sequence[Coeff]) -> Coeff:
        total: Coeff = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                term *= v**k
            total += term
        return _reduce(Fraction(total)) if isinstance(total, Fraction) else total

    def falling_binomial(self, k: int) -> TPoly:
        """``binom(self, k) = self (self-1) ... (self-k+1) / k!``."""
        out = TPoly.const(self.nvars, 1)
        for i in range(k):
            out = out * (self - i)
        fact = 1
        for i in range(2, k + 1):
            fact *= i
        return out * Fraction(1, fact)

    def sorted_terms(self) -> list[tuple[Exps, Coeff]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def to_pairs(self) -> list[list]:
        return [[list(e), f"{Fraction(c).numerator}/{Fraction(c).denominator}"] for e, c in self.sorted_terms()]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = ["t"] if self.nvars == 1 else [f"t{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class TPolyRing:
    kind = "t"

    def __init__(self, nvars: int):
        self.nvars = nvars

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TPolyRing) and other.nvars == self.nvars

    def __hash__(self) -> int:
        return hash(("t", self.nvars))

    def __repr__(self) -> str:
        return f"TPolyRing({self.nvars})"

    def zero(self) -> TPoly:
        return TPoly(self.nvars)

    def one(self) -> TPoly:
        return TPoly.const(self.nvars, 1)

    def scalar(self, c: Coeff) -> TPoly:
        return TPoly.const(self.nvars, c)

    def coerce(self, x) -> TPoly:
        if isinstance(x, TPoly):
            if x.nvars != self.nvars:
                raise ValueError("mismatched variable counts")
            return x
        return self.scalar(x)

    def invert(self, x: TPoly) -> TPoly:
        if len(x.terms) == 1 and (0,) * self.nvars in x.terms:
            return TPoly.const(self.nvars, Fraction(1) / x.terms[(0,) * self.nvars])
        raise ArithmeticError("only nonzero constant TPoly values are invertible")
