"""Truncated Laurent series in ``τ = q^{-1/2}`` with exact rational coefficients.

Every series carries two bounds:

* ``order`` (``M``): the storage cap. Exponents above ``M`` are never stored.
* ``prec``: exponents strictly below ``prec`` are known exactly. ``None`` means
  the stored terms are the whole value (an exact Laurent polynomial).

Coefficients at exponents ``>= prec`` are unknown and are not stored. Products
propagate precision the way a valuation does, so a factor with a large negative
lowest exponent visibly shrinks the certified window instead of silently
corrupting it.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

Coeff = int | Fraction


def _min_prec(*ps: int | None) -> int | None:
    known = [p for p in ps if p is not None]
    return min(known) if known else None


def _reduce(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div(c: Coeff, d: Coeff) -> Coeff:
    if isinstance(c, int) and isinstance(d, int):
        if d in (1, -1):
            return c * d
        q, r = divmod(c, d)
        if r == 0:
            return q
    return _reduce(Fraction(c) / d)


class NonInvertibleError(ArithmeticError):
    pass


class LaurentSeries:
    __slots__ = ("lo", "coeffs", "order", "prec")

    lo: int
    coeffs: tuple[Coeff, ...]
    order: int
    prec: int | None

    def __init__(self, lo: int, coeffs: Iterable[Coeff], order: int, prec: int | None = None):
        coeffs = list(coeffs)
        if prec is not None and prec > order + 1:
            prec = order + 1
        top = order if prec is None else min(order, prec - 1)
        keep = top - lo + 1
        if keep < len(coeffs):
            if prec is None and any(coeffs[max(keep, 0):]):
                prec = order + 1
            coeffs = coeffs[: max(keep, 0)]
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        end = len(coeffs)
        while end > start and not coeffs[end - 1]:
            end -= 1
        self.lo = lo + start if start < end else 0
        self.coeffs = tuple(coeffs[start:end])
        self.order = order
        self.prec = prec

    # construction -------------------------------------------------------------

    @classmethod
    def zero(cls, order: int, prec: int | None = None) -> LaurentSeries:
        return cls(0, (), order, prec)

    @classmethod
    def one(cls, order: int) -> LaurentSeries:
        return cls.monomial(1, 0, order)

    @classmethod
    def monomial(cls, c: Coeff, e: int, order: int) -> LaurentSeries:
        return cls(e, (c,), order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, Coeff], order: int, prec: int | None = None) -> LaurentSeries:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls.zero(order, prec)
        lo, hi = min(terms), max(terms)
        return cls(lo, (terms.get(e, 0) for e in range(lo, hi + 1)), order, prec)

    # inspection ---------------------------------------------------------------

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def is_exact_zero(self) -> bool:
        return not self.coeffs and self.prec is None

    def is_zero_to_precision(self) -> bool:
        return not self.coeffs

    def is_exact(self) -> bool:
        return self.prec is None

    def valuation(self) -> int | None:
        """Lowest exponent that may be nonzero; ``None`` for the exact zero."""
        if self.coeffs:
            return self.lo
        return self.prec

    @property
    def window(self) -> int:
        """Largest exponent whose coefficient is certified exact."""
        return self.order if self.prec is None else self.prec - 1

    def __getitem__(self, e: int) -> Coeff:
        if self.prec is not None and e >= self.prec:
            raise IndexError(f"coefficient of τ^{e} is beyond the certified window (prec {self.prec})")
        if e > self.order:
            raise IndexError(f"τ^{e} is beyond the truncation order {self.order}")
        i = e - self.lo
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self) -> list[tuple[int, Coeff]]:
        return [(self.lo + i, c) for i, c in enumerate(self.coeffs) if c]

    def with_order(self, order: int) -> LaurentSeries:
        return LaurentSeries(self.lo, self.coeffs, order, self.prec)

    def cap_precision(self, prec: int) -> LaurentSeries:
        return LaurentSeries(self.lo, self.coeffs, self.order, _min_prec(self.prec, prec))

    # arithmetic ---------------------------------------------------------------

    def _check(self, other: LaurentSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"mismatched truncation orders {self.order} and {other.order}")

    def __add__(self, other: LaurentSeries | Coeff) -> LaurentSeries:
        if not isinstance(other, LaurentSeries):
            if not isinstance(other, Rational):
                return NotImplemented
            other = LaurentSeries.monomial(other, 0, self.order)
        self._check(other)
        if not other.coeffs and other.prec is None:
            return self
        if not self.coeffs and self.prec is None:
            return other
        prec = _min_prec(self.prec, other.prec)
        if not self.coeffs:
            return LaurentSeries(other.lo, other.coeffs, self.order, prec)
        if not other.coeffs:
            return LaurentSeries(self.lo, self.coeffs, self.order, prec)
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs, self.lo - lo):
            out[i] = c
        for i, c in enumerate(other.coeffs, other.lo - lo):
            out[i] += c
        return LaurentSeries(lo, out, self.order, prec)

    __radd__ = __add__

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.lo, (-c for c in self.coeffs), self.order, self.prec)

    def __sub__(self, other: LaurentSeries | Coeff) -> LaurentSeries:
        return self + (-other)

    def __rsub__(self, other: Coeff) -> LaurentSeries:
        return (-self) + other

    def scale(self, c: Coeff) -> LaurentSeries:
        if not c:
            return LaurentSeries.zero(self.order)
        if c == 1:
            return self
        return LaurentSeries(self.lo, (c * x for x in self.coeffs), self.order, self.prec)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by ``τ^k`` exactly."""
        prec = None if self.prec is None else self.prec + k
        return LaurentSeries(self.lo + k, self.coeffs, self.order, prec)

    def __mul__(self, other: LaurentSeries | Coeff) -> LaurentSeries:
        if not isinstance(other, LaurentSeries):
            if not isinstance(other, Rational):
                return NotImplemented
            return self.scale(other)
        self._check(other)
        va, vb = self.valuation(), other.valuation()
        if va is None or vb is None:
            return LaurentSeries.zero(self.order)
        prec = _min_prec(
            None if self.prec is None else self.prec + vb,
            None if other.prec is None else other.prec + va,
        )
        if len(other.coeffs) == 1 and other.prec is None:
            return LaurentSeries(self.lo + other.lo, (c * other.coeffs[0] for c in self.coeffs), self.order, prec)
        if len(self.coeffs) == 1 and self.prec is None:
            return LaurentSeries(self.lo + other.lo, (self.coeffs[0] * c for c in other.coeffs), self.order, prec)
        top = self.order if prec is None else min(self.order, prec - 1)
        lo = self.lo + other.lo
        n = top - lo + 1
        if n <= 0 or not self.coeffs or not other.coeffs:
            if prec is None and self.coeffs and other.coeffs:
                prec = self.order + 1
            return LaurentSeries.zero(self.order, prec)
        if prec is None and len(self.coeffs) + len(other.coeffs) - 1 > n:
            prec = self.order + 1
        out = [0] * n
        b_nz = [(j, c) for j, c in enumerate(other.coeffs[:n]) if c]
        for i, a in enumerate(self.coeffs[:n]):
            if not a:
                continue
            lim = n - i
            for j, b in b_nz:
                if j >= lim:
                    break
                out[i + j] += a * b
        return LaurentSeries(lo, out, self.order, prec)

    __rmul__ = __mul__

    def invert(self) -> LaurentSeries:
        if not self.coeffs:
            raise NonInvertibleError("non-invertible: series is zero within its known window")
        lo = -self.lo
        c0 = self.coeffs[0]
        if len(self.coeffs) == 1 and self.prec is None:
            return LaurentSeries(lo, (_div(1, c0),), self.order)
        prec = self.order + 1 if self.prec is None else self.prec - 2 * self.lo
        top = min(self.order, prec - 1)
        n = top - lo + 1
        if n <= 0:
            return LaurentSeries.zero(self.order, prec)
        a = self.coeffs
        out: list[Coeff] = [_div(1, c0)]
        for k in range(1, n):
            acc = 0
            for i in range(1, min(k, len(a) - 1) + 1):
                if a[i]:
                    acc += a[i] * out[k - i]
            out.append(_div(-acc, c0))
        return LaurentSeries(lo, out, self.order, prec)

    def __truediv__(self, other: LaurentSeries | Coeff) -> LaurentSeries:
        if isinstance(other, LaurentSeries):
            return self * other.invert()
        return self.scale(_div(1, other))

    def __pow__(self, k: int) -> LaurentSeries:
        if k < 0:
            return self.invert() ** (-k)
        result = LaurentSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison ---------------------------------------------------------------

    def eq_to_order(self, other: LaurentSeries, upto: int) -> tuple[bool, int | None]:
        """Compare coefficients for all exponents ``<= upto``.

        Returns ``(True, None)`` on agreement, otherwise ``(False, e)`` with the
        first exponent where the two differ.
        """
        if upto > self.window or upto > other.window:
            raise ValueError(
                f"cannot certify comparison up to τ^{upto}: windows are {self.window} and {other.window}"
            )
        exps = {e for e, _ in self.terms()} | {e for e, _ in other.terms()}
        for e in sorted(exps):
            if e > upto:
                break
            if self[e] != other[e]:
                return False, e
        return True, None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Rational):
            other = LaurentSeries.monomial(other, 0, self.order) if other else LaurentSeries.zero(self.order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.lo == other.lo
            and self.coeffs == other.coeffs
            and self.order == other.order
            and self.prec == other.prec
        )

    def __hash__(self) -> int:
        return hash((self.lo, self.coeffs, self.order, self.prec))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})τ^{e}" for e, c in self.terms()) or "0"
        tail = "" if self.prec is None else f" + O(τ^{self.prec})"
        return f"<{body}{tail}; M={self.order}>"

    def to_pairs(self) -> list[list]:
        return [[e, f"{Fraction(c).numerator}/{Fraction(c).denominator}"] for e, c in self.terms()]


class LaurentRing:
    """Coefficient ring handle used by multivariate series in q-mode."""

    kind = "q"

    def __init__(self, order: int):
        self.order = order

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentRing) and other.order == self.order

    def __hash__(self) -> int:
        return hash(("q", self.order))

    def __repr__(self) -> str:
        return f"LaurentRing(M={self.order})"

    def zero(self) -> LaurentSeries:
        return LaurentSeries.zero(self.order)

    def one(self) -> LaurentSeries:
        return LaurentSeries.one(self.order)

    def scalar(self, c: Coeff) -> LaurentSeries:
        return LaurentSeries.monomial(c, 0, self.order) if c else self.zero()

    def monomial(self, c: Coeff, e: int) -> LaurentSeries:
        return LaurentSeries.monomial(c, e, self.order)

    def coerce(self, x) -> LaurentSeries:
        if isinstance(x, LaurentSeries):
            if x.order != self.order:
                raise ValueError(f"coefficient has order {x.order}, ring expects {self.order}")
            return x
        return self.scalar(x)

    def invert(self, x: LaurentSeries) -> LaurentSeries:
        return x.invert()


def geometric(step: int, order: int) -> LaurentSeries:
    """``1/(1 - τ^step)`` for ``step >= 1``."""
    return LaurentSeries(0, (1 if i % step == 0 else 0 for i in range(order + 1)), order, order + 1)


def inv_one_minus(step: int, order: int, power: int = 1) -> LaurentSeries:
    """``(1 - τ^step)^(-power)``, expanded by the negative binomial series."""
    if power == 1:
        return geometric(step, order)
    out = [0] * (order + 1)
    c = 1
    for k in range(order // step + 1):
        out[k * step] = c
        c = c * (power + k) // (k + 1)
    return LaurentSeries(0, out, order, order + 1)
