"""Exact truncated power series in q over the integers.

Everything here is computed modulo q^(N+1) for a caller-chosen truncation
order N, with arbitrary-precision integer coefficients throughout.  No
floating point enters at any stage, so coefficient equality is exact and a
series comparison is a proof of agreement up to the stated order.

Pochhammer-style products are built from parameters of the form +-q^e
(see :class:`QMonomial`); that shape covers every product this project
needs and keeps convergence of the truncated infinite product decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple


@dataclass(frozen=True)
class QMonomial:
    """A signed power of q: ``sign * q**exp`` with sign in {+1, -1}."""

    sign: int
    exp: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.exp < 0:
            raise ValueError(f"exponent must be nonnegative, got {self.exp}")

    def shifted(self, k: int) -> "QMonomial":
        """The monomial multiplied by q^k."""
        return QMonomial(self.sign, self.exp + k)

    def __str__(self):
        if self.exp == 0:
            return "1" if self.sign == 1 else "-1"
        base = "q" if self.exp == 1 else f"q^{self.exp}"
        return base if self.sign == 1 else f"-{base}"


class TruncatedSeries:
    """A formal power series known modulo q^(order+1).

    ``coeffs[k]`` is the exact integer coefficient of q^k, ``0 <= k <= order``.
    Instances are immutable; every operation returns a new series whose order
    is the minimum of the operand orders.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int], order: Optional[int] = None):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        if order is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        if len(cs) < order + 1:
            cs.extend([0] * (order + 1 - len(cs)))
        elif len(cs) > order + 1:
            del cs[order + 1:]
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, sign: int, exp: int, order: int) -> "TruncatedSeries":
        """The series sign * q^exp; the zero series if exp exceeds order."""
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        if exp < 0:
            raise ValueError(f"exponent must be nonnegative, got {exp}")
        cs = [0] * (order + 1)
        if exp <= order:
            cs[exp] = sign
        return cls(cs, order)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> Optional["TruncatedSeries"]:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries([other], self.order)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = min(self.order, rhs.order)
        return TruncatedSeries(
            [self.coeffs[k] + rhs.coeffs[k] for k in range(n + 1)], n
        )

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = min(self.order, rhs.order)
        return TruncatedSeries(
            [self.coeffs[k] - rhs.coeffs[k] for k in range(n + 1)], n
        )

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs.__sub__(self)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def scale(self, c: int) -> "TruncatedSeries":
        """Multiply every coefficient by the integer c."""
        if not isinstance(c, int):
            raise TypeError("scale factor must be int")
        return TruncatedSeries([c * a for a in self.coeffs], self.order)

    def shift(self, e: int) -> "TruncatedSeries":
        """Multiply by q^e: coefficient of q^k moves to q^(k+e)."""
        if e < 0:
            raise ValueError(f"shift exponent must be nonnegative, got {e}")
        if e > self.order:
            return TruncatedSeries.zero(self.order)
        cs = [0] * e + list(self.coeffs[: self.order + 1 - e])
        return TruncatedSeries(cs, self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        # Schoolbook convolution, iterating the sparser operand on the
        # outside so two-term Pochhammer factors cost O(n) not O(n^2).
        if sum(1 for c in a[: n + 1] if c) > sum(1 for c in b[: n + 1] if c):
            a, b = b, a
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            lim = n + 1 - i
            out[i:] = [x + ai * y for x, y in zip(out[i:], b[:lim])]
        return TruncatedSeries(out, n)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse, requiring a unit constant term (+1 or -1)."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(
                f"series is not invertible: constant term must be +1 or -1, got {c0}"
            )
        nonzero = [(i, a) for i, a in enumerate(self.coeffs) if a and i > 0]
        out = [0] * (self.order + 1)
        out[0] = c0
        for k in range(1, self.order + 1):
            acc = 0
            for i, ai in nonzero:
                if i > k:
                    break
                acc += ai * out[k - i]
            out[k] = -c0 * acc
        return TruncatedSeries(out, self.order)

    # -- queries ------------------------------------------------------------

    def coeff(self, k: int) -> int:
        """The exact coefficient of q^k, for 0 <= k <= order."""
        if not 0 <= k <= self.order:
            raise IndexError(f"exponent {k} outside known range 0..{self.order}")
        return self.coeffs[k]

    def __getitem__(self, k: int) -> int:
        return self.coeff(k)

    def truncate(self, order: int) -> "TruncatedSeries":
        """Forget coefficients above the given (smaller or equal) order."""
        if order > self.order:
            raise ValueError(
                f"cannot extend a series known to order {self.order} up to {order}"
            )
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def first_mismatch(
        self, other: "TruncatedSeries"
    ) -> Optional[Tuple[int, int, int]]:
        """Smallest k where the two series differ, as (k, self[k], other[k]).

        Comparison runs over 0..min(order); returns None when all those
        coefficients agree.
        """
        n = min(self.order, other.order)
        for k in range(n + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return (k, self.coeffs[k], other.coeffs[k])
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                body = f"{mag}q" if k == 1 else f"{mag}q^{k}"
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            poly = "0"
        else:
            poly = " ".join(terms)
            poly = poly[2:] if poly.startswith("+ ") else "-" + poly[2:]
        return f"{poly} + O(q^{self.order + 1})"

    def __repr__(self):
        return f"<TruncatedSeries {self}>"


def make_monomial(sign: int, exp: int, order: int) -> TruncatedSeries:
    """Module-level alias for :meth:`TruncatedSeries.monomial`."""
    return TruncatedSeries.monomial(sign, exp, order)


def _factor(sign: int, e: int, order: int) -> TruncatedSeries:
    # The generic product factor (1 - sign*q^e).
    cs = [0] * (order + 1)
    cs[0] = 1
    if e <= order:
        cs[e] -= sign
    return TruncatedSeries(cs, order)


def poch_finite(a: QMonomial, step: int, n: int, order: int) -> TruncatedSeries:
    """The finite product prod_{j=0}^{n-1} (1 - a * q^(step*j)), truncated.

    With step s this is the Pochhammer symbol (a; q^s)_n.  The empty product
    (n = 0) is 1.
    """
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    if n < 0:
        raise ValueError(f"factor count must be nonnegative, got {n}")
    result = TruncatedSeries.one(order)
    for j in range(n):
        e = a.exp + step * j
        if e > order:
            break  # exponents only grow; all remaining factors are 1
        result = result * _factor(a.sign, e, order)
    return result


def poch_infinite(a: QMonomial, step: int, order: int) -> TruncatedSeries:
    """The infinite product prod_{j>=0} (1 - a * q^(step*j)), truncated.

    Requires a.exp >= 1 so that factor j only touches exponents at or above
    a.exp + step*j; the truncated product then stabilizes once that bound
    passes the order, and the result agrees with the true infinite product
    modulo q^(order+1).
    """
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    if a.exp < 1:
        raise ValueError(
            f"infinite product needs a monomial with exponent >= 1, got {a}"
        )
    result = TruncatedSeries.one(order)
    j = 0
    while a.exp + step * j <= order:
        result = result * _factor(a.sign, a.exp + step * j, order)
        j += 1
    return result
