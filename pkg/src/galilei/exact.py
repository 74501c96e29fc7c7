"""Exact scalar, polynomial, rational-function and truncated-series arithmetic.

Every coefficient in this package is an arbitrary-precision rational
(`fractions.Fraction`); no floating point is used anywhere.  Polynomials are
dense in a single formal variable (``q`` for counting series, ``x`` for edge
labels), rational functions are kept in a canonical form with coprime
numerator/denominator and monic denominator, and truncated power series carry
their truncation degree explicitly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

#: Scalars are plain Fractions: always in lowest terms, positive denominator.
Scalar = Fraction

ScalarLike = Union[int, Fraction]


class PoleAtOriginError(ZeroDivisionError):
    """Raised when expanding at q=0 something whose denominator vanishes there."""


def _as_scalar(c: ScalarLike) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not an exact scalar: {c!r}")


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients.

    The coefficient list never has trailing zeros; the zero polynomial has an
    empty coefficient tuple and degree ``-1`` (sentinel).
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[ScalarLike] = ()):
        cs = [_as_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var: str) -> "Polynomial":
        return cls(var, ())

    @classmethod
    def constant(cls, var: str, c: ScalarLike) -> "Polynomial":
        return cls(var, (c,))

    @classmethod
    def one(cls, var: str) -> "Polynomial":
        return cls(var, (1,))

    @classmethod
    def variable(cls, var: str) -> "Polynomial":
        return cls(var, (0, 1))

    @classmethod
    def monomial(cls, var: str, degree: int, coeff: ScalarLike = 1) -> "Polynomial":
        if degree < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls(var, (0,) * degree + (_as_scalar(coeff),))

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.coeffs[-1]

    def __call__(self, point: ScalarLike) -> Fraction:
        point = _as_scalar(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.var, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            self.var,
            [self.coefficient(i) + other.coefficient(i) for i in range(n)],
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d, lead = other.degree, other.leading_coefficient()
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
        return Polynomial(self.var, quot), Polynomial(self.var, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Division known a priori to be remainder-free; checked."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError("division was not exact")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.leading_coefficient()
        return Polynomial(self.var, [c / lead for c in self.coeffs])

    def scale(self, c: ScalarLike) -> "Polynomial":
        c = _as_scalar(c)
        return Polynomial(self.var, [a * c for a in self.coeffs])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by var**k."""
        if self.is_zero:
            return self
        return Polynomial(self.var, (0,) * k + self.coeffs)

    # -- comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.var, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __bool__(self):
        return not self.is_zero

    # -- display ---------------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                pw = self.var if i == 1 else f"{self.var}^{i}"
                body = mag + pw
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self.var!r}, {self.coeffs!r})"


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm over the rationals."""
    if a.var != b.var:
        raise ValueError("variable mismatch in gcd")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """Quotient of two polynomials in canonical form.

    Canonical form: gcd(numerator, denominator) = 1 and the denominator is
    monic, so structural equality decides equality of rational functions.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Optional[Polynomial] = None):
        if den is None:
            den = Polynomial.one(num.var)
        if num.var != den.var:
            raise ValueError("variable mismatch")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = Polynomial.one(num.var)
        else:
            g = polynomial_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.leading_coefficient()
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def from_scalar(cls, var: str, c: ScalarLike) -> "RationalFunction":
        return cls(Polynomial.constant(var, c))

    @property
    def var(self) -> str:
        return self.num.var

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other) -> Optional["RationalFunction"]:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.from_scalar(self.var, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == Polynomial.one(self.var):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def series(self, truncation: int) -> "TruncatedSeries":
        return series_expand(self, truncation)


class TruncatedSeries:
    """Power series known exactly up to a truncation degree.

    Binary operations truncate to the smaller of the two truncation degrees.
    Division requires the divisor to have a nonzero constant term.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Sequence[ScalarLike]):
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        self.var = var
        self.coeffs = tuple(_as_scalar(c) for c in coeffs)

    @classmethod
    def zero(cls, var: str, truncation: int) -> "TruncatedSeries":
        return cls(var, [0] * (truncation + 1))

    @classmethod
    def from_polynomial(cls, p: Polynomial, truncation: int) -> "TruncatedSeries":
        return cls(p.var, [p.coefficient(i) for i in range(truncation + 1)])

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        if i < 0:
            return Fraction(0)
        if i > self.truncation:
            raise IndexError(f"coefficient {i} beyond truncation {self.truncation}")
        return self.coeffs[i]

    def truncate(self, n: int) -> "TruncatedSeries":
        if n > self.truncation:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.var, self.coeffs[: n + 1])

    def _coerce(self, other) -> Optional["TruncatedSeries"]:
        if isinstance(other, TruncatedSeries):
            if other.var != self.var:
                raise ValueError("variable mismatch")
            return other
        if isinstance(other, Polynomial):
            return TruncatedSeries.from_polynomial(other, self.truncation)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(
                self.var, [other] + [0] * self.truncation
            )
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.truncation, other.truncation)
        return TruncatedSeries(
            self.var, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.truncation, other.truncation)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(self.var, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.coeffs[0] == 0:
            raise PoleAtOriginError("division by a series with zero constant term")
        n = min(self.truncation, other.truncation)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            acc = self.coeffs[i]
            for j in range(1, i + 1):
                acc -= other.coeffs[j] * out[i - j]
            out[i] = acc / other.coeffs[0]
        return TruncatedSeries(self.var, out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def first_negative(self) -> Optional[int]:
        """Smallest degree with a negative coefficient, if any."""
        for i, c in enumerate(self.coeffs):
            if c < 0:
                return i
        return None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mag = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                pw = self.var if i == 1 else f"{self.var}^{i}"
                terms.append(f"{mag}{pw}")
            if len(terms) >= 8:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({self.var}^{self.truncation + 1})"

    def __repr__(self):
        return f"TruncatedSeries({self.var!r}, {self.coeffs!r})"


def series_expand(rf: RationalFunction, truncation: int) -> TruncatedSeries:
    """Maclaurin expansion of a rational function, exact to the given degree.

    The denominator must not vanish at the origin.
    """
    if rf.den.coefficient(0) == 0:
        raise PoleAtOriginError("rational function has a pole at the origin")
    num = TruncatedSeries.from_polynomial(rf.num, truncation)
    den = TruncatedSeries.from_polynomial(rf.den, truncation)
    return num / den


def first_negative_coefficient(series: TruncatedSeries) -> Optional[int]:
    """Smallest degree carrying a negative coefficient, or None."""
    return series.first_negative()
