"""The symmetric algebra on a simple sl2-module, with the adjoint action.

Elements of Sym(L(n)) are multivariate polynomials in the weight basis
v_{-n}, v_{-n+2}, ..., v_n.  The generators e, f, h of sl2 act by
derivations extending their action on the basis:

    e . v_j = (n+j+2)/2 * v_{j+2}   (0 on the top vector),
    f . v_j = (n-j+2)/2 * v_{j-2}   (0 on the bottom vector),
    h . v_j = j * v_j.

The e-coefficients are the fixed convention; the f-coefficients are forced by
the sl2 relations and certified by the commutator property tests.  A rescaled
"w" basis in which e steps along the chain with coefficient 1 is computed on
demand; in that basis the action of e on monomials reproduces the edge labels
of the restricted Young lattice, which is what the linear-independence
certificate below exploits.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

from .linalg import rational_rank

Exponents = Tuple[int, ...]


class SymElement:
    """Element of Sym(L(n)) over the v- or w-basis.

    ``terms`` maps exponent tuples to nonzero Fractions; position i of an
    exponent tuple refers to the basis vector of weight -n + 2i (lowest
    weight first).
    """

    __slots__ = ("n", "basis", "terms")

    def __init__(self, n: int, terms: Dict[Exponents, Fraction] = None, basis: str = "v"):
        if n < 0:
            raise ValueError("ambient highest weight must be non-negative")
        if basis not in ("v", "w"):
            raise ValueError("basis must be 'v' or 'w'")
        self.n = n
        self.basis = basis
        clean: Dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != n + 1:
                raise ValueError("exponent tuple has wrong length")
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[tuple(exps)] = coeff
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, n: int, basis: str = "v") -> "SymElement":
        return cls(n, {}, basis)

    @classmethod
    def one(cls, n: int, basis: str = "v") -> "SymElement":
        return cls(n, {(0,) * (n + 1): Fraction(1)}, basis)

    @classmethod
    def generator(cls, n: int, weight: int, basis: str = "v") -> "SymElement":
        """The basis vector of the given weight, as a degree-1 element."""
        idx = _weight_index(n, weight)
        exps = [0] * (n + 1)
        exps[idx] = 1
        return cls(n, {tuple(exps): Fraction(1)}, basis)

    # -- structure -----------------------------------------------------------

    def _compatible(self, other: "SymElement"):
        if self.n != other.n or self.basis != other.basis:
            raise ValueError("ambient module or basis mismatch")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SymElement") -> "SymElement":
        self._compatible(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        return SymElement(self.n, out, self.basis)

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + other.scale(-1)

    def scale(self, c) -> "SymElement":
        c = Fraction(c)
        return SymElement(
            self.n, {e: v * c for e, v in self.terms.items()}, self.basis
        )

    def __mul__(self, other: "SymElement") -> "SymElement":
        self._compatible(other)
        out: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return SymElement(self.n, out, self.basis)

    def __pow__(self, k: int) -> "SymElement":
        if k < 0:
            raise ValueError("negative power")
        result = SymElement.one(self.n, self.basis)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, SymElement):
            return NotImplemented
        return (
            self.n == other.n
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.basis, frozenset(self.terms.items())))

    def monomial_degree(self, exps: Exponents) -> int:
        return sum(exps)

    def monomial_weight(self, exps: Exponents) -> int:
        return sum(e * (-self.n + 2 * i) for i, e in enumerate(exps))

    def homogeneous_degree(self) -> int:
        """Common degree of all monomials (error if mixed or zero)."""
        degrees = {sum(e) for e in self.terms}
        if len(degrees) != 1:
            raise ValueError("element is not homogeneous in degree")
        return degrees.pop()

    def weight(self) -> int:
        """Common h-weight of all monomials (error if mixed or zero)."""
        weights = {self.monomial_weight(e) for e in self.terms}
        if len(weights) != 1:
            raise ValueError("element is not an h-weight vector")
        return weights.pop()

    def sorted_terms(self) -> List[Tuple[Exponents, Fraction]]:
        """Terms in lexicographic order of exponent tuples (lowest basis first)."""
        return sorted(self.terms.items())

    def __str__(self):
        if self.is_zero:
            return "0"
        names = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                w = -self.n + 2 * i
                name = f"{self.basis}[{w}]"
                factors.append(name if e == 1 else f"{name}^{e}")
            mono = "*".join(factors) if factors else "1"
            if coeff == 1 and factors:
                names.append(mono)
            elif coeff == -1 and factors:
                names.append(f"-{mono}")
            else:
                names.append(f"{coeff}*{mono}" if factors else str(coeff))
        return " + ".join(names).replace("+ -", "- ")

    def __repr__(self):
        return f"<SymElement n={self.n} basis={self.basis} {self}>"


def _weight_index(n: int, weight: int) -> int:
    if (weight + n) % 2 != 0 or abs(weight) > n:
        raise ValueError(f"no basis vector of weight {weight} in L({n})")
    return (weight + n) // 2


def _raise_coefficient(n: int, basis: str, weight: int) -> Fraction:
    """Coefficient of v_{weight+2} in e . v_weight (0 at the top)."""
    if weight >= n:
        return Fraction(0)
    if basis == "w":
        return Fraction(1)
    return Fraction(n + weight + 2, 2)


def _lower_coefficient(n: int, basis: str, weight: int) -> Fraction:
    """Coefficient of v_{weight-2} in f . v_weight (0 at the bottom)."""
    if weight <= -n:
        return Fraction(0)
    if basis == "v":
        return Fraction(n - weight + 2, 2)
    scal = w_basis_scalars(n)
    idx = _weight_index(n, weight)
    return scal[idx] * Fraction(n - weight + 2, 2) / scal[idx - 1]


def w_basis_scalars(n: int) -> Tuple[Fraction, ...]:
    """Scalars c_i with w_i = c_i * v_i, computed by walking the e-chain up.

    Normalised by c = 1 on the lowest vector; each step divides by the
    v-basis raising coefficient so that e steps with coefficient 1.
    """
    scalars = [Fraction(1)]
    weight = -n
    while weight < n:
        scalars.append(scalars[-1] * _raise_coefficient(n, "v", weight))
        weight += 2
    return tuple(scalars)


def adjoint_action(generator: str, p: SymElement) -> SymElement:
    """Apply e, f or h to an element, extending the basis action by Leibniz."""
    if generator not in ("e", "f", "h"):
        raise ValueError("generator must be one of 'e', 'f', 'h'")
    out: Dict[Exponents, Fraction] = {}

    def add(exps: Exponents, coeff: Fraction):
        if coeff != 0:
            out[exps] = out.get(exps, Fraction(0)) + coeff

    for exps, coeff in p.terms.items():
        if generator == "h":
            add(exps, coeff * p.monomial_weight(exps))
            continue
        for i, e in enumerate(exps):
            if e == 0:
                continue
            weight = -p.n + 2 * i
            if generator == "e":
                step = _raise_coefficient(p.n, p.basis, weight)
                j = i + 1
            else:
                step = _lower_coefficient(p.n, p.basis, weight)
                j = i - 1
            if step == 0:
                continue
            new = list(exps)
            new[i] -= 1
            new[j] += 1
            add(tuple(new), coeff * e * step)
    return SymElement(p.n, out, p.basis)


def is_invariant(p: SymElement) -> bool:
    """True iff both the raising and lowering derivations annihilate p."""
    return adjoint_action("e", p).is_zero and adjoint_action("f", p).is_zero


# ---------------------------------------------------------------------------
# The two invariants of Sym(L(4))
# ---------------------------------------------------------------------------

def _v4(weight: int) -> SymElement:
    return SymElement.generator(4, weight)


def build_C2() -> SymElement:
    """The degree-2 invariant v0^2 - 3 v_{-2} v_2 + 12 v_{-4} v_4."""
    return (
        _v4(0) * _v4(0)
        + (_v4(-2) * _v4(2)).scale(-3)
        + (_v4(-4) * _v4(4)).scale(12)
    )


def build_C3() -> SymElement:
    """The degree-3 invariant

    v0^3 - 9/2 v_{-2} v0 v_2 + 27/2 v_{-2}^2 v_4 + 27/2 v_{-4} v_2^2
    - 36 v_{-4} v0 v_4.
    """
    return (
        _v4(0) ** 3
        + (_v4(-2) * _v4(0) * _v4(2)).scale(Fraction(-9, 2))
        + (_v4(-2) ** 2 * _v4(4)).scale(Fraction(27, 2))
        + (_v4(-4) * _v4(2) ** 2).scale(Fraction(27, 2))
        + (_v4(-4) * _v4(0) * _v4(4)).scale(-36)
    )


# ---------------------------------------------------------------------------
# Linear independence of iterated raisings
# ---------------------------------------------------------------------------

def independence_vectors(k: int) -> List[SymElement]:
    """The elements e^i . (w_{-4}^i w_{-2}^{k-i}) for i = 0..k-1, in Sym(L(4))."""
    if k < 1:
        raise ValueError("k must be at least 1")
    w_m4 = SymElement.generator(4, -4, basis="w")
    w_m2 = SymElement.generator(4, -2, basis="w")
    vectors = []
    for i in range(k):
        p = w_m4 ** i * w_m2 ** (k - i)
        for _ in range(i):
            p = adjoint_action("e", p)
        vectors.append(p)
    return vectors


def independence_check(k: int) -> Tuple[bool, int]:
    """Whether the k iterated raisings are linearly independent, plus the rank.

    All k elements live in the degree-k, weight -2k component; their
    coefficient vectors over the monomial basis of that component are
    assembled into a matrix whose exact rank is returned.
    """
    vectors = independence_vectors(k)
    monomials = sorted({m for p in vectors for m in p.terms})
    matrix = [
        [p.terms.get(m, Fraction(0)) for m in monomials] for p in vectors
    ]
    rank = rational_rank(matrix)
    return rank == k, rank


def weight_component_monomials(n: int, degree: int, weight: int) -> List[Exponents]:
    """All exponent tuples in Sym(L(n)) of the given degree and weight."""
    out: List[Exponents] = []

    def rec(i: int, left: int, w: int, acc: List[int]):
        if i == n:
            # final slot has weight n
            if w == left * n and left >= 0:
                out.append(tuple(acc + [left]))
            return
        for e in range(left + 1):
            rec(i + 1, left - e, w - e * (-n + 2 * i), acc + [e])

    rec(0, degree, weight, [])
    return sorted(out)
