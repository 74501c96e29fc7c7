"""Finite-dimensional sl2 combinatorics and the Harish-Chandra simple calculus.

Finite-dimensional simples are identified with their highest weight: L(k) has
dimension k+1 and weights k, k-2, ..., -k.  The infinite-dimensional simples
of the fixed-central-character category are opaque labels V'(0), V'(2) and
V(n) for n >= 1; what the code knows about them is their multiplicity-free
list of finite-dimensional types

    V'(0): L(0), L(4), L(8), ...      V'(2): L(2), L(6), L(10), ...
    V(n):  L(n), L(n+2), L(n+4), ...

and the explicit case split for tensoring with L(k).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Counter as CounterT, Dict

from . import genfun
from .exact import TruncatedSeries


@dataclass(frozen=True, order=True)
class SimpleHC:
    """Label of a simple module in the fixed-central-character category.

    ``primed`` distinguishes the two special modules V'(0), V'(2) (whose
    index is 0 or 2) from the generic family V(n), n >= 1.
    """

    primed: bool
    index: int

    def __post_init__(self):
        if self.primed and self.index not in (0, 2):
            raise ValueError("primed labels exist only for indices 0 and 2")
        if not self.primed and self.index < 1:
            raise ValueError("V(n) requires n >= 1")

    def __str__(self):
        return f"V'({self.index})" if self.primed else f"V({self.index})"

    @classmethod
    def parse(cls, text: str) -> "SimpleHC":
        m = re.fullmatch(r"V(')?\(\s*(\d+)\s*\)", text.strip())
        if not m:
            raise ValueError(f"cannot parse simple label {text!r}")
        return cls(m.group(1) is not None, int(m.group(2)))


def Vp(index: int) -> SimpleHC:
    return SimpleHC(True, index)


def V(n: int) -> SimpleHC:
    return SimpleHC(False, n)


#: Multisets of simple labels (or of highest weights) are plain Counters.
HCMultiset = CounterT[SimpleHC]


# ---------------------------------------------------------------------------
# Finite-dimensional combinatorics
# ---------------------------------------------------------------------------

def clebsch_gordan(m: int, n: int) -> CounterT[int]:
    """L(m) (x) L(n) = L(m+n) + L(m+n-2) + ... + L(|m-n|), multiplicity one."""
    if m < 0 or n < 0:
        raise ValueError("highest weights must be non-negative")
    return Counter(range(abs(m - n), m + n + 1, 2))


def sym_weight_dim(k: int, n: int, l: int) -> int:
    """Dimension of the l-weight space of the n-th symmetric power of L(k)."""
    if abs(l) > k * n:
        return 0
    return genfun.f_enum(k, abs(l), n).coeffs[n].numerator


def sym_power_decompose(k: int, n: int) -> CounterT[int]:
    """Multiplicities of each L(l) in the n-th symmetric power of L(k).

    Obtained by peeling the weight character: the multiplicity of L(l) is
    dim Sym^n(L(k))_l - dim Sym^n(L(k))_{l+2}.
    """
    if k < 0 or n < 0:
        raise ValueError("k, n must be non-negative")
    out: CounterT[int] = Counter()
    for l in range(k * n, -1, -1):
        mult = sym_weight_dim(k, n, l) - sym_weight_dim(k, n, l + 2)
        if mult:
            out[l] = mult
    return out


def dimension(k: int) -> int:
    return k + 1


def total_sym_dimension(k: int, n: int) -> int:
    """dim Sym^n(L(k)) = C(n+k, k); used as a bookkeeping cross-check."""
    return comb(n + k, k)


# ---------------------------------------------------------------------------
# Highest-weight module bookkeeping
# ---------------------------------------------------------------------------

def verma_weight_dim(k: int) -> int:
    """Dimension of the weight space 2k below the top of a Verma module.

    Counts monomials in the three negative generators (weights -2, -2, -4),
    which closes to (k^2+4k+4)/4 for even k and (k^2+4k+3)/4 for odd k.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k % 2 == 0:
        return (k * k + 4 * k + 4) // 4
    return (k * k + 4 * k + 3) // 4


class WeightCharacter:
    """Weight multiplicities of a simple highest-weight module, depth-limited.

    For a nonzero central parameter the module is filtered by Verma modules
    with tops lambda, lambda-2, lambda-4, ..., each once, so the weight
    lambda-2j has multiplicity j+1.  Multiplicities are only recorded down to
    ``depth`` steps below the top; beyond that they are unspecified, not zero.
    """

    def __init__(self, top: int, depth: int):
        if depth < 0:
            raise ValueError("depth must be non-negative")
        self.top = top
        self.depth = depth

    def multiplicity(self, weight: int) -> int:
        diff = self.top - weight
        if diff < 0 or diff % 2 != 0:
            return 0
        j = diff // 2
        if j > self.depth:
            raise ValueError(
                f"weight {weight} lies below the recorded depth {self.depth}"
            )
        return j + 1

    def as_dict(self) -> Dict[int, int]:
        return {self.top - 2 * j: j + 1 for j in range(self.depth + 1)}


def char_simple_hw(top: int, depth: int) -> WeightCharacter:
    """Character of the simple highest-weight module with the given top."""
    return WeightCharacter(top, depth)


# ---------------------------------------------------------------------------
# The universal module Q(0): multiplicities and graded pieces
# ---------------------------------------------------------------------------

def q0_multiplicity(l: int) -> int:
    """Total multiplicity of L(l) in the reduced universal module Q(0).

    l/4 + 1 for l = 0 (mod 4), (l-2)/4 for l = 2 (mod 4), zero for odd l.
    """
    if l < 0:
        raise ValueError("l must be non-negative")
    if l % 2 == 1:
        return 0
    if l % 4 == 0:
        return l // 4 + 1
    return (l - 2) // 4


def q00_degree_part(k: int) -> CounterT[int]:
    """Multiset of L(l)'s in the degree-k graded piece of Q(0).

    Computed (not tabulated) as the q^k coefficient of
    (F_l - F_{l+2}) * (1-q^2)(1-q^3) over the ambient module of highest
    weight 4, using that the symmetric algebra is free over its degree-2 and
    degree-3 invariants.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    out: CounterT[int] = Counter()
    killer = genfun.geometric_den(2, 3)
    for l in range(2 * k, 4 * k + 1):
        numerator = genfun.f_enum(4, l, k + 3) - genfun.f_enum(4, l + 2, k + 3)
        series = numerator * TruncatedSeries.from_polynomial(killer, k + 3)
        mult = series.coeffs[k]
        if mult:
            out[l] = int(mult)
    return out


# ---------------------------------------------------------------------------
# Harish-Chandra simples: g-types and tensor calculus
# ---------------------------------------------------------------------------

def g_types(s: SimpleHC, max_l: int) -> CounterT[int]:
    """Multiplicity-free finite-dimensional types of s, up to weight max_l."""
    if s.primed:
        start, step = s.index, 4
    else:
        start, step = s.index, 2
    return Counter(range(start, max_l + 1, step))


def hc_tensor(k: int, s: SimpleHC) -> HCMultiset:
    """Decomposition of L(k) (x) s into simples, by the explicit case split."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out: HCMultiset = Counter()
    if s.primed:
        if k % 2 == 1:
            out.update(V(j) for j in range(1, k + 1, 2))
        else:
            if k % 4 == 0:
                out[s] += 1
            else:
                out[Vp(2 if s.index == 0 else 0)] += 1
            out.update(V(j) for j in range(2, k + 1, 2))
        return out

    n = s.index
    if k < n:
        out.update(V(j) for j in range(n - k, n + k + 1, 2))
    elif k == n:
        out[Vp(0)] += 1
        out[Vp(2)] += 1
        out.update(V(j) for j in range(2, 2 * n + 1, 2))
    else:
        # k > n; k = n is handled above, so the doubled range is non-empty.
        if (k - n) % 2 == 0:
            out[Vp(0)] += 1
            out[Vp(2)] += 1
            doubled = range(2, k - n + 1, 2)
        else:
            doubled = range(1, k - n + 1, 2)
        for j in doubled:
            out[V(j)] += 2
        out.update(V(j) for j in range(k - n + 2, k + n + 1, 2))
    return out


def hc_tensor_multiset(k: int, multiset: HCMultiset) -> HCMultiset:
    """Extend hc_tensor additively to a multiset of simples."""
    out: HCMultiset = Counter()
    for s, mult in multiset.items():
        for t, m in hc_tensor(k, s).items():
            out[t] += mult * m
    return out


def enar_simple(lam: int) -> HCMultiset:
    """Completion image of the simple highest-weight module with top ``lam``.

    The exceptional top -2 contributes both primed simples; any other integer
    top contributes the single simple V(|lam+2|).
    """
    if lam == -2:
        return Counter({Vp(0): 1, Vp(2): 1})
    return Counter({V(abs(lam + 2)): 1})
