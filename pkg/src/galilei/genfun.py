"""Weight generating functions for symmetric powers of simple sl2-modules.

For the (k+1)-dimensional simple module with weight basis of weights
k, k-2, ..., -k, let F_l^(k)(q) be the series whose q^n coefficient is the
dimension of the l-weight space of the n-th symmetric power.  Equivalently,
that coefficient counts non-negative integer tuples (a_0, ..., a_k) with

    k*a_0 + (k-2)*a_1 + ... + (-k)*a_k = l   and   a_0 + ... + a_k = n.

This module computes F_l^(k) by three independent routes:

* ``f_enum``   -- exact lattice-point counting (the oracle),
* ``f_recur``  -- a recursion reducing k to k-2, grounded at k in {0, 1},
* ``f_closed`` -- transcribed closed-form rational functions (k <= 4 for all
                  l, k=5 for l <= 3, k=6 for l in {0,2,4,6}).

On top of these sit the invariant Hilbert series F_0 - F_2, the freeness
quotient (F_l - F_{l+2})/(F_0 - F_2) whose negative coefficients certify
non-freeness, and a greedy detector for the generators/relation shape of the
invariant ring.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .exact import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    first_negative_coefficient,
)

#: Default truncation degree; every claim checked here manifests by degree 36.
DEFAULT_TRUNCATION = 60

#: Environment variable naming an optional on-disk series cache directory.
CACHE_DIR_ENV = "GALILEI_CACHE_DIR"


class NoClosedFormError(ValueError):
    """Raised for (k, l) pairs with no transcribed closed form."""


class StructureNotRecognizedError(RuntimeError):
    """The invariant series matched neither a free nor a one-relation shape."""


def _qpow(n: int) -> Polynomial:
    return Polynomial.monomial("q", n)


def geometric_den(*degrees: int) -> Polynomial:
    """Product of (1 - q^d) over the given degrees."""
    out = Polynomial.one("q")
    for d in degrees:
        out = out * (Polynomial.one("q") - _qpow(d))
    return out


# ---------------------------------------------------------------------------
# Diophantine enumeration
# ---------------------------------------------------------------------------

def diophantine_solutions(k: int, l: int, max_degree: int) -> Iterator[Tuple[int, ...]]:
    """Yield all (a_0, ..., a_k) with weighted sum l and total degree <= N.

    Iterates over (a_1, ..., a_k) and solves for a_0 from the weight
    constraint, pruning partial assignments whose degree budget cannot reach
    the target weight.  Intended as a small-scale oracle; ``f_enum`` does the
    same count by dynamic programming.
    """
    if k < 0 or l < 0 or max_degree < 0:
        raise ValueError("k, l, max_degree must be non-negative")
    if k == 0:
        if l == 0:
            for a0 in range(max_degree + 1):
                yield (a0,)
        return

    weights = [k - 2 * i for i in range(k + 1)]

    def rec(i: int, degree: int, weight: int, tail: List[int]):
        if i > k:
            rest = l - weight
            if rest % k == 0 and rest >= 0:
                a0 = rest // k
                if degree + a0 <= max_degree:
                    yield (a0, *tail)
            return
        budget = max_degree - degree
        # a_0 contributes weight k per unit; items i..k contribute in
        # [-k, weights[i]] per unit.  Prune if l is out of reach.
        if weight - k * budget > l or weight + k * budget < l:
            return
        for a in range(budget + 1):
            yield from rec(i + 1, degree + a, weight + weights[i] * a, tail + [a])

    yield from rec(1, 0, 0, [])


# ---------------------------------------------------------------------------
# f_enum: dynamic-programming lattice-point count
# ---------------------------------------------------------------------------

_enum_tables: Dict[Tuple[int, int], List[List[int]]] = {}


def _weight_degree_table(k: int, degree: int) -> List[List[int]]:
    """table[n][l + k*degree] = number of degree-n monomials of weight l."""
    key = (k, degree)
    table = _enum_tables.get(key)
    if table is not None:
        return table
    offset = k * degree
    width = 2 * offset + 1
    table = [[0] * width for _ in range(degree + 1)]
    table[0][offset] = 1
    for i in range(k + 1):
        w = k - 2 * i
        for n in range(1, degree + 1):
            prev = table[n - 1]
            cur = table[n]
            for col in range(width):
                src = col - w
                if 0 <= src < width and prev[src]:
                    cur[col] += prev[src]
    _enum_tables[key] = table
    return table


def _enum_coeffs(k: int, l: int, degree: int) -> List[int]:
    if k == 0:
        return [1 if l == 0 else 0] * (degree + 1)
    if l > k * degree:
        return [0] * (degree + 1)
    table = _weight_degree_table(k, degree)
    col = l + k * degree
    return [table[n][col] for n in range(degree + 1)]


def f_enum(k: int, l: int, degree: int = DEFAULT_TRUNCATION) -> TruncatedSeries:
    """F_l^(k) up to the given degree, by exact solution counting."""
    if k < 0 or l < 0 or degree < 0:
        raise ValueError("k, l, degree must be non-negative")
    cached = _disk_cache_get("enum", k, l, degree)
    if cached is not None:
        return TruncatedSeries("q", cached)
    coeffs = _enum_coeffs(k, l, degree)
    _disk_cache_put("enum", k, l, degree, coeffs)
    return TruncatedSeries("q", coeffs)


# ---------------------------------------------------------------------------
# f_recur: the k -> k-2 recursion
# ---------------------------------------------------------------------------

_recur_cache: Dict[Tuple[int, int, int], Tuple[int, ...]] = {}


def _ground_coeffs(k: int, l: int, degree: int) -> List[int]:
    """Closed-form series for k in {0, 1} grounding the recursion."""
    if k == 0:
        return [1 if l == 0 else 0] * (degree + 1)
    # k == 1: q^l / (1 - q^2)
    return [1 if n >= l and (n - l) % 2 == 0 else 0 for n in range(degree + 1)]


def _recur_coeffs(k: int, l: int, degree: int) -> Tuple[int, ...]:
    key = (k, l, degree)
    hit = _recur_cache.get(key)
    if hit is not None:
        return hit

    def inner(b: int) -> Optional[Tuple[int, ...]]:
        if b < 0:
            return None
        if k - 2 <= 1:
            coeffs = _ground_coeffs(k - 2, b, degree)
            return tuple(coeffs) if any(coeffs) else None
        if b > (k - 2) * degree:
            return None
        return _recur_coeffs(k - 2, b, degree)

    out = [0] * (degree + 1)

    def accumulate(b: int, d: int):
        # add sum over s = |d|, |d|+2, ... of q^s * F^(k-2)_b
        series = inner(b)
        if series is None or not any(series):
            return
        start = abs(d)
        if start > degree:
            return
        # prefix sums of stride 2: P[r] = series[r] + series[r-2] + ...
        prefix = list(series)
        for r in range(2, degree + 1):
            prefix[r] += prefix[r - 2]
        for m in range(start, degree + 1):
            out[m] += prefix[m - start]

    # First sum: k*a + b - k*c = l with b >= 0; d = a - c ranges over
    # integers with |d| <= degree and b = l - k*d >= 0.
    for d in range(-degree, l // k + 1):
        accumulate(l - k * d, d)
    # Second sum: k*a - b - k*c = l + 1 with b >= 0, contributing F_{b+1}.
    lo = -((-(l + 1)) // k)  # ceil((l+1)/k)
    for d in range(lo, degree + 1):
        accumulate(k * d - l, d)  # index b + 1

    result = tuple(out)
    _recur_cache[key] = result
    return result


def f_recur(k: int, l: int, degree: int = DEFAULT_TRUNCATION) -> TruncatedSeries:
    """F_l^(k) via the weight-splitting recursion; requires k >= 2."""
    if k < 2:
        raise ValueError("the recursion needs k >= 2")
    if l < 0 or degree < 0:
        raise ValueError("l, degree must be non-negative")
    cached = _disk_cache_get("recur", k, l, degree)
    if cached is not None:
        return TruncatedSeries("q", cached)
    coeffs = list(_recur_coeffs(k, l, degree))
    _disk_cache_put("recur", k, l, degree, coeffs)
    return TruncatedSeries("q", coeffs)


# ---------------------------------------------------------------------------
# f_closed: transcribed closed forms
# ---------------------------------------------------------------------------

def _closed_k3(l: int) -> RationalFunction:
    one = Polynomial.one("q")
    den = geometric_den(2, 2, 4)
    r = l % 3
    if r == 0:
        num = (one + _qpow(2) + _qpow(4) - _qpow(2 * l // 3 + 2)).shift(l // 3)
    elif r == 1:
        num = (one + _qpow(2).scale(2) - _qpow((2 * l + 4) // 3)).shift((l + 2) // 3)
    else:
        num = (Polynomial.constant("q", 2) + _qpow(2) - _qpow((2 * l + 2) // 3)).shift((l + 4) // 3)
    return RationalFunction(num, den)


def _closed_k4(l: int) -> RationalFunction:
    if l % 2 == 1:
        return RationalFunction(Polynomial.zero("q"))
    one = Polynomial.one("q")
    den = geometric_den(1, 1, 2, 3)
    if l % 4 == 0:
        num = (one + _qpow(2) - _qpow(l // 4 + 1)).shift(l // 4)
    else:
        # inner exponent (l-2)/4 + 1 = (l+2)/4; forced by F_0 - F_2 and the
        # enumeration oracle (for l=2 the numerator collapses to q).
        m = (l + 2) // 4
        num = (one + _qpow(1) - _qpow(m)).shift(m)
    return RationalFunction(num, den)


def _closed_k5(l: int) -> RationalFunction:
    if l == 0:
        num = Polynomial("q", (1, 0, 1, 0, 6, 0, 9, 0, 12, 0, 9, 0, 6, 0, 1, 0, 1))
        return RationalFunction(num, geometric_den(2, 2, 4, 6, 8))
    if l == 1:
        num = Polynomial("q", (1, 0, 3, 0, 5, 0, 5, 0, 5, 0, 3, 0, 1)).shift(1)
        return RationalFunction(num, geometric_den(2, 2, 2, 6, 8))
    if l == 2:
        num = Polynomial("q", (3, 0, 5, 0, 7, 0, 5, 0, 3)).shift(2)
        return RationalFunction(num, geometric_den(2, 2, 4, 4, 6))
    if l == 3:
        num = Polynomial("q", (1, 0, 3, 0, 4, 0, 7, 0, 4, 0, 3, 0, 1)).shift(1)
        return RationalFunction(num, geometric_den(2, 2, 2, 6, 8))
    raise NoClosedFormError(f"no closed form for k=5, l={l}")


def _closed_k6(l: int) -> RationalFunction:
    if l == 0:
        num = Polynomial("q", (1, 0, 1, 3, 4, 4, 4, 3, 1, 0, 1))
        return RationalFunction(num, geometric_den(1, 2, 2, 3, 4, 5))
    if l == 2:
        num = Polynomial("q", (1, 2, 2, 1, 2, 2, 1)).shift(1)
        return RationalFunction(num, geometric_den(1, 2, 2, 2, 3, 5))
    if l == 4:
        num = Polynomial("q", (1, 2, 2, 4, 4, 4, 2, 2, 1)).shift(1)
        return RationalFunction(num, geometric_den(1, 2, 2, 3, 4, 5))
    if l == 6:
        num = Polynomial("q", (1, 1, 2, 3, 2, 1, 1)).shift(1)
        return RationalFunction(num, geometric_den(1, 2, 2, 2, 3, 5))
    raise NoClosedFormError(f"no closed form for k=6, l={l}")


def f_closed(k: int, l: int) -> RationalFunction:
    """The closed-form F_l^(k) as a canonical rational function.

    Supported: k <= 4 (all l), k = 5 (l <= 3), k = 6 (l in {0, 2, 4, 6}).
    Anything else raises NoClosedFormError rather than guessing.
    """
    if k < 0 or l < 0:
        raise ValueError("k, l must be non-negative")
    if k == 0:
        if l == 0:
            return RationalFunction(Polynomial.one("q"), geometric_den(1))
        return RationalFunction(Polynomial.zero("q"))
    if k == 1:
        return RationalFunction(_qpow(l), geometric_den(2))
    if k == 2:
        if l % 2 == 1:
            return RationalFunction(Polynomial.zero("q"))
        return RationalFunction(_qpow(l // 2), geometric_den(1, 2))
    if k == 3:
        return _closed_k3(l)
    if k == 4:
        return _closed_k4(l)
    if k == 5:
        return _closed_k5(l)
    if k == 6:
        return _closed_k6(l)
    raise NoClosedFormError(f"no closed form for k={k}")


def has_closed_form(k: int, l: int) -> bool:
    if k <= 4:
        return True
    if k == 5:
        return l <= 3
    if k == 6:
        return l in (0, 2, 4, 6)
    return False


# ---------------------------------------------------------------------------
# Invariant series, freeness quotient, structure detection
# ---------------------------------------------------------------------------

def invariant_series(k: int, degree: int = DEFAULT_TRUNCATION) -> TruncatedSeries:
    """Hilbert series F_0 - F_2 of the invariant ring, to the given degree.

    Computed by enumeration; when closed forms exist for both weights the
    closed-form expansion is required to agree (a transcription guard).
    """
    series = f_enum(k, 0, degree) - f_enum(k, 2, degree)
    if has_closed_form(k, 0) and has_closed_form(k, 2):
        closed = (f_closed(k, 0) - f_closed(k, 2)).series(degree)
        if closed != series:
            raise AssertionError(
                f"closed-form invariant series disagrees with enumeration for k={k}"
            )
    return series


def freeness_quotient(
    k: int, l: int, degree: int = DEFAULT_TRUNCATION
) -> Tuple[TruncatedSeries, Optional[int]]:
    """(F_l - F_{l+2})/(F_0 - F_2) plus its first negative degree, if any.

    A negative coefficient certifies that the symmetric algebra is not free
    over its invariants.
    """
    numerator = f_enum(k, l, degree) - f_enum(k, l + 2, degree)
    quotient = numerator / invariant_series(k, degree)
    return quotient, first_negative_coefficient(quotient)


@dataclass(frozen=True)
class InvariantStructure:
    """Generator degrees of the invariant ring, plus one relation degree if any.

    ``relation_degree is None`` means the series matched a free polynomial
    algebra on the listed generator degrees.
    """

    generator_degrees: Tuple[int, ...]
    relation_degree: Optional[int]

    def describe(self) -> str:
        gens = ", ".join(map(str, self.generator_degrees)) or "none"
        if self.relation_degree is None:
            return f"polynomial algebra, generator degrees [{gens}]"
        return (
            f"generator degrees [{gens}] with one relation of degree "
            f"{self.relation_degree}"
        )


def detect_invariant_structure(
    k: int, degree: int = DEFAULT_TRUNCATION
) -> InvariantStructure:
    """Greedily factor the invariant Hilbert series as prod 1/(1-q^d) [* (1-q^e)].

    Repeatedly divides out 1/(1-q^d) for the smallest degree d with a positive
    coefficient; the residual must end up as 1 (free) or 1 - q^e (single
    relation of degree e).  The reconstruction is verified against the input
    series before returning; anything else raises StructureNotRecognizedError.
    """
    series = invariant_series(k, degree)
    residual = list(series.coeffs)
    if residual[0] != 1:
        raise StructureNotRecognizedError("constant term is not 1")
    generators: List[int] = []
    while True:
        d = next((i for i in range(1, degree + 1) if residual[i] > 0), None)
        if d is None:
            break
        if len(generators) > degree:
            raise StructureNotRecognizedError("generator extraction did not terminate")
        generators.append(d)
        # multiply the residual by (1 - q^d)
        for i in range(degree, d - 1, -1):
            residual[i] -= residual[i - d]
    negatives = [i for i in range(1, degree + 1) if residual[i] != 0]
    if not negatives:
        structure = InvariantStructure(tuple(generators), None)
    elif len(negatives) == 1 and residual[negatives[0]] == -1:
        structure = InvariantStructure(tuple(generators), negatives[0])
    else:
        raise StructureNotRecognizedError(
            f"residual is neither 1 nor 1 - q^e for k={k}"
        )

    if reconstruct_structure_series(structure, degree) != series:
        raise StructureNotRecognizedError(
            f"reconstruction mismatch for k={k}: {structure}"
        )
    return structure


def reconstruct_structure_series(
    structure: InvariantStructure, degree: int
) -> TruncatedSeries:
    """Expand prod 1/(1-q^d) (times (1-q^e) for a relation) to the degree."""
    out = TruncatedSeries("q", [1] + [0] * degree)
    for d in structure.generator_degrees:
        geom = TruncatedSeries(
            "q", [1 if n % d == 0 else 0 for n in range(degree + 1)]
        )
        out = out * geom
    if structure.relation_degree is not None:
        rel = Polynomial.one("q") - _qpow(structure.relation_degree)
        out = out * TruncatedSeries.from_polynomial(rel, degree)
    return out


# ---------------------------------------------------------------------------
# Optional on-disk cache (disabled unless GALILEI_CACHE_DIR is set)
# ---------------------------------------------------------------------------

def _cache_path(method: str, k: int, l: int, degree: int) -> Optional[str]:
    root = os.environ.get(CACHE_DIR_ENV)
    if not root:
        return None
    key = f"{method}:k={k}:l={l}:N={degree}"
    digest = hashlib.sha256(key.encode()).hexdigest()[:24]
    return os.path.join(root, f"series-{digest}.json")


def _disk_cache_get(method: str, k: int, l: int, degree: int) -> Optional[List[int]]:
    path = _cache_path(method, k, l, degree)
    if path is None or not os.path.exists(path):
        return None
    with open(path) as fh:
        payload = json.load(fh)
    if payload.get("key") != [method, k, l, degree]:
        return None
    return [int(c) for c in payload["coeffs"]]


def _disk_cache_put(method: str, k: int, l: int, degree: int, coeffs: List[int]) -> None:
    path = _cache_path(method, k, l, degree)
    if path is None:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        json.dump({"key": [method, k, l, degree], "coeffs": [int(c) for c in coeffs]}, fh)


def clear_memo_caches() -> None:
    """Drop in-process memo tables (mainly for tests)."""
    _enum_tables.clear()
    _recur_cache.clear()
