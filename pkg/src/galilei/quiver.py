"""Block quivers of the fixed-central-character category and their projectives.

The simples fall into three blocks:

1. V(n) for odd n, arranged on a line ... V(11) - V(7) - V(3) - V(1) - V(5)
   - V(9) ...; arrows both ways between neighbours, all 2-cycles zero.
2. V(n) for n = 2 (mod 4), a half-line with a loop at V(2); all 2-cycles
   zero and the loop squares to zero.
3. V'(0), V'(2) and V(n) for n = 0 (mod 4): a diamond V'(0), V'(2) <-> V(4)
   glued to the half-line V(4) - V(8) - V(12) ...; all 2-cycles are zero
   except the two through V'(0) and V'(2) based at V(4), which are set equal;
   the two length-2 routes between V'(0) and V'(2) are zero.

Projectives are handled purely through their radical filtrations: layer l of
the projective with a given top is the multiset of endpoints of length-l
paths from the top surviving the relations, with the two nonzero 2-cycles at
V(4) identified.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Counter as CounterT, List, Tuple

from .sl2rep import SimpleHC, V, Vp, hc_tensor

Path = Tuple[SimpleHC, ...]


def block_of(s: SimpleHC) -> int:
    """Block number: 1 for odd V(n), 2 for n = 2 (mod 4), 3 for the diamond."""
    if s.primed:
        return 3
    if s.index % 2 == 1:
        return 1
    return 2 if s.index % 4 == 2 else 3


def arrows_from(s: SimpleHC) -> List[SimpleHC]:
    """Targets of the quiver arrows out of s (each arrow has multiplicity 1)."""
    if s.primed:
        return [V(4)]
    n = s.index
    if n % 2 == 1:
        targets = []
        if n - 4 >= 1:
            targets.append(V(n - 4))
        if n == 1:
            targets.append(V(3))
        if n == 3:
            targets.append(V(1))
        targets.append(V(n + 4))
        return sorted(targets)
    if n % 4 == 2:
        if n == 2:
            return [V(2), V(6)]  # loop, then along the half-line
        return [V(n - 4), V(n + 4)]
    # n = 0 (mod 4)
    if n == 4:
        return [Vp(0), Vp(2), V(8)]
    return [V(n - 4), V(n + 4)]


def ext_dim(s: SimpleHC, t: SimpleHC) -> int:
    """dim Ext^1 between simples: 1 exactly when the quiver has an arrow s -> t."""
    return 1 if t in arrows_from(s) else 0


# ---------------------------------------------------------------------------
# Path survival modulo the relations
# ---------------------------------------------------------------------------

_V4 = V(4)


def _triple_survives(u: SimpleHC, v: SimpleHC, w: SimpleHC) -> bool:
    # 2-cycles die, except the two at V(4) through the primed vertices
    if u == w:
        return w == _V4 and v.primed
    # the two length-2 routes between V'(0) and V'(2) are zero
    if u.primed and w.primed and v == _V4:
        return False
    return True


def _canonical(path: Path) -> Path:
    """Identify the two surviving 2-cycles at V(4): route the primed passage
    through V'(0)."""
    verts = list(path)
    for i in range(1, len(verts) - 1):
        if verts[i - 1] == _V4 and verts[i + 1] == _V4 and verts[i] == Vp(2):
            verts[i] = Vp(0)
    return tuple(verts)


@dataclass
class RadicalFiltration:
    """Radical layers of an indecomposable projective, down to a depth.

    ``layers[l]`` is the multiset of simples in radical layer l; layer 0 is
    the top.  Layers beyond ``depth`` are unspecified, not zero.
    """

    top: SimpleHC
    layers: List[CounterT[SimpleHC]]

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def composition_multiset(self) -> CounterT[SimpleHC]:
        total: CounterT[SimpleHC] = Counter()
        for layer in self.layers:
            total.update(layer)
        return total

    def describe(self) -> List[str]:
        lines = []
        for l, layer in enumerate(self.layers):
            labels = " + ".join(
                str(s) if m == 1 else f"{str(s)}^{m}"
                for s, m in sorted(layer.items())
            )
            lines.append(f"rad^{l}: {labels}")
        return lines


def radical_filtration(top: SimpleHC, depth: int) -> RadicalFiltration:
    """Layers of the projective cover of ``top`` by counting surviving paths."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    layers: List[CounterT[SimpleHC]] = [Counter({top: 1})]
    frontier = {(top,)}
    for _ in range(depth):
        nxt = set()
        for path in frontier:
            last = path[-1]
            for target in arrows_from(last):
                if len(path) >= 2 and not _triple_survives(path[-2], last, target):
                    continue
                nxt.add(_canonical(path + (target,)))
        frontier = nxt
        layers.append(Counter(path[-1] for path in frontier))
    return RadicalFiltration(top, layers)


def expected_filtration(top: SimpleHC, depth: int) -> RadicalFiltration:
    """Predicted radical layers, built from the two-branch picture.

    The right branch of P(V(k)) climbs V(k+4), V(k+8), ...; the left branch
    walks down the block until it bounces: through the V(3)-V(1) bend in the
    odd block, through the loop at V(2), or through the {V'(0), V'(2)} pair
    (which then merges into a single V(4)).  P(V'(0)) and P(V'(2)) are
    uniserial with layers V(4), V(8), V(12), ...  Used as an independent
    oracle against the path-counting computation.
    """
    layers: List[CounterT[SimpleHC]] = [Counter({top: 1})]
    if top.primed:
        for l in range(1, depth + 1):
            layers.append(Counter({V(4 * l): 1}))
        return RadicalFiltration(top, layers)

    k = top.index
    # walk the left branch one step per layer, remembering where we came from
    left: List[CounterT[SimpleHC]] = []
    prev: SimpleHC = top
    prev_was_loop = False
    cur = top
    for _ in range(depth):
        if cur == Vp(0):  # paired with Vp(2); both step to V(4)
            step: CounterT[SimpleHC] = Counter({V(4): 1})
            nxt = V(4)
        elif cur.index % 4 == 0 and not cur.primed and cur.index == 4 and prev == V(8):
            step = Counter({Vp(0): 1, Vp(2): 1})
            nxt = Vp(0)
        elif not cur.primed and cur.index == 2:
            if prev_was_loop:
                step = Counter({V(6): 1})
                nxt = V(6)
            else:
                step = Counter({V(2): 1})
                nxt = V(2)
        elif not cur.primed and cur.index % 2 == 1:
            if cur.index == 1:
                nxt = V(3) if prev != V(3) else V(5)
            elif cur.index == 3:
                nxt = V(1) if prev != V(1) else V(7)
            else:
                nxt = V(cur.index - 4) if prev != V(cur.index - 4) else V(cur.index + 4)
            step = Counter({nxt: 1})
        else:
            down = cur.index - 4
            if down >= 1 and prev != V(down):
                nxt = V(down)
            else:
                nxt = V(cur.index + 4)
            step = Counter({nxt: 1})
        left.append(step)
        prev_was_loop = (cur == V(2) and nxt == V(2))
        prev, cur = cur, nxt

    # special case: the top V(4) itself bounces immediately into the pair
    if k == 4:
        left = []
        chain = [Counter({Vp(0): 1, Vp(2): 1}), Counter({V(4): 1})]
        idx = 8
        while len(chain) < depth:
            chain.append(Counter({V(idx): 1}))
            idx += 4
        left = chain[:depth]

    for l in range(1, depth + 1):
        layer: CounterT[SimpleHC] = Counter()
        layer.update(left[l - 1])
        layer[V(k + 4 * l)] += 1
        layers.append(layer)
    return RadicalFiltration(top, layers)


# ---------------------------------------------------------------------------
# Decomposing induced modules and tensor products of projectives
# ---------------------------------------------------------------------------

def decompose_Q(k: int) -> CounterT[SimpleHC]:
    """Indecomposable summands of the reduced universal module Q(k).

    Returned as a multiset of tops of projective covers: the multiplicity of
    the projective with top V equals the multiplicity of L(k) among the
    finite-dimensional types of V, which yields the explicit staircase below.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    out: CounterT[SimpleHC] = Counter()
    if k % 2 == 1:
        out.update(V(j) for j in range(1, k + 1, 2))
        return out
    out[Vp(0) if k % 4 == 0 else Vp(2)] += 1
    out.update(V(j) for j in range(2, k + 1, 2))
    return out


def tensor_projective(k: int, top: SimpleHC) -> CounterT[SimpleHC]:
    """Summands of L(k) (x) P(top), as a multiset of tops.

    Tensoring with a finite-dimensional module is exact and preserves
    projectives, so the multiplicity of the projective with top W equals the
    multiplicity of W in L(k) (x) top.
    """
    return hc_tensor(k, top)
