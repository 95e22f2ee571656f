"""Exact monochromatic clique search and structural certificates.

The clique solver is a deterministic branch-and-bound over bitset
adjacency: vertices are relabeled by a minimum-degree peeling order,
candidates at every node are greedily colored, and branches whose color
bound cannot beat the incumbent are cut.  No heuristic shortcuts: the
returned witness is a true maximum clique, and a node cap turns runaway
searches into an explicit error rather than a silent truncation.

The certificates tie cliques back to linear algebra: determinants of
i-clique Gram matrices, ranks of potential cliques, and the per-rank
counting bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import EdgeColoring
from .errors import DimensionError, ParameterError, ResourceCapError
from .field import (
    FieldVector,
    PrimeModulus,
    det_mod,
    dot,
    is_isotropic,
    is_prime,
    kernel_vector,
    rank,
)
from .isotropic import IsotropicSet

DEFAULT_NODE_CAP = 10**7


@dataclass(frozen=True)
class CliqueWitness:
    """A monochromatic clique: its color and sorted vertex indices."""

    color: int
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


def _degeneracy_order(adj: list[int], n: int) -> list[int]:
    """Minimum-degree peeling order with lowest-index tie-breaking."""
    deg = [adj[v].bit_count() for v in range(n)]
    alive = [True] * n
    order: list[int] = []
    for _ in range(n):
        v = min((u for u in range(n) if alive[u]), key=lambda u: (deg[u], u))
        alive[v] = False
        order.append(v)
        m = adj[v]
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if alive[u]:
                deg[u] -= 1
            m ^= low
    return order


def _max_clique_mask(adj: list[int], cap: int) -> int:
    """Bitmask of one maximum clique, found deterministically."""
    n = len(adj)
    if n == 0:
        return 0
    best_size = 0
    best_mask = 0
    visited = 0

    def expand(size: int, mask: int, cand: int) -> None:
        nonlocal best_size, best_mask, visited
        visited += 1
        if visited > cap:
            raise ResourceCapError(f"clique search exceeded {cap} nodes")
        # Greedy coloring of the candidates, ascending vertex index; a
        # vertex in class c cannot sit in a clique of more than c
        # candidates, which gives the pruning bound below.
        classes: list[int] = []
        seq: list[tuple[int, int]] = []
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            for ci in range(len(classes)):
                if not adj[v] & classes[ci]:
                    classes[ci] |= low
                    seq.append((v, ci + 1))
                    break
            else:
                classes.append(low)
                seq.append((v, len(classes)))
        seq.sort(key=lambda vc: vc[1])
        remaining = cand
        for v, bound in reversed(seq):
            if size + bound <= best_size:
                return
            vbit = 1 << v
            new_cand = remaining & adj[v]
            if new_cand:
                expand(size + 1, mask | vbit, new_cand)
            elif size + 1 > best_size:
                best_size = size + 1
                best_mask = mask | vbit
            remaining &= ~vbit

    expand(0, 0, (1 << n) - 1)
    return best_mask


def max_monochromatic_clique(
    coloring: EdgeColoring, color: int, cap: int = DEFAULT_NODE_CAP
) -> CliqueWitness:
    """A maximum clique of the chosen color class, exact and deterministic."""
    if not 1 <= color <= coloring.num_colors:
        raise ParameterError(f"color {color} outside [1, {coloring.num_colors}]")
    n = coloring.n
    adj = coloring.color_class_bitsets(color)
    order = _degeneracy_order(adj, n)
    pos = [0] * n
    for idx, v in enumerate(order):
        pos[v] = idx
    radj = [0] * n
    for v in range(n):
        m = adj[v]
        acc = 0
        while m:
            low = m & -m
            acc |= 1 << pos[low.bit_length() - 1]
            m ^= low
        radj[pos[v]] = acc
    mask = _max_clique_mask(radj, cap)
    verts = []
    while mask:
        low = mask & -mask
        verts.append(order[low.bit_length() - 1])
        mask ^= low
    return CliqueWitness(color=color, vertices=tuple(sorted(verts)))


def clique_gram_det(i: int, s: int, modulus: PrimeModulus) -> int:
    """Determinant over F_q of the Gram matrix of an i-clique of size s.

    The matrix has zero diagonal (self-orthogonal vectors) and every
    off-diagonal entry equal to i.  Computed by elimination; it vanishes
    exactly when s is 1 mod q.
    """
    q = modulus.q
    if not 1 <= i <= q - 1:
        raise ParameterError(f"color value {i} outside [1, {q - 1}]")
    if s < 1:
        raise ParameterError("matrix size must be positive")
    mat = [[0 if r == c else i for c in range(s)] for r in range(s)]
    return det_mod(mat, q)


@dataclass(frozen=True)
class IndependenceCertificate:
    """Evidence that an i-clique's vectors are (nearly) linearly independent.

    When the size is not 1 mod q the Gram determinant is nonzero and
    the rank equals the size.  Otherwise the same argument applies after
    dropping one vector (``dropped_vertex``), and a nonzero Gram-kernel
    witness records why the full matrix is singular.
    """

    color: int
    size: int
    gram_det: int
    rank: int
    nullspace_witness: tuple[int, ...]
    dropped_vertex: bool


def independence_certificate(vectors: Sequence[FieldVector], i: int) -> IndependenceCertificate:
    """Certify that pairwise product i (nonzero) forces independence."""
    vs = list(vectors)
    if not vs:
        raise ParameterError("empty clique")
    modulus = vs[0].modulus
    q = modulus.q
    if not 1 <= i <= q - 1:
        raise ParameterError(f"color value {i} outside [1, {q - 1}]")
    for v in vs:
        if v.modulus != modulus or len(v) != len(vs[0]):
            raise DimensionError("clique vectors differ in modulus or length")
        if not is_isotropic(v):
            raise ParameterError(f"clique vector is not self-orthogonal: {v.coords}")
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            d = dot(vs[a], vs[b])
            if d != i:
                raise ParameterError(f"pair ({a}, {b}) has product {d}, not {i}; not an i-clique")
    s = len(vs)
    det = clique_gram_det(i, s, modulus)
    r = rank(vs)
    dropped = s % q == 1
    if dropped:
        mat = [[0 if a == b else i for b in range(s)] for a in range(s)]
        witness = kernel_vector(mat, q)
        assert witness is not None and any(witness)
        assert r >= s - 1
    else:
        witness = ()
        assert det != 0 and r == s
    return IndependenceCertificate(i, s, det, r, tuple(witness), dropped)


@dataclass(frozen=True)
class PotentialClique:
    """t self-orthogonal vectors with all pairwise products zero."""

    vectors: tuple[FieldVector, ...]
    rank: int
    gram: tuple[tuple[int, ...], ...]


def gram_check(vectors: Sequence[FieldVector]) -> bool:
    """True iff the full Gram matrix, diagonal included, vanishes."""
    vs = list(vectors)
    for a in range(len(vs)):
        for b in range(a, len(vs)):
            if dot(vs[a], vs[b]) != 0:
                return False
    return True


def enumerate_potential_cliques(
    ground: IsotropicSet, t: int, cap: int = DEFAULT_NODE_CAP
) -> list[PotentialClique]:
    """All t-subsets of the exhaustive ground set with pairwise product zero.

    Orthogonality-pruned backtracking in lexicographic order: candidates
    are restricted to vectors orthogonal to everything already chosen.
    """
    if not ground.exhaustive:
        raise ParameterError("potential-clique enumeration needs the exhaustive ground set")
    if t < 1:
        raise ParameterError("clique size must be positive")
    vecs = ground.vectors
    m = len(vecs)
    orth = [0] * m
    for a in range(m):
        for b in range(a + 1, m):
            if dot(vecs[a], vecs[b]) == 0:
                orth[a] |= 1 << b
                orth[b] |= 1 << a
    found: list[PotentialClique] = []
    visited = 0

    def rec(chosen: list[int], cand: int) -> None:
        nonlocal visited
        visited += 1
        if visited > cap:
            raise ResourceCapError(f"potential-clique enumeration exceeded {cap} nodes")
        if len(chosen) == t:
            vs = tuple(vecs[k] for k in chosen)
            g = tuple(tuple(dot(x, y) for y in vs) for x in vs)
            r = rank(vs)
            assert r <= t // 2
            found.append(PotentialClique(vs, r, g))
            return
        need = t - len(chosen)
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            chosen.append(v)
            rec(chosen, cand & orth[v])
            chosen.pop()

    rec([], (1 << m) - 1)
    return found


def rank_count_bound(q: int, t: int, r: int) -> int:
    """q^(2tr - r(3r-1)/2), the ordered upper bound on rank-r potential cliques.

    Ordered convention: the first r vectors are linearly independent and
    the remaining t-r lie in their span.
    """
    if not is_prime(q):
        raise ParameterError(f"{q} is not prime")
    if not 0 <= r <= t:
        raise ParameterError(f"rank {r} outside [0, {t}]")
    exponent = 2 * t * r - r * (3 * r - 1) // 2
    assert exponent >= 0
    return q**exponent


def potential_clique_bound(q: int, t: int) -> int:
    """Sum of the per-rank bounds over the feasible ranks 0..floor(t/2)."""
    if t < 1:
        raise ParameterError("t must be positive")
    return sum(rank_count_bound(q, t, r) for r in range(t // 2 + 1))
