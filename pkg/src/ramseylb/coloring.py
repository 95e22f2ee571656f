"""Complete-graph edge colorings and their versioned text format.

Three constructions are provided: the (q+1)-coloring of self-orthogonal
vectors by scalar product (nonzero products give deterministic colors,
orthogonal pairs flip a pair-keyed coin between the two extra colors),
the two-coloring of uniformly sampled binary vectors by product parity,
and quadratic-residue colorings on a prime vertex set.

Coin flips are keyed by (seed, unordered pair identity), never by a
sequential stream, so the coloring induced on any vertex subset equals
the coloring built directly on that subset with the same seed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dataclass_field
from typing import Iterator, Sequence

from .errors import CapacityError, DimensionError, FormatError, ParameterError
from .field import FieldVector, PrimeModulus, dot, is_isotropic, is_prime
from .rng import derive_seed, make_rng, pair_coin

FORMAT_MAGIC = "ramsey-coloring 1"


@dataclass(frozen=True)
class EdgeColoring:
    """A complete edge coloring of K_n with colors in [1, num_colors].

    ``rows[i]`` holds the colors of edges (i, i+1), ..., (i, n-1).
    Provenance lines record how the coloring was built; they are carried
    into the file format as comments and ignored by equality.
    """

    n: int
    num_colors: int
    rows: tuple[tuple[int, ...], ...]
    provenance: tuple[str, ...] = dataclass_field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParameterError("a coloring needs at least one vertex")
        if self.num_colors < 1:
            raise ParameterError("a coloring needs at least one color")
        if len(self.rows) != self.n - 1:
            raise ParameterError(f"expected {self.n - 1} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if len(row) != self.n - 1 - i:
                raise ParameterError(f"row {i} has {len(row)} colors, expected {self.n - 1 - i}")
            for c in row:
                if not 1 <= c <= self.num_colors:
                    raise ParameterError(f"color {c} outside [1, {self.num_colors}]")

    def color(self, i: int, j: int) -> int:
        """Color of the edge {i, j}; symmetric in its arguments."""
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise ParameterError(f"vertex index outside [0, {self.n})")
        if i == j:
            raise ParameterError("self-loops are not colored")
        if i > j:
            i, j = j, i
        return self.rows[i][j - i - 1]

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        for i in range(self.n - 1):
            for off, c in enumerate(self.rows[i]):
                yield i, i + 1 + off, c

    def color_class_bitsets(self, color: int) -> list[int]:
        """Adjacency of the chosen color class as per-vertex bitmasks."""
        adj = [0] * self.n
        for i, j, c in self.pairs():
            if c == color:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return adj

    def induced(self, indices: Sequence[int]) -> "EdgeColoring":
        """The coloring restricted to the given vertices, in the given order."""
        idx = list(indices)
        if not idx:
            raise ParameterError("subset must be non-empty")
        if len(set(idx)) != len(idx):
            raise ParameterError("duplicate vertex in subset")
        k = len(idx)
        rows = tuple(
            tuple(self.color(idx[a], idx[b]) for b in range(a + 1, k)) for a in range(k - 1)
        )
        note = f"induced on {k} of {self.n} vertices"
        return EdgeColoring(k, self.num_colors, rows, self.provenance + (note,))

    def to_text(self) -> str:
        lines = [FORMAT_MAGIC, f"n={self.n} colors={self.num_colors}"]
        lines.extend(f"# {note}" for note in self.provenance)
        lines.extend(" ".join(str(c) for c in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "EdgeColoring":
        lines = text.splitlines()
        if not lines or lines[0] != FORMAT_MAGIC:
            raise FormatError("missing coloring magic line")
        if len(lines) < 2:
            raise FormatError("missing coloring header line")
        m = re.fullmatch(r"n=(\d+) colors=(\d+)", lines[1])
        if not m:
            raise FormatError(f"bad coloring header: {lines[1]!r}")
        n, num_colors = int(m.group(1)), int(m.group(2))
        pos = 2
        provenance: list[str] = []
        while pos < len(lines) and lines[pos].startswith("#"):
            raw = lines[pos]
            provenance.append(raw[2:] if raw.startswith("# ") else raw[1:])
            pos += 1
        data = lines[pos:]
        if len(data) != n - 1:
            raise FormatError(f"expected {n - 1} data lines, found {len(data)}")
        rows = []
        for i, line in enumerate(data):
            parts = line.split()
            if len(parts) != n - 1 - i:
                raise FormatError(f"data line {i + 1}: expected {n - 1 - i} colors, found {len(parts)}")
            try:
                rows.append(tuple(int(x) for x in parts))
            except ValueError as exc:
                raise FormatError(f"non-integer color on data line {i + 1}") from exc
        try:
            return cls(n, num_colors, tuple(rows), tuple(provenance))
        except ParameterError as exc:
            raise FormatError(str(exc)) from exc


@dataclass(frozen=True)
class ConstructionParams:
    """Parameters of the (q+1)-color construction.

    The dimension must be nonzero mod q; that assumption is what caps
    the clique sizes of the deterministic color classes.
    """

    modulus: PrimeModulus
    t: int
    seed: int
    n: int

    def __post_init__(self) -> None:
        if self.t < 1 or self.t % self.modulus.q == 0:
            raise ParameterError(f"dimension t={self.t} must be nonzero mod q={self.modulus.q}")
        if self.n < 2:
            raise ParameterError("need at least two vertices")


def pair_identity(u: FieldVector, v: FieldVector) -> str:
    """Order-free identity string for an unordered vector pair."""
    a, b = sorted((u, v), key=lambda w: w.coords)
    return a.text_form() + "|" + b.text_form()


def edge_color(u: FieldVector, v: FieldVector, seed: int) -> int:
    """Color of the pair {u, v}.

    The scalar product when it is nonzero; otherwise q plus a coin
    keyed by (seed, pair identity), so the choice between the two coin
    colors is independent per pair yet reproducible.
    """
    if u == v:
        raise ParameterError("edge endpoints must differ")
    if not (is_isotropic(u) and is_isotropic(v)):
        raise ParameterError("edge endpoints must be self-orthogonal")
    d = dot(u, v)
    if d != 0:
        return d
    return u.q + pair_coin(seed, pair_identity(u, v))


def build_field_coloring(params: ConstructionParams, vertices: Sequence[FieldVector]) -> EdgeColoring:
    """The (q+1)-coloring on the given distinct self-orthogonal vectors.

    A pure function of (params, vertices): rebuilding with the same
    arguments is byte-identical, and any vertex subset colors to the
    restriction of the full coloring.
    """
    verts = list(vertices)
    q = params.modulus.q
    if len(verts) != params.n:
        raise ParameterError(f"got {len(verts)} vertices, params say n={params.n}")
    seen: set[tuple[int, ...]] = set()
    for v in verts:
        if v.modulus != params.modulus or len(v) != params.t:
            raise DimensionError("vertex does not match the construction's modulus or dimension")
        if not is_isotropic(v):
            raise ParameterError(f"vertex is not self-orthogonal: {v.coords}")
        if v.coords in seen:
            raise ParameterError(f"duplicate vertex: {v.coords}")
        seen.add(v.coords)
    rows = tuple(
        tuple(edge_color(verts[i], verts[j], params.seed) for j in range(i + 1, len(verts)))
        for i in range(len(verts) - 1)
    )
    prov = (f"field-coloring q={q} t={params.t} n={params.n} seed={params.seed}",)
    return EdgeColoring(params.n, q + 1, rows, prov)


def sample_binary_vectors(length: int, n: int, seed: int) -> list[FieldVector]:
    """n distinct uniform vectors from F_2^length, rejection-sampled."""
    if length < 1:
        raise ParameterError("vector length must be positive")
    if n > 2**length:
        raise CapacityError(f"cannot pick {n} distinct vectors from F_2^{length}")
    rng = make_rng(derive_seed(seed, "binary-vertices"))
    mod2 = PrimeModulus(2)
    chosen: list[FieldVector] = []
    seen: set[tuple[int, ...]] = set()
    while len(chosen) < n:
        coords = tuple(rng.randrange(2) for _ in range(length))
        if coords not in seen:
            seen.add(coords)
            chosen.append(FieldVector(mod2, coords))
    return chosen


def dot_two_coloring(vertices: Sequence[FieldVector], provenance: tuple[str, ...] = ()) -> EdgeColoring:
    """Two colors by scalar product: 1 when orthogonal, else 2."""
    verts = list(vertices)
    if len(verts) < 2:
        raise ParameterError("need at least two vertices")
    if len({v.coords for v in verts}) != len(verts):
        raise ParameterError("duplicate vertices")
    rows = tuple(
        tuple(1 if dot(verts[i], verts[j]) == 0 else 2 for j in range(i + 1, len(verts)))
        for i in range(len(verts) - 1)
    )
    return EdgeColoring(len(verts), 2, rows, provenance)


def build_two_color(t: int, n: int, seed: int) -> EdgeColoring:
    """Two-coloring of n sampled vectors of F_2^(2t) by product parity.

    Vertices are uniform over the whole space, with no self-orthogonality
    filter.
    """
    if t < 1:
        raise ParameterError("t must be positive")
    if n < 2:
        raise ParameterError("need at least two vertices")
    verts = sample_binary_vectors(2 * t, n, seed)
    return dot_two_coloring(verts, (f"two-color t={t} n={n} seed={seed}",))


def build_paley(p: int) -> EdgeColoring:
    """Quadratic-residue two-coloring on vertices 0..p-1.

    Requires p = 1 mod 4 so that -1 is a residue and adjacency is
    symmetric.
    """
    if not is_prime(p):
        raise ParameterError(f"{p} is not prime")
    if p % 4 != 1:
        raise ParameterError(f"{p} is {p % 4} mod 4; need 1 mod 4 for a symmetric coloring")
    residues = {x * x % p for x in range(1, p)}
    rows = tuple(
        tuple(1 if (j - i) % p in residues else 2 for j in range(i + 1, p)) for i in range(p - 1)
    )
    return EdgeColoring(p, 2, rows, (f"paley p={p}",))
