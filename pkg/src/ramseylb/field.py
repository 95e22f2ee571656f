"""Arithmetic over prime fields F_q: vectors, dot products, elimination.

Field elements are canonical integers in [0, q); every operation reduces
eagerly so equality and text serialization are bit-exact.  Dense linear
algebra runs by Gaussian elimination on small numpy integer matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DimensionError, FormatError, ParameterError


def is_prime(n: int) -> bool:
    """Trial division, adequate for desk-scale moduli."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeModulus:
    """A prime modulus q; composite values are rejected at construction."""

    q: int

    def __post_init__(self) -> None:
        if not is_prime(self.q):
            raise ParameterError(f"modulus must be prime, got {self.q}")


@dataclass(frozen=True)
class FieldVector:
    """A vector over F_q with coordinates reduced into [0, q)."""

    modulus: PrimeModulus
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) == 0:
            raise DimensionError("vector must have at least one coordinate")
        q = self.modulus.q
        object.__setattr__(self, "coords", tuple(int(c) % q for c in self.coords))

    @property
    def q(self) -> int:
        return self.modulus.q

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "FieldVector") -> "FieldVector":
        _check_compatible(self, other)
        q = self.q
        return FieldVector(
            self.modulus, tuple((a + b) % q for a, b in zip(self.coords, other.coords))
        )

    def scaled(self, c: int) -> "FieldVector":
        q = self.q
        return FieldVector(self.modulus, tuple(c * a % q for a in self.coords))

    def text_form(self) -> str:
        """``q t c1 ... ct``, the serialization used inside file formats."""
        return f"{self.q} {len(self.coords)} " + " ".join(str(c) for c in self.coords)

    @classmethod
    def from_text(cls, line: str) -> "FieldVector":
        parts = line.split()
        if len(parts) < 3:
            raise FormatError(f"vector line needs q, t and coordinates: {line!r}")
        try:
            q, t = int(parts[0]), int(parts[1])
            coords = tuple(int(x) for x in parts[2:])
        except ValueError as exc:
            raise FormatError(f"non-integer token in vector line: {line!r}") from exc
        if len(coords) != t:
            raise FormatError(f"vector line declares t={t} but has {len(coords)} coordinates")
        if not is_prime(q):
            raise FormatError(f"vector line has non-prime modulus {q}")
        if any(not 0 <= c < q for c in coords):
            raise FormatError(f"vector coordinate outside [0, {q}): {line!r}")
        return cls(PrimeModulus(q), coords)


def _check_compatible(u: FieldVector, v: FieldVector) -> None:
    if u.modulus != v.modulus or len(u) != len(v):
        raise DimensionError("vectors differ in modulus or length")


def dot(u: FieldVector, v: FieldVector) -> int:
    """Scalar product of u and v in F_q."""
    _check_compatible(u, v)
    return sum(a * b for a, b in zip(u.coords, v.coords)) % u.q


def is_isotropic(v: FieldVector) -> bool:
    """True iff v is orthogonal to itself."""
    return dot(v, v) == 0


def row_echelon(mat: np.ndarray | Sequence[Sequence[int]], q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_q.

    Returns the reduced matrix together with the pivot column indices;
    the number of pivots is the rank.
    """
    m = np.array(mat, dtype=np.int64) % q
    n_rows, n_cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        sel = -1
        for rr in range(r, n_rows):
            if m[rr, c]:
                sel = rr
                break
        if sel < 0:
            continue
        if sel != r:
            m[[r, sel]] = m[[sel, r]]
        m[r] = m[r] * pow(int(m[r, c]), q - 2, q) % q
        for rr in range(n_rows):
            if rr != r and m[rr, c]:
                m[rr] = (m[rr] - m[rr, c] * m[r]) % q
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rank(vectors: Sequence[FieldVector]) -> int:
    """Rank over F_q by elimination; 0 for the empty list."""
    vs = list(vectors)
    if not vs:
        return 0
    first = vs[0]
    for v in vs[1:]:
        _check_compatible(first, v)
    mat = np.array([v.coords for v in vs], dtype=np.int64)
    _, pivots = row_echelon(mat, first.q)
    return len(pivots)


def det_mod(mat: np.ndarray | Sequence[Sequence[int]], q: int) -> int:
    """Determinant over F_q by forward elimination with row swaps."""
    m = np.array(mat, dtype=np.int64) % q
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError("determinant needs a square matrix")
    n = m.shape[0]
    det = 1
    for c in range(n):
        sel = -1
        for r in range(c, n):
            if m[r, c]:
                sel = r
                break
        if sel < 0:
            return 0
        if sel != c:
            m[[c, sel]] = m[[sel, c]]
            det = -det
        piv = int(m[c, c])
        det = det * piv % q
        inv = pow(piv, q - 2, q)
        for r in range(c + 1, n):
            if m[r, c]:
                f = int(m[r, c]) * inv % q
                m[r] = (m[r] - f * m[c]) % q
    return det % q


def kernel_vector(mat: np.ndarray | Sequence[Sequence[int]], q: int) -> tuple[int, ...] | None:
    """A nonzero kernel vector over F_q, or None if the matrix is injective.

    Canonical choice: the lowest free column is set to 1, all other free
    columns to 0.
    """
    m = np.array(mat, dtype=np.int64) % q
    n_cols = m.shape[1]
    rref, pivots = row_echelon(m, q)
    free = [c for c in range(n_cols) if c not in pivots]
    if not free:
        return None
    f = free[0]
    x = [0] * n_cols
    x[f] = 1
    for row_i, pc in enumerate(pivots):
        x[pc] = int(-rref[row_i, f]) % q
    return tuple(x)


@lru_cache(maxsize=None)
def _smallest_sqrt(q: int) -> dict[int, int]:
    # descending y so the smallest square root wins
    table: dict[int, int] = {}
    for y in range(q - 1, -1, -1):
        table[y * y % q] = y
    return table


def sum_of_two_squares(a: int, modulus: PrimeModulus) -> tuple[int, int]:
    """Lexicographically smallest (x, y) with x^2 + y^2 = a in F_q.

    A solution exists for every residue a when q is prime.
    """
    q = modulus.q
    if not 0 <= a < q:
        raise ParameterError(f"element {a} outside [0, {q})")
    table = _smallest_sqrt(q)
    for x in range(q):
        y = table.get((a - x * x) % q)
        if y is not None:
            return (x, y)
    raise AssertionError("unreachable: every residue is a sum of two squares")
