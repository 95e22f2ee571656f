"""The ground set of self-orthogonal vectors: enumeration and sampling."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from random import Random

from .errors import CapacityError, DimensionError, ParameterError, ResourceCapError
from .field import FieldVector, PrimeModulus, is_isotropic

DEFAULT_ENUM_CAP = 10**6


@dataclass(frozen=True)
class IsotropicSet:
    """An ordered, duplicate-free collection of self-orthogonal vectors.

    ``exhaustive`` marks the full ground set for (q, t); only then do the
    cardinality bounds q^(t-2) <= count <= q^t apply.
    """

    modulus: PrimeModulus
    dimension: int
    vectors: tuple[FieldVector, ...]
    exhaustive: bool

    def __post_init__(self) -> None:
        q = self.modulus.q
        seen: set[tuple[int, ...]] = set()
        for v in self.vectors:
            if v.modulus != self.modulus or len(v) != self.dimension:
                raise DimensionError("vector does not match the set's modulus or dimension")
            if not is_isotropic(v):
                raise ParameterError(f"non-self-orthogonal vector in ground set: {v.coords}")
            if v.coords in seen:
                raise ParameterError(f"duplicate vector in ground set: {v.coords}")
            seen.add(v.coords)
        if self.exhaustive:
            count = len(self.vectors)
            full = q**self.dimension
            if not (count * q * q >= full and count <= full):
                raise ParameterError(
                    f"exhaustive set of size {count} violates cardinality bounds for q={q}, t={self.dimension}"
                )

    def __len__(self) -> int:
        return len(self.vectors)


def enumerate_isotropic(modulus: PrimeModulus, t: int, cap: int = DEFAULT_ENUM_CAP) -> IsotropicSet:
    """All vectors of F_q^t orthogonal to themselves, in lexicographic order."""
    q = modulus.q
    if t < 1:
        raise ParameterError("dimension t must be positive")
    if q**t > cap:
        raise ResourceCapError(f"q^t = {q**t} exceeds enumeration cap {cap}")
    vectors = [
        FieldVector(modulus, coords)
        for coords in itertools.product(range(q), repeat=t)
        if sum(c * c for c in coords) % q == 0
    ]
    return IsotropicSet(modulus, t, tuple(vectors), exhaustive=True)


def sample_isotropic(modulus: PrimeModulus, t: int, rng: Random) -> FieldVector:
    """Uniform member of the ground set, by rejection sampling."""
    q = modulus.q
    if t < 1:
        raise ParameterError("dimension t must be positive")
    while True:
        coords = tuple(rng.randrange(q) for _ in range(t))
        if sum(c * c for c in coords) % q == 0:
            return FieldVector(modulus, coords)


def sample_distinct(ground: IsotropicSet, n: int, rng: Random) -> list[FieldVector]:
    """Uniformly random n-subset of the ground set, in sampling order."""
    if n < 0:
        raise ParameterError("sample size must be non-negative")
    if n > len(ground):
        raise CapacityError(f"requested {n} distinct vectors from a set of {len(ground)}")
    return rng.sample(ground.vectors, n)


def bernoulli_subset(ground: IsotropicSet, p, rng: Random) -> list[FieldVector]:
    """Retain each vector independently with probability p."""
    if not 0 <= p <= 1:
        raise ParameterError(f"probability {p} outside [0, 1]")
    return [v for v in ground.vectors if rng.random() < p]
