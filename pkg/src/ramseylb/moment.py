"""First-moment accounting for monochromatic potential cliques and the
seeded search for witness colorings.

The moment report is an upper bound since it uses the per-rank counting
bound in place of the true potential-clique count.  An exact enumerator
and a Monte Carlo estimator exist alongside it so the analytic pieces
can be cross-checked by independent computation at small sizes.

Witness certificates are self-contained: the stored seed, attempt index
and vertex list reproduce the coloring byte for byte, so a verifier
needs nothing beyond this module to re-check a claimed bound instance.
"""

from __future__ import annotations

import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .bounds import SlackLike, as_slack, floor_power_product
from .cliques import (
    DEFAULT_NODE_CAP,
    enumerate_potential_cliques,
    max_monochromatic_clique,
    potential_clique_bound,
)
from .coloring import ConstructionParams, EdgeColoring, build_field_coloring, pair_identity
from .errors import CapacityError, FormatError, ParameterError, RamseyLBError, ResourceCapError
from .field import FieldVector, PrimeModulus
from .isotropic import (
    DEFAULT_ENUM_CAP,
    IsotropicSet,
    bernoulli_subset,
    enumerate_isotropic,
    sample_distinct,
)
from .rng import derive_seed, make_rng, pair_coin

CERTIFICATE_MAGIC = "ramsey-certificate 1"


def recommended_n(q: int, t: int, slack: SlackLike = 0) -> int:
    """floor(2^(t/2) * q^(3t/8 + slack)), the target vertex count."""
    PrimeModulus(q)
    if t < 0:
        raise ParameterError("t must be non-negative")
    s = as_slack(slack)
    return floor_power_product([(2, Fraction(t, 2)), (q, Fraction(3 * t, 8) + s)])


@dataclass(frozen=True)
class MomentReport:
    """Upper bound on the expected number of monochromatic potential cliques
    after keeping each ground-set vector with probability p = 2n/|V|."""

    q: int
    t: int
    n: int
    ground_size: int
    p: Fraction
    expected_upper: Fraction
    log2_expected: float


def expected_mono_count(q: int, t: int, n: int, ground_size: int) -> MomentReport:
    """Moment report at p = 2n/ground_size; fails when p would exceed 1."""
    PrimeModulus(q)
    if t < 1 or n < 1 or ground_size < 1:
        raise ParameterError("t, n and the ground size must be positive")
    p = Fraction(2 * n, ground_size)
    if p > 1:
        raise ParameterError(f"n={n} too large for a ground set of size {ground_size}")
    bound = potential_clique_bound(q, t)
    pairs = math.comb(t, 2)
    expected = p**t * Fraction(2) ** (1 - pairs) * bound
    log2_expected = (
        t * (math.log2(p.numerator) - math.log2(p.denominator)) + (1 - pairs) + math.log2(bound)
    )
    return MomentReport(q, t, n, ground_size, p, expected, log2_expected)


def exact_mono_expectation(
    q: int,
    t: int,
    p: Union[Fraction, float, int],
    subset_cap: int = 20,
    enum_cap: int = DEFAULT_ENUM_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
) -> Fraction:
    """Exact expectation of surviving monochromatic potential cliques.

    Brute force: every subset of the ground set is enumerated with its
    Bernoulli weight, and for each subset every coin assignment on the
    subset's orthogonal pairs is enumerated.  Exponential; guarded by
    subset_cap.
    """
    modulus = PrimeModulus(q)
    pf = Fraction(p)
    if not 0 <= pf <= 1:
        raise ParameterError(f"probability {p} outside [0, 1]")
    ground = enumerate_isotropic(modulus, t, cap=enum_cap)
    m = len(ground)
    if m > subset_cap:
        raise ResourceCapError(f"{m} vectors is beyond exact subset enumeration (cap {subset_cap})")
    cliques = enumerate_potential_cliques(ground, t, cap=node_cap)
    index = {v.coords: i for i, v in enumerate(ground.vectors)}
    clique_masks = []
    clique_pairs = []
    for c in cliques:
        ids = sorted(index[v.coords] for v in c.vectors)
        mask = 0
        for i in ids:
            mask |= 1 << i
        clique_masks.append(mask)
        clique_pairs.append([(a, b) for pos, a in enumerate(ids) for b in ids[pos + 1 :]])
    from .field import dot  # local import keeps module header lean

    opairs = [
        (a, b)
        for a in range(m)
        for b in range(a + 1, m)
        if dot(ground.vectors[a], ground.vectors[b]) == 0
    ]
    total = Fraction(0)
    for smask in range(1 << m):
        live = [ci for ci, cm in enumerate(clique_masks) if cm & smask == cm]
        if not live:
            continue
        bits = smask.bit_count()
        wsub = pf**bits * (1 - pf) ** (m - bits)
        sub_pairs = [pr for pr in opairs if smask >> pr[0] & 1 and smask >> pr[1] & 1]
        z = len(sub_pairs)
        pos_of = {pr: j for j, pr in enumerate(sub_pairs)}
        live_bits = []
        for ci in live:
            acc = 0
            for pr in clique_pairs[ci]:
                acc |= 1 << pos_of[pr]
            live_bits.append(acc)
        mono_total = 0
        for coins in range(1 << z):
            for pb in live_bits:
                masked = coins & pb
                if masked == 0 or masked == pb:
                    mono_total += 1
        total += wsub * Fraction(mono_total, 2**z)
    return total


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    trials: int


def monte_carlo_mono_count(
    q: int,
    t: int,
    n_trials: int,
    p: Union[Fraction, float, int],
    seed: int,
    enum_cap: int = DEFAULT_ENUM_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
) -> MonteCarloEstimate:
    """Empirical mean count of surviving monochromatic potential cliques.

    Each trial draws a fresh Bernoulli-p subset and a fresh pair-keyed
    coin seed, both derived from (seed, trial index).
    """
    modulus = PrimeModulus(q)
    if n_trials < 1:
        raise ParameterError("need at least one trial")
    if not 0 <= p <= 1:
        raise ParameterError(f"probability {p} outside [0, 1]")
    ground = enumerate_isotropic(modulus, t, cap=enum_cap)
    cliques = enumerate_potential_cliques(ground, t, cap=node_cap)
    clique_pair_ids = [
        tuple(
            pair_identity(c.vectors[a], c.vectors[b])
            for a in range(len(c.vectors))
            for b in range(a + 1, len(c.vectors))
        )
        for c in cliques
    ]
    counts = []
    for k in range(n_trials):
        subset = bernoulli_subset(ground, p, make_rng(derive_seed(seed, "mc-subset", k)))
        kept = {v.coords for v in subset}
        coin_seed = derive_seed(seed, "mc-coins", k)
        cnt = 0
        for c, pids in zip(cliques, clique_pair_ids):
            if all(v.coords in kept for v in c.vectors):
                flips = {pair_coin(coin_seed, pid) for pid in pids}
                if len(flips) == 1:
                    cnt += 1
        counts.append(cnt)
    mean = sum(counts) / n_trials
    stderr = 0.0
    if n_trials > 1:
        stderr = statistics.stdev(counts) / math.sqrt(n_trials)
    return MonteCarloEstimate(mean, stderr, n_trials)


@dataclass(frozen=True)
class AttemptFailure:
    """One failed attempt: the first color carrying a clique of size >= t."""

    attempt: int
    color: int
    clique_size: int


@dataclass(frozen=True)
class WitnessSearchFailure:
    """Every attempt produced a monochromatic clique of size >= t.

    Absence of a witness at small scale refutes nothing; this is a
    report, not an error.
    """

    q: int
    t: int
    n: int
    seed: int
    failures: tuple[AttemptFailure, ...]


@dataclass(frozen=True)
class WitnessCertificate:
    """Self-contained record of a coloring of K_n with no monochromatic
    clique of order t, proving a concrete lower-bound instance."""

    q: int
    t: int
    num_colors: int
    n: int
    seed: int
    attempt: int
    vectors: tuple[FieldVector, ...]
    coloring_text: str
    max_clique_sizes: tuple[int, ...]
    verdict: str

    @property
    def coloring(self) -> EdgeColoring:
        return EdgeColoring.from_text(self.coloring_text)


def attempt_seed(seed: int, attempt: int) -> int:
    """Seed of one search attempt: a stable hash of (master seed, index)."""
    return derive_seed(seed, "attempt", attempt)


def _run_attempt(q, t, ground, n, seed, attempt, node_cap):
    sk = attempt_seed(seed, attempt)
    verts = sample_distinct(ground, n, make_rng(sk))
    params = ConstructionParams(PrimeModulus(q), t, sk, n)
    col = build_field_coloring(params, verts)
    sizes = tuple(max_monochromatic_clique(col, c, node_cap).size for c in range(1, q + 2))
    return verts, col, sizes


def _attempt_sizes_worker(q, t, coords, n, seed, attempt, node_cap):
    modulus = PrimeModulus(q)
    ground = IsotropicSet(
        modulus, t, tuple(FieldVector(modulus, c) for c in coords), exhaustive=True
    )
    _, _, sizes = _run_attempt(q, t, ground, n, seed, attempt, node_cap)
    return attempt, sizes


def _first_failure(attempt: int, sizes: tuple[int, ...], t: int) -> AttemptFailure | None:
    for color, size in enumerate(sizes, start=1):
        if size >= t:
            return AttemptFailure(attempt, color, size)
    return None


def find_witness(
    q: int,
    t: int,
    n: int,
    max_attempts: int,
    seed: int,
    jobs: int = 1,
    enum_cap: int = DEFAULT_ENUM_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
) -> WitnessCertificate | WitnessSearchFailure:
    """Search seeded attempts for a coloring whose every color class has
    max clique size below t.

    Attempts are independent given their derived seeds, so they may run
    concurrently (jobs > 1); the lowest successful attempt index always
    wins, making the outcome identical to a sequential run.
    """
    modulus = PrimeModulus(q)
    if t < 1 or t % q == 0:
        raise ParameterError(f"t={t} must be positive and nonzero mod q={q}")
    if n < 2:
        raise ParameterError("need at least two vertices")
    if max_attempts < 1:
        raise ParameterError("need at least one attempt")
    ground = enumerate_isotropic(modulus, t, cap=enum_cap)
    if n > len(ground):
        raise CapacityError(f"n={n} exceeds the ground set size {len(ground)}")
    failures: list[AttemptFailure] = []

    def certificate(attempt: int) -> WitnessCertificate:
        verts, col, sizes = _run_attempt(q, t, ground, n, seed, attempt, node_cap)
        return WitnessCertificate(
            q, t, q + 1, n, seed, attempt, tuple(verts), col.to_text(), sizes, "pass"
        )

    if jobs <= 1:
        for k in range(1, max_attempts + 1):
            verts, col, sizes = _run_attempt(q, t, ground, n, seed, k, node_cap)
            bad = _first_failure(k, sizes, t)
            if bad is None:
                return WitnessCertificate(
                    q, t, q + 1, n, seed, k, tuple(verts), col.to_text(), sizes, "pass"
                )
            failures.append(bad)
        return WitnessSearchFailure(q, t, n, seed, tuple(failures))

    coords = tuple(v.coords for v in ground.vectors)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for wave_start in range(1, max_attempts + 1, jobs):
            wave = range(wave_start, min(wave_start + jobs, max_attempts + 1))
            futures = [
                pool.submit(_attempt_sizes_worker, q, t, coords, n, seed, k, node_cap)
                for k in wave
            ]
            winner = None
            for fut in futures:
                k, sizes = fut.result()
                if winner is not None:
                    continue
                bad = _first_failure(k, sizes, t)
                if bad is None:
                    winner = k
                else:
                    failures.append(bad)
            if winner is not None:
                return certificate(winner)
    return WitnessSearchFailure(q, t, n, seed, tuple(failures))


def reverify(cert: WitnessCertificate) -> bool:
    """Rebuild the coloring from the stored fields, compare byte for byte,
    and re-run the clique search; True only when everything matches."""
    try:
        modulus = PrimeModulus(cert.q)
        if cert.num_colors != cert.q + 1:
            return False
        if cert.verdict != "pass":
            return False
        if len(cert.vectors) != cert.n:
            return False
        sk = attempt_seed(cert.seed, cert.attempt)
        params = ConstructionParams(modulus, cert.t, sk, cert.n)
        rebuilt = build_field_coloring(params, cert.vectors)
        if rebuilt.to_text() != cert.coloring_text:
            return False
        sizes = tuple(
            max_monochromatic_clique(rebuilt, c).size for c in range(1, cert.num_colors + 1)
        )
        if sizes != cert.max_clique_sizes:
            return False
        return all(s < cert.t for s in sizes)
    except RamseyLBError:
        return False


def certificate_to_text(cert: WitnessCertificate) -> str:
    lines = [
        CERTIFICATE_MAGIC,
        f"q={cert.q}",
        f"t={cert.t}",
        f"colors={cert.num_colors}",
        f"n={cert.n}",
        f"seed={cert.seed}",
        f"attempt={cert.attempt}",
        "max-clique-sizes=" + " ".join(str(s) for s in cert.max_clique_sizes),
        f"verdict={cert.verdict}",
        "vectors:",
    ]
    lines.extend(v.text_form() for v in cert.vectors)
    lines.append("coloring:")
    return "\n".join(lines) + "\n" + cert.coloring_text


def _header_int(lines: list[str], pos: int, key: str) -> int:
    if pos >= len(lines) or not lines[pos].startswith(key + "="):
        raise FormatError(f"expected '{key}=' on certificate line {pos + 1}")
    try:
        return int(lines[pos][len(key) + 1 :])
    except ValueError as exc:
        raise FormatError(f"non-integer value for '{key}'") from exc


def certificate_from_text(text: str) -> WitnessCertificate:
    head, sep, coloring_text = text.partition("\ncoloring:\n")
    if not sep:
        raise FormatError("certificate is missing its coloring block")
    lines = head.splitlines()
    if not lines or lines[0] != CERTIFICATE_MAGIC:
        raise FormatError("missing certificate magic line")
    q = _header_int(lines, 1, "q")
    t = _header_int(lines, 2, "t")
    num_colors = _header_int(lines, 3, "colors")
    n = _header_int(lines, 4, "n")
    seed = _header_int(lines, 5, "seed")
    attempt = _header_int(lines, 6, "attempt")
    if len(lines) < 9 or not lines[7].startswith("max-clique-sizes="):
        raise FormatError("expected 'max-clique-sizes=' on certificate line 8")
    try:
        sizes = tuple(int(x) for x in lines[7][len("max-clique-sizes=") :].split())
    except ValueError as exc:
        raise FormatError("non-integer clique size") from exc
    if not lines[8].startswith("verdict="):
        raise FormatError("expected 'verdict=' on certificate line 9")
    verdict = lines[8][len("verdict=") :]
    if len(lines) < 10 or lines[9] != "vectors:":
        raise FormatError("expected 'vectors:' on certificate line 10")
    vector_lines = lines[10:]
    if len(vector_lines) != n:
        raise FormatError(f"expected {n} vector lines, found {len(vector_lines)}")
    vectors = tuple(FieldVector.from_text(line) for line in vector_lines)
    for v in vectors:
        if v.q != q or len(v) != t:
            raise FormatError("vector does not match the certificate's q and t")
    if len(sizes) != num_colors:
        raise FormatError(f"expected {num_colors} clique sizes, found {len(sizes)}")
    embedded = EdgeColoring.from_text(coloring_text)
    if embedded.n != n or embedded.num_colors != num_colors:
        raise FormatError("embedded coloring disagrees with the certificate header")
    return WitnessCertificate(
        q, t, num_colors, n, seed, attempt, vectors, coloring_text, sizes, verdict
    )


def reverify_text(text: str) -> bool:
    """reverify() on serialized input; malformed text is simply invalid."""
    try:
        cert = certificate_from_text(text)
    except RamseyLBError:
        return False
    return reverify(cert)
