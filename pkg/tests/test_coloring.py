import math

import pytest

from ramseylb.coloring import (
    ConstructionParams,
    EdgeColoring,
    build_field_coloring,
    build_paley,
    build_two_color,
    dot_two_coloring,
    edge_color,
    pair_identity,
    sample_binary_vectors,
)
from ramseylb.errors import CapacityError, FormatError, ParameterError
from ramseylb.field import FieldVector, PrimeModulus, dot
from ramseylb.isotropic import enumerate_isotropic

M2, M3 = PrimeModulus(2), PrimeModulus(3)


def fv(modulus, *coords):
    return FieldVector(modulus, tuple(coords))


# ---------------------------------------------------------------------------
# edge_color
# ---------------------------------------------------------------------------

def test_nonzero_product_color_is_seed_independent():
    u = fv(M3, 1, 1, 1, 0)  # self product 0
    v = fv(M3, 0, 1, 1, 1)
    assert dot(u, v) == 2
    for seed in range(50):
        assert edge_color(u, v, seed) == 2


def test_unit_product_example():
    u = fv(M2, 1, 1, 0, 0, 0)
    v = fv(M2, 1, 0, 1, 0, 0)
    assert edge_color(u, v, 3) == 1


def test_zero_product_coin_colors_and_frequency():
    u = fv(M2, 0, 1, 1, 0, 0)
    v = fv(M2, 0, 0, 0, 1, 1)
    assert dot(u, v) == 0
    seen = [edge_color(u, v, seed) for seed in range(10_000)]
    assert set(seen) <= {2, 3}
    freq = seen.count(2) / len(seen)
    se = math.sqrt(0.25 / len(seen))
    assert abs(freq - 0.5) <= 5 * se


def test_edge_color_rejects_self_loop_and_anisotropic():
    u = fv(M3, 1, 1, 1, 0)
    with pytest.raises(ParameterError):
        edge_color(u, u, 0)
    with pytest.raises(ParameterError):
        edge_color(u, fv(M3, 1, 0, 0, 0), 0)


def test_pair_identity_is_order_free():
    u = fv(M3, 1, 1, 1, 0)
    v = fv(M3, 0, 1, 1, 1)
    assert pair_identity(u, v) == pair_identity(v, u)


# ---------------------------------------------------------------------------
# the (q+1)-color construction
# ---------------------------------------------------------------------------

def test_field_coloring_color_rule_on_full_ground_set():
    vs = enumerate_isotropic(M2, 5).vectors  # 16 vectors
    params = ConstructionParams(M2, 5, seed=11, n=len(vs))
    col = build_field_coloring(params, vs)
    assert col.num_colors == 3
    for i, j, c in col.pairs():
        d = dot(vs[i], vs[j])
        if d != 0:
            assert c == d
        else:
            assert c in (2, 3)


def test_field_coloring_deterministic():
    vs = enumerate_isotropic(M3, 4).vectors[:12]
    params = ConstructionParams(M3, 4, seed=21, n=12)
    assert build_field_coloring(params, vs).to_text() == build_field_coloring(params, vs).to_text()


def test_field_coloring_restriction_consistency():
    vs = enumerate_isotropic(M2, 5).vectors
    params = ConstructionParams(M2, 5, seed=33, n=len(vs))
    full = build_field_coloring(params, vs)
    subset = [1, 4, 7, 8, 12, 15]
    direct = build_field_coloring(
        ConstructionParams(M2, 5, seed=33, n=len(subset)), [vs[i] for i in subset]
    )
    assert full.induced(subset) == direct


def test_construction_params_validation():
    with pytest.raises(ParameterError):
        ConstructionParams(M2, 4, seed=0, n=4)  # t = 0 mod q
    with pytest.raises(ParameterError):
        ConstructionParams(M3, 4, seed=0, n=1)


def test_field_coloring_input_validation():
    vs = list(enumerate_isotropic(M3, 4).vectors[:5])
    params = ConstructionParams(M3, 4, seed=0, n=5)
    with pytest.raises(ParameterError):
        build_field_coloring(params, vs[:4])
    with pytest.raises(ParameterError):
        build_field_coloring(params, vs[:4] + [vs[0]])


# ---------------------------------------------------------------------------
# two-color construction
# ---------------------------------------------------------------------------

def test_two_color_rule_matches_dot():
    verts = sample_binary_vectors(8, 20, seed=5)
    col = dot_two_coloring(verts)
    for i, j, c in col.pairs():
        assert c == (1 if dot(verts[i], verts[j]) == 0 else 2)


def test_two_color_not_isotropy_filtered():
    # with a fixed seed some sampled vectors have odd weight
    verts = sample_binary_vectors(8, 40, seed=5)
    assert any(sum(v.coords) % 2 == 1 for v in verts)


def test_two_color_determinism_and_symmetry():
    a = build_two_color(4, 40, seed=6)
    b = build_two_color(4, 40, seed=6)
    assert a.to_text() == b.to_text()
    assert a.color(3, 17) == a.color(17, 3)


def test_two_color_capacity():
    with pytest.raises(CapacityError):
        build_two_color(1, 5, seed=0)  # 2^2 = 4 < 5
    assert build_two_color(1, 4, seed=0).n == 4


# ---------------------------------------------------------------------------
# quadratic-residue coloring
# ---------------------------------------------------------------------------

def test_paley_5_is_the_pentagon():
    col = build_paley(5)
    cycle = {frozenset(((i, (i + 1) % 5))) for i in range(5)}
    for i, j, c in col.pairs():
        assert c == (1 if frozenset((i, j)) in cycle else 2)


def test_paley_13_is_6_regular():
    col = build_paley(13)
    adj = col.color_class_bitsets(1)
    assert all(a.bit_count() == 6 for a in adj)


def test_paley_rejects_3_mod_4_and_composites():
    with pytest.raises(ParameterError):
        build_paley(7)
    with pytest.raises(ParameterError):
        build_paley(15)


# ---------------------------------------------------------------------------
# EdgeColoring container + file format
# ---------------------------------------------------------------------------

def test_coloring_accessor_and_validation():
    col = EdgeColoring(3, 2, ((1, 2), (2,)))
    assert col.color(0, 1) == 1
    assert col.color(2, 0) == 2
    with pytest.raises(ParameterError):
        col.color(1, 1)
    with pytest.raises(ParameterError):
        EdgeColoring(3, 2, ((1, 3), (2,)))  # color out of range
    with pytest.raises(ParameterError):
        EdgeColoring(3, 2, ((1,), (2,)))  # bad row length


def test_file_format_roundtrip():
    col = build_paley(13)
    text = col.to_text()
    parsed = EdgeColoring.from_text(text)
    assert parsed == col
    assert parsed.to_text() == text


def test_file_format_rejects_malformed():
    good = build_paley(5).to_text()
    cases = [
        "bogus\n" + good,
        good.replace("n=5 colors=2", "n=5colors=2"),
        good.replace("n=5", "n=6"),  # wrong data line count
        good[:-3] + "9\n",  # out-of-range color
        good + "1 1\n",  # trailing junk
    ]
    for text in cases:
        with pytest.raises(FormatError):
            EdgeColoring.from_text(text)


def test_induced_validation():
    col = build_paley(5)
    with pytest.raises(ParameterError):
        col.induced([])
    with pytest.raises(ParameterError):
        col.induced([0, 0, 1])
