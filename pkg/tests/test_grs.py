import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qmds.gf import field_for_q
from qmds.grs import (
    EnumerationBoundError,
    GrsCode,
    generator_matrix,
    hermitian_gram,
    hermitian_inner,
    is_mds,
    min_distance_enumerate,
    power_sum_check,
)
from qmds.linalg import ExactMatrix

from oracle import NaiveField, brute_min_distance


def test_generator_matrix_example():
    ctx = field_for_q(2)
    w = ctx.primitive
    C = GrsCode(ctx, (0, 1, w), (1, 1, 1), 2)
    G = generator_matrix(C)
    assert G.row(0) == [1, 1, 1]  # 0^0 = 1
    assert G.row(1) == [0, 1, w]


def test_grs_validation():
    ctx = field_for_q(3)
    with pytest.raises(ValueError):
        GrsCode(ctx, (1, 1), (1, 1), 1)
    with pytest.raises(ValueError):
        GrsCode(ctx, (1, 2), (1, 0), 1)
    with pytest.raises(ValueError):
        GrsCode(ctx, (1, 2), (1, 1), 3)
    with pytest.raises(ValueError):
        GrsCode(ctx, (1, 2), (1,), 1)


def test_hermitian_inner_example():
    ctx = field_for_q(3)
    w = ctx.primitive
    # <w, w> = w^(q+1) = norm
    assert hermitian_inner(ctx, [w], [w]) == ctx.norm(w)
    assert hermitian_inner(ctx, [1, 1, 1, 1], [1, 1, 1, 1]) == ctx.from_int(1)
    with pytest.raises(ValueError):
        hermitian_inner(ctx, [1], [1, 1])


def test_full_length_code_is_self_orthogonal_for_small_k():
    # all of GF(q^2) with unit multipliers: sum of a^(qi+j) vanishes while qi+j < q^2-1
    ctx = field_for_q(3)
    C = GrsCode(ctx, tuple(range(ctx.order)), (1,) * ctx.order, 2)
    assert hermitian_gram(C).is_zero()
    assert power_sum_check(C)
    assert not power_sum_check(GrsCode(ctx, tuple(range(ctx.order)), (1,) * ctx.order, 3))


def test_gram_matches_pairwise_inner_products():
    ctx = field_for_q(4)
    rng = np.random.default_rng(0)
    a = rng.choice(ctx.order, size=7, replace=False)
    v = rng.integers(1, ctx.order, size=7)
    C = GrsCode(ctx, tuple(a), tuple(v), 3)
    G = generator_matrix(C)
    gram = hermitian_gram(C)
    for i, j in itertools.product(range(3), repeat=2):
        assert gram[i, j] == hermitian_inner(ctx, G.row(i), G.row(j))
    assert hermitian_gram(G) == gram


@st.composite
def random_code(draw, q_choices=(2, 3, 4, 5)):
    ctx = field_for_q(draw(st.sampled_from(q_choices)))
    n = draw(st.integers(2, min(ctx.order, 10)))
    a = draw(st.lists(st.integers(0, ctx.order - 1), min_size=n, max_size=n, unique=True))
    v = draw(st.lists(st.integers(1, ctx.order - 1), min_size=n, max_size=n))
    k = draw(st.integers(1, n))
    return GrsCode(ctx, tuple(a), tuple(v), k)


@settings(max_examples=150, deadline=None)
@given(random_code())
def test_power_sums_equivalent_to_gram(C):
    assert power_sum_check(C) == hermitian_gram(C).is_zero()


@st.composite
def orthogonal_code(draw):
    # full-length code whose multipliers all have norm 1
    q = draw(st.sampled_from([2, 3, 4, 5]))
    ctx = field_for_q(q)
    k = draw(st.integers(1, max(1, q - 1)))
    v = [draw(st.integers(0, q)) for _ in range(ctx.order)]
    # every v_j with norm 1: omega^((q-1) * i)
    vv = tuple(ctx.omega_pow((q - 1) * i) for i in v)
    return GrsCode(ctx, tuple(range(ctx.order)), vv, k)


@settings(max_examples=40, deadline=None)
@given(orthogonal_code())
def test_gram_depends_only_on_norms(C):
    ones = GrsCode(C.ctx, C.a, (1,) * C.n, C.k)
    assert hermitian_gram(C).is_zero() == hermitian_gram(ones).is_zero()


@settings(max_examples=40, deadline=None)
@given(random_code(q_choices=(2, 3, 4)))
def test_grs_codes_are_mds(C):
    verdict = is_mds(C)
    assert verdict.ok and not verdict.probabilistic
    assert bool(verdict)


def test_is_mds_detects_non_mds_matrix():
    ctx = field_for_q(3)
    G = ExactMatrix.from_rows(ctx, [[1, 1, 0, 1], [0, 0, 1, 1]])
    v = is_mds(G)
    assert not v.ok and not v


def test_is_mds_sampled_path():
    ctx = field_for_q(5)
    C = GrsCode(ctx, tuple(range(20)), (1,) * 20, 10)
    v = is_mds(C, exhaustive_bound=1000, samples=500, seed=3)
    assert v.ok and v.probabilistic and v.subsets_checked == 500


def test_min_distance_example_q3():
    ctx = field_for_q(3)
    w = ctx.primitive
    C = GrsCode(ctx, (0, 1, w, ctx.pow(w, 2)), (1, 1, 1, 1), 2)
    nf = NaiveField(3, 1)
    G = [[ctx.to_poly(x) for x in row] for row in generator_matrix(C).to_rows()]
    assert brute_min_distance(nf, G) == 3
    assert min_distance_enumerate(C) == 3


@pytest.mark.parametrize("q,n,k", [(2, 4, 2), (2, 3, 3), (3, 6, 2), (4, 5, 2)])
def test_min_distance_against_brute_force(q, n, k):
    ctx = field_for_q(q)
    rng = np.random.default_rng(q * 100 + n)
    a = rng.choice(ctx.order, size=n, replace=False)
    v = rng.integers(1, ctx.order, size=n)
    C = GrsCode(ctx, tuple(a), tuple(v), k)
    nf = NaiveField(ctx.p, ctx.e)
    G = [[ctx.to_poly(x) for x in row] for row in generator_matrix(C).to_rows()]
    assert min_distance_enumerate(C) == brute_min_distance(nf, G) == n - k + 1


def test_min_distance_non_mds_and_bound():
    ctx = field_for_q(3)
    G = ExactMatrix.from_rows(ctx, [[1, 1, 0, 1], [0, 0, 1, 1]])
    assert min_distance_enumerate(G) == 2
    C = GrsCode(ctx, tuple(range(9)), (1,) * 9, 9)
    with pytest.raises(EnumerationBoundError):
        min_distance_enumerate(C, bound=1000)
