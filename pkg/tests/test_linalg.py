import random

from affine_crystals.cartan import RootVec
from affine_crystals.linalg import (
    PRIME,
    gm_compose,
    gm_from_blocks,
    gm_identity,
    gm_is_zero,
    gm_kernel_dims,
    gm_power,
    gm_zero,
    kernel_dim,
    nullspace_exact,
    nullspace_modp,
    rank_bareiss,
    rank_modp,
)


def test_rank_basics():
    assert rank_modp([[1, 2], [2, 4]]) == 1
    assert rank_bareiss([[1, 2], [2, 4]]) == 1
    assert rank_modp([]) == 0
    assert rank_bareiss([[0, 0], [0, 0]]) == 0


def test_nullspace_zero_and_invertible():
    assert len(nullspace_modp([[0, 0, 0]] * 3, 3)) == 3
    assert nullspace_modp([[2, 1], [1, 1]], 2) == []
    assert len(nullspace_exact([[0] * 4] * 2, 4)) == 4
    assert nullspace_exact([[1, 0], [0, 3]], 2) == []


def test_nullspace_vectors_annihilate():
    rng = random.Random(3)
    for _ in range(25):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        a = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        for v in nullspace_exact(a, cols):
            assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)
        for v in nullspace_modp(a, cols):
            assert all(sum(x * y for x, y in zip(row, v)) % PRIME == 0 for row in a)


def test_modp_agrees_with_exact_on_random_small_integers():
    rng = random.Random(9)
    for _ in range(40):
        rows = rng.randint(1, 7)
        cols = rng.randint(1, 7)
        a = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        assert rank_modp(a) == rank_bareiss(a)
        assert len(nullspace_modp(a, cols)) == len(nullspace_exact(a, cols))


def _unit_map(dims, shift, entries):
    m = len(dims)
    blocks = [[[0] * dims[(i - shift) % m] for _ in range(dims[i])] for i in range(m)]
    for i, r, c in entries:
        blocks[i][r][c] = 1
    return gm_from_blocks(dims, shift, blocks)


def test_graded_compose_shift_bookkeeping():
    dims = (2, 1, 1)
    up = gm_zero(dims, 1)
    down = gm_zero(dims, -1)
    assert gm_compose(up, down).shift == 0
    assert gm_compose(up, up).shift == 2
    ident = gm_identity(dims)
    some = _unit_map(dims, 1, [(1, 0, 0)])
    assert gm_compose(some, ident) == some


def test_graded_kernel_dims():
    dims = (2, 1, 0)
    z = gm_zero(dims, 1)
    assert gm_kernel_dims(z) == RootVec(dims)
    assert kernel_dim([[1, 0], [0, 1]]) == 0
    assert kernel_dim([[0, 0], [0, 0]]) == 2
    inj = _unit_map((1, 1, 1), 1, [(0, 0, 0), (1, 0, 0), (2, 0, 0)])
    assert gm_kernel_dims(inj) == RootVec((0, 0, 0))


def test_power_and_zero_components():
    # one component empty: composition through it must keep shapes straight
    dims = (1, 0, 1)
    x = _unit_map(dims, 1, [(0, 0, 0)])  # v^2_0 -> v^0_0
    sq = gm_compose(x, x, PRIME)
    assert sq.shift == 2
    assert gm_kernel_dims(sq, PRIME) == RootVec((1, 0, 1))
    assert gm_is_zero(gm_power(x, 3, PRIME))
