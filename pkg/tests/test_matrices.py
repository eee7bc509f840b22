import random

import pytest

from toriq.matrices import (
    IDENTITY,
    mat_det,
    mat_inv,
    mat_mul,
    mat_order,
    mat_pow,
    mat_rank,
    mat_sub_identity,
)

ROT4 = (1, 0, 0, 0, 0, -1, 0, 1, 0)
PERM3 = (0, 1, 0, 0, 0, 1, 1, 0, 0)


def random_unimodular(rng, steps=12):
    m = IDENTITY
    shears = []
    for i in range(3):
        for j in range(3):
            if i != j:
                s = [0] * 9
                for k in range(3):
                    s[3 * k + k] = 1
                s[3 * i + j] = 1
                shears.append(tuple(s))
    for _ in range(steps):
        m = mat_mul(m, rng.choice(shears))
    return m


def test_mul_identity():
    assert mat_mul(ROT4, IDENTITY) == ROT4
    assert mat_mul(IDENTITY, ROT4) == ROT4


def test_det_and_inverse():
    rng = random.Random(1)
    for _ in range(50):
        m = random_unimodular(rng)
        assert mat_det(m) == 1
        assert mat_mul(m, mat_inv(m)) == IDENTITY


def test_inverse_requires_unimodular():
    with pytest.raises(ValueError):
        mat_inv((2, 0, 0, 0, 1, 0, 0, 0, 1))


def test_pow():
    assert mat_pow(ROT4, 4) == IDENTITY
    assert mat_pow(ROT4, -1) == mat_pow(ROT4, 3)
    assert mat_pow(PERM3, 3) == IDENTITY


def test_order():
    assert mat_order(ROT4) == 4
    assert mat_order(PERM3) == 3
    assert mat_order(IDENTITY) == 1


def test_rank_minus_identity():
    assert mat_rank(mat_sub_identity(IDENTITY)) == 0
    neg = tuple(-x for x in IDENTITY)
    assert mat_rank(mat_sub_identity(neg)) == 3
    assert mat_rank(mat_sub_identity((1, 0, 0, 0, -1, 0, 0, 0, -1))) == 2
    assert mat_rank(mat_sub_identity((-1, 0, 0, 0, 1, 0, 0, 0, 1))) == 1
    assert mat_rank(mat_sub_identity(PERM3)) == 2


def test_rank_is_conjugation_invariant():
    rng = random.Random(7)
    for m in (ROT4, PERM3, (1, 0, 0, 0, -1, 0, 0, 0, -1)):
        base = mat_rank(mat_sub_identity(m))
        for _ in range(25):
            g = random_unimodular(rng)
            conj = mat_mul(mat_mul(g, m), mat_inv(g))
            assert mat_rank(mat_sub_identity(conj)) == base
