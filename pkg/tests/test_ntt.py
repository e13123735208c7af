import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import negacyclic_convolution
from pqcost.ntt import NttParams, find_ntt_params, is_prime, ntt_forward, ntt_inverse, ntt_polynomial_multiply

P4 = find_ntt_params(4, 17)
P8 = find_ntt_params(8, 17)
P256 = find_ntt_params(256, 7681)
P1024 = find_ntt_params(1024, 12289)


def test_params_satisfy_root_conditions():
    for p in (P4, P8, P256, P1024):
        assert pow(p.root, 2 * p.n, p.q) == 1
        assert pow(p.root, p.n, p.q) == p.q - 1


@pytest.mark.parametrize("n,q,root", [(3, 17, 2), (4, 15, 2), (4, 19, 2), (4, 17, 1), (4, 17, 4)])
def test_params_rejected(n, q, root):
    with pytest.raises(ValueError):
        NttParams(n, q, root)


def test_is_prime_small_table():
    assert [x for x in range(60) if is_prime(x)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert is_prime(8380417) and not is_prime(8380417 * 3329)


def test_identity_polynomial():
    b = [5, 0, 16, 3]
    assert ntt_polynomial_multiply([1, 0, 0, 0], b, P4)[0] == b


def test_n4_all_scaled_monomial_pairs():
    for i, j in itertools.product(range(4), repeat=2):
        for c1, c2 in itertools.product(range(17), repeat=2):
            a = [0] * 4
            b = [0] * 4
            a[i], b[j] = c1, c2
            assert ntt_polynomial_multiply(a, b, P4)[0] == negacyclic_convolution(a, b, 17)


def test_n4_every_a_against_fixed_b():
    b = [3, 14, 0, 9]
    b_hat = ntt_forward(b, P4)
    for a in itertools.product(range(17), repeat=4):
        a = list(a)
        pointwise = [x * y % 17 for x, y in zip(ntt_forward(a, P4), b_hat)]
        assert ntt_inverse(pointwise, P4) == negacyclic_convolution(a, b, 17)


@pytest.mark.parametrize("params", [P8, P256], ids=["n8", "n256"])
def test_random_pairs_match_convolution(params):
    rng = random.Random(f"ntt:{params.n}")
    for _ in range(100):
        a = [rng.randrange(params.q) for _ in range(params.n)]
        b = [rng.randrange(params.q) for _ in range(params.n)]
        assert ntt_polynomial_multiply(a, b, params)[0] == negacyclic_convolution(a, b, params.q)


def test_round_trip_256():
    rng = random.Random(1)
    x = [rng.randrange(P256.q) for _ in range(256)]
    assert ntt_inverse(ntt_forward(x, P256), P256) == x


def test_cycles_default_to_point_count():
    _, cycles = ntt_polynomial_multiply([0] * 1024, [0] * 1024, P1024)
    assert cycles == 2068
    _, cycles = ntt_polynomial_multiply([1, 0, 0, 0], [1, 0, 0, 0], P4, m=3072)
    assert cycles == 2 * 3072 + 4


def test_bad_inputs_rejected():
    with pytest.raises(ValueError):
        ntt_forward([1, 2, 3], P4)
    with pytest.raises(ValueError):
        ntt_forward([1, 2, 3, 17], P4)


@given(st.lists(st.integers(0, 12288), min_size=1024, max_size=1024))
def test_round_trip_property(x):
    assert ntt_inverse(ntt_forward(x, P1024), P1024) == x


@given(st.lists(st.integers(0, 16), min_size=8, max_size=8), st.lists(st.integers(0, 16), min_size=8, max_size=8))
def test_transform_is_linear(a, b):
    s = [(x + y) % 17 for x, y in zip(a, b)]
    fa, fb, fs = ntt_forward(a, P8), ntt_forward(b, P8), ntt_forward(s, P8)
    assert fs == [(x + y) % 17 for x, y in zip(fa, fb)]
